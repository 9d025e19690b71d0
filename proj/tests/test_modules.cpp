#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "quivhom/kupisch.hpp"
#include "quivhom/representation.hpp"

using namespace quivhom;

namespace {

const PrimeField F101(101);

Algebra a2() {
    return build_monomial_algebra(F101, Quiver(2, {{0, 1, 2, "a"}}), {});
}
Algebra kup221() {
    return nakayama_from_kupisch(F101, {KupischShape::Linear, {2, 2, 1}});
}
Algebra dual_numbers() {
    return build_monomial_algebra(F101, Quiver(1, {{0, 1, 1, "x"}}), {PathWord{1, {0, 0}}});
}
Algebra truncated_cubic() {
    return build_monomial_algebra(F101, Quiver(1, {{0, 1, 1, "x"}}), {PathWord{1, {0, 0, 0}}});
}

} // namespace

TEST_CASE("simple modules") {
    CHECK(simple(a2(), 1).dims() == std::vector<int>{1, 0});
    CHECK(simple(kup221(), 3).dims() == std::vector<int>{0, 0, 1});
    CHECK_THROWS_AS(simple(a2(), 3), std::invalid_argument);

    // the sum of all simples is A/J
    Algebra k = kup221();
    std::vector<Representation> parts;
    for (int v = 1; v <= 3; ++v)
        parts.push_back(simple(k, v));
    Representation sum = direct_sum(parts);
    Representation aj = radical_layer_quotient(k, 0, 1);
    CHECK(sum.dims() == aj.dims());
    CHECK(aj.is_semisimple());
}

TEST_CASE("projective modules") {
    CHECK(projective(kup221(), 1).dims() == std::vector<int>{1, 1, 0});
    CHECK(projective(dual_numbers(), 1).dims() == std::vector<int>{2});
    CHECK(projective(a2(), 2) == simple(a2(), 2));
}

TEST_CASE("injective modules") {
    Algebra k = kup221();
    Representation i2 = injective(k, 2);
    CHECK(i2.dims() == std::vector<int>{1, 1, 0});
    CHECK(is_isomorphic(i2, projective(k, 1), 7).verdict == Iso::Yes);

    CHECK(injective(a2(), 1) == simple(a2(), 1)); // nothing ends at vertex 1

    Algebra d = dual_numbers();
    Representation i1 = injective(d, 1);
    CHECK(i1.dims() == std::vector<int>{2});
    CHECK(is_isomorphic(i1, radical_power_module(d, 0), 7).verdict == Iso::Yes);
}

TEST_CASE("radical powers of the regular module") {
    Algebra k = kup221();
    Representation j = radical_power_module(k, 1);
    CHECK(j.dims() == std::vector<int>{0, 1, 1});

    Representation reg = radical_power_module(k, 0);
    std::vector<int> col_sums(3, 0);
    for (int v = 1; v <= 3; ++v) {
        const auto d = projective(k, v).dims();
        for (int w = 0; w < 3; ++w)
            col_sums[w] += d[w];
    }
    CHECK(reg.dims() == col_sums);

    CHECK(radical_power_module(k, 2).is_zero()); // J^2 = 0 here
    CHECK(radical_power_module(dual_numbers(), 2).is_zero());
}

TEST_CASE("radical layer quotients") {
    Algebra k = kup221();
    Representation jq = radical_layer_quotient(k, 1, 2);
    CHECK(jq.dims() == std::vector<int>{0, 1, 1});
    CHECK(jq.is_semisimple());

    Representation topa = radical_layer_quotient(k, 0, 1);
    CHECK(topa.dims() == std::vector<int>{1, 1, 1});

    Representation layer = radical_layer_quotient(truncated_cubic(), 1, 2);
    CHECK(layer.dims() == std::vector<int>{1});
    CHECK(layer.is_semisimple());

    CHECK_THROWS_AS(radical_layer_quotient(k, 2, 2), std::invalid_argument);
}

TEST_CASE("J/J^2 is semisimple for every construction") {
    for (Algebra a : {a2(), kup221(), truncated_cubic(),
                      nakayama_from_kupisch(F101, {KupischShape::Cyclic, {4, 4, 3}}),
                      radical_square_zero(F101, Quiver(2, {{0, 1, 2, "a"}, {1, 1, 2, "b"}}))})
        CHECK(radical_layer_quotient(a, 1, 2).is_semisimple());
}

TEST_CASE("duality") {
    Algebra k = kup221();
    for (int v = 1; v <= 3; ++v)
        CHECK(dual(simple(k, v)) == simple(opposite(k), v));

    Representation j = radical_power_module(k, 1);
    CHECK(dual(j).dims() == j.dims());

    // applying the duality twice restores the module on the nose
    Representation p1 = projective(k, 1);
    Representation dd = dual(dual(p1));
    CHECK(dd.dims() == p1.dims());
    for (int id = 0; id < k.quiver().arrow_count(); ++id)
        CHECK(dd.arrow_map(id) == p1.arrow_map(id));

    // Hom dimensions transpose under duality
    for (int v = 1; v <= 3; ++v)
        for (int w = 1; w <= 3; ++w)
            CHECK(hom_space(projective(k, v), projective(k, w)).dimension ==
                  hom_space(dual(projective(k, w)), dual(projective(k, v))).dimension);
}

TEST_CASE("top and socle") {
    Algebra k = kup221();
    for (int v = 1; v <= 3; ++v) {
        CHECK(top(projective(k, v)).dims() == simple(k, v).dims());
        CHECK(socle(injective(k, v)).dims() == simple(k, v).dims());
    }
    Representation j = radical_power_module(k, 1);
    CHECK(top(j).dims() == std::vector<int>{0, 1, 1}); // S2 + S3

    CHECK_THROWS_AS(top(Representation::zero(k)), ZeroModuleError);
    CHECK_THROWS_AS(socle(Representation::zero(k)), ZeroModuleError);

    // socle of m has the dims of top of the dual
    for (Representation m : {projective(k, 1), j, injective(k, 3), radical_power_module(k, 0)})
        CHECK(socle(m).dims() == top(dual(m)).dims());
}

TEST_CASE("hom spaces over A2") {
    Algebra a = a2();
    CHECK(hom_space(projective(a, 1), projective(a, 1)).dimension == 1);
    CHECK(hom_space(simple(a, 1), projective(a, 1)).dimension == 0);
    CHECK(hom_space(projective(a, 1), simple(a, 1)).dimension == 1);
    CHECK_THROWS_AS(hom_space(simple(a, 1), simple(kup221(), 1)), std::invalid_argument);

    // every hom basis element is a valid map (validated on construction)
    HomSpace hs = hom_space(projective(a, 1), projective(a, 1));
    REQUIRE(hs.dimension == (int)hs.basis.size());
}

TEST_CASE("isomorphism testing") {
    Algebra k = kup221();
    CHECK(is_isomorphic(simple(k, 1), simple(k, 2), 1).verdict == Iso::No);
    Representation p1 = projective(k, 1);
    IsoResult self = is_isomorphic(p1, p1, 1);
    CHECK(self.verdict == Iso::Yes);
    REQUIRE(self.witness.has_value());
    CHECK(self.witness->is_isomorphism());

    // same dims, non-isomorphic: S2 + S3 vs the uniserial P2
    Representation ss = direct_sum({simple(k, 2), simple(k, 3)});
    CHECK(is_isomorphic(ss, projective(k, 2), 1).verdict == Iso::No);
    CHECK(is_isomorphic(radical_power_module(k, 1), ss, 1).verdict == Iso::Yes);

    CHECK(is_isomorphic(Representation::zero(k), Representation::zero(k), 1).verdict == Iso::Yes);
}

TEST_CASE("projective covers") {
    Algebra k = kup221();
    ProjectiveCover c1 = projective_cover(simple(k, 1));
    CHECK(c1.multiplicities == std::vector<int>{1, 0, 0});
    CHECK(c1.cover_module == projective(k, 1));

    ProjectiveCover cj = projective_cover(radical_power_module(k, 1));
    CHECK(cj.multiplicities == std::vector<int>{0, 1, 1});
    CHECK(cj.cover.is_surjective());

    // covering a projective is an isomorphism
    ProjectiveCover cp = projective_cover(projective(k, 2));
    CHECK(cp.cover.is_isomorphism());

    CHECK_THROWS_AS(projective_cover(Representation::zero(k)), ZeroModuleError);

    // minimality: the cover induces an isomorphism on tops
    for (Representation m : {simple(k, 1), radical_power_module(k, 1), injective(k, 3)}) {
        ProjectiveCover c = projective_cover(m);
        CHECK(top(c.cover_module).dims() == top(m).dims());
    }
}

TEST_CASE("injective envelopes") {
    Algebra k = kup221();
    InjectiveEnvelope e2 = injective_envelope(simple(k, 2));
    CHECK(e2.multiplicities == std::vector<int>{0, 1, 0});
    CHECK(is_isomorphic(e2.envelope, projective(k, 1), 3).verdict == Iso::Yes);

    InjectiveEnvelope ei = injective_envelope(injective(k, 3));
    CHECK(ei.embedding.is_isomorphism());

    // the envelope of the regular module of a Nakayama algebra is projective
    InjectiveEnvelope er = injective_envelope(radical_power_module(k, 0));
    Representation expected = direct_sum({projective(k, 1), projective(k, 2), projective(k, 2)});
    CHECK(is_isomorphic(er.envelope, expected, 3).verdict == Iso::Yes);

    CHECK_THROWS_AS(injective_envelope(Representation::zero(k)), ZeroModuleError);

    // minimality on socles
    for (Representation m : {simple(k, 2), radical_power_module(k, 0), projective(k, 1)}) {
        InjectiveEnvelope e = injective_envelope(m);
        CHECK(socle(e.envelope).dims() == socle(m).dims());
    }
}

TEST_CASE("radical filtration dims are additive") {
    for (Algebra a : {kup221(), truncated_cubic(),
                      nakayama_from_kupisch(F101, {KupischShape::Cyclic, {3, 3}}),
                      radical_square_zero(F101, Quiver(2, {{0, 1, 2, "a"}, {1, 2, 1, "b"}}))}) {
        for (int kpow = 0; kpow < a.loewy_length(); ++kpow) {
            Representation whole = radical_power_module(a, kpow);
            Representation sub = radical_power_module(a, kpow + 1);
            Representation quot = radical_layer_quotient(a, kpow, kpow + 1);
            for (int v = 1; v <= a.vertex_count(); ++v)
                CHECK(whole.dim(v) == sub.dim(v) + quot.dim(v));
        }
    }
}

TEST_CASE("representations reject bad data") {
    Algebra d = dual_numbers();
    // x acting as the identity does not satisfy xx = 0
    std::vector<Matrix> maps{Matrix::identity(F101, 1)};
    CHECK_THROWS_AS(Representation(d, {1}, std::move(maps)), std::logic_error);

    std::vector<Matrix> ragged{Matrix(F101, 2, 1)};
    CHECK_THROWS_AS(Representation(d, {1}, std::move(ragged)), std::invalid_argument);

    // a non-commuting square is rejected
    Algebra a = a2();
    Representation p1 = projective(a, 1);
    CHECK_THROWS_AS(ModuleMap(p1, p1, {Matrix::identity(F101, 1), Matrix(F101, 1, 1)}),
                    std::logic_error);
}
