#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "quivhom/quivhom.hpp"
#include "oracles.hpp"

#include <set>
#include <sstream>

using namespace quivhom;

namespace {

const PrimeField F101(101);

const ClaimVerdict& claim(const Report& r, const std::string& id) {
    for (const ClaimVerdict& v : r.verdicts)
        if (v.claim_id == id)
            return v;
    throw std::runtime_error("claim not found: " + id);
}

} // namespace

TEST_CASE("check_algebra on the Kupisch [2,2,1] fixture") {
    Algebra a = nakayama_from_kupisch(F101, {KupischShape::Linear, {2, 2, 1}});
    Report r = check_algebra(a, 64, 0, "kup221");
    CHECK(r.gldim.same_value(ExtDim::finite(2)));
    CHECK(r.id_J.same_value(ExtDim::finite(2)));
    CHECK(r.id_J2.is_neg_infinity());
    CHECK(r.id_JmodJ2.same_value(ExtDim::finite(2)));
    CHECK(r.gorenstein == GorensteinVerdict::Gorenstein);
    CHECK(r.gorenstein_right.same_value(ExtDim::finite(2)));
    CHECK(!r.local);
    CHECK(!r.selfinjective);
    CHECK(r.nakayama);
    REQUIRE(r.verdicts.size() == 8);
    for (const char* id : {"C1", "C2", "C3", "C4", "C5", "C6", "C7", "C8"})
        CHECK(claim(r, id).status == ClaimStatus::Confirmed);
}

TEST_CASE("check_algebra on the dual numbers") {
    Algebra a = build_monomial_algebra(F101, Quiver(1, {{0, 1, 1, "x"}}), {PathWord{1, {0, 0}}});
    Report r = check_algebra(a, 64, 0, "dualnum");
    CHECK(r.gldim.is_infinite());
    CHECK(r.id_J.is_infinite());
    CHECK(r.id_J2.is_neg_infinity());
    CHECK(r.id_JmodJ2.is_infinite());
    CHECK(r.local);
    CHECK(r.selfinjective);
    CHECK(claim(r, "C1").status == ClaimStatus::Confirmed);
    CHECK(claim(r, "C4").status == ClaimStatus::Confirmed); // Gorenstein, infinite branch
    CHECK(claim(r, "C3").status == ClaimStatus::ConsistentUndetermined); // hypothesis not met
    CHECK(r.gorenstein == GorensteinVerdict::Gorenstein);
}

TEST_CASE("check_algebra on A2") {
    Algebra a = build_monomial_algebra(F101, Quiver(2, {{0, 1, 2, "a"}}), {});
    Report r = check_algebra(a, 64, 0, "a2");
    CHECK(r.gldim.same_value(ExtDim::finite(1)));
    CHECK(r.id_J.same_value(ExtDim::finite(1)));
    for (const ClaimVerdict& v : r.verdicts)
        CHECK(v.status == ClaimStatus::Confirmed);
}

TEST_CASE("explosive syzygy growth degrades to honest lower bounds") {
    // two loops truncated in degree three: J is not semisimple and the
    // syzygies of its dual double in size, so no detector can fire
    std::vector<PathWord> cubes;
    for (int a = 0; a < 2; ++a)
        for (int b = 0; b < 2; ++b)
            for (int c = 0; c < 2; ++c)
                cubes.push_back(PathWord{1, {a, b, c}});
    Algebra t = build_monomial_algebra(F101, Quiver(1, {{0, 1, 1, "x"}, {1, 1, 1, "y"}}), cubes);
    CHECK(t.dimension() == 7);
    Report r = check_algebra(t, 64, 0, "cube");
    CHECK(r.gldim.is_infinite());
    CHECK(r.id_J.is_at_least());
    CHECK(r.id_J2.is_infinite()); // J^2 is semisimple, decided by the graph
    CHECK(claim(r, "C1").status == ClaimStatus::ConsistentUndetermined);
    CHECK(claim(r, "C2").status == ClaimStatus::Confirmed);
    CHECK(claim(r, "C6").status == ClaimStatus::Confirmed);
    CHECK(!r.any_violated());
    CHECK(r.gorenstein == GorensteinVerdict::Undetermined);
}

TEST_CASE("check_algebra rejects semisimple input") {
    Algebra k = build_monomial_algebra(F101, Quiver(1, {}), {});
    CHECK_THROWS_AS(check_algebra(k), NonSemisimpleError);
}

TEST_CASE("parsing the A2 document") {
    const std::string doc = R"({"field":{"prime":101},
        "quiver":{"vertices":2,"arrows":[{"name":"a","source":1,"target":2}]},
        "relations":[]})";
    Algebra a = parse_algebra_spec(doc, F101);
    CHECK(a.dimension() == 3);
    CHECK(a.field().prime() == 101);

    // the field block is optional; the caller default applies
    Algebra b = parse_algebra_spec(
        R"({"quiver":{"vertices":2,"arrows":[{"name":"a","source":1,"target":2}]}})", PrimeField(7));
    CHECK(b.field().prime() == 7);
}

TEST_CASE("parse errors carry field positions") {
    auto quiver = R"("quiver":{"vertices":2,"arrows":[{"name":"a","source":1,"target":2}]})";
    // a relation of length one is admissibility-bad, not a parse error
    CHECK_THROWS_AS(parse_algebra_spec(std::string("{") + quiver + R"(,"relations":[["a"]]})", F101),
                    BadRelationError);

    try {
        parse_algebra_spec(std::string("{") + quiver + R"(,"relations":[["a","b"]]})", F101);
        FAIL("expected ParseError");
    } catch (const ParseError& e) {
        CHECK(e.where == "relations[0][1]");
    }

    try {
        parse_algebra_spec(std::string("{") + quiver + R"(,"extra":1})", F101);
        FAIL("expected ParseError");
    } catch (const ParseError& e) {
        CHECK(e.where == "$");
    }

    CHECK_THROWS_AS(parse_algebra_spec(R"({"field":{"prime":6},)" + std::string(quiver) + "}", F101),
                    ParseError);
    CHECK_THROWS_AS(parse_algebra_spec("{]", F101), ParseError);
    CHECK_THROWS_AS(
        parse_algebra_spec(
            R"({"quiver":{"vertices":1,"arrows":[{"name":"x","source":1,"target":2}]}})", F101),
        ParseError);
    CHECK_THROWS_AS(parse_algebra_spec(R"({"quiver":{"vertices":1,"arrows":[]}})", F101),
                    NonSemisimpleError);
    // an infinite-dimensional presentation surfaces as its own error
    CHECK_THROWS_AS(
        parse_algebra_spec(
            R"({"quiver":{"vertices":1,"arrows":[{"name":"x","source":1,"target":1}]}})", F101),
        InfiniteDimensionalError);
}

TEST_CASE("emit exit codes and summary") {
    std::ostringstream out;
    CHECK(emit({}, EmitFormat::Jsonl, out) == 0);
    auto summary = ordered_json::parse(out.str());
    CHECK(summary["summary"]["algebras"] == 0);

    Algebra a = build_monomial_algebra(F101, Quiver(2, {{0, 1, 2, "a"}}), {});
    Report good = check_algebra(a, 64, 0, "a2");
    std::ostringstream out2;
    CHECK(emit({good}, EmitFormat::Jsonl, out2) == 0);

    // inject a violated verdict: the exit code must flip to 2
    Report bad = good;
    bad.verdicts[0].status = ClaimStatus::Violated;
    std::ostringstream out3;
    CHECK(emit({good, bad}, EmitFormat::Jsonl, out3) == 2);
    std::string last;
    std::istringstream lines(out3.str());
    for (std::string line; std::getline(lines, line);)
        last = line;
    auto js = ordered_json::parse(last);
    CHECK(js["summary"]["violated_total"] == 1);
    CHECK(js["summary"]["claims"]["C1"]["violated"] == 1);

    std::ostringstream csv;
    CHECK(emit({good, bad}, EmitFormat::Csv, csv) == 2);
    CHECK(csv.str().find("#summary") != std::string::npos);
}

TEST_CASE("report JSON round trip is lossless") {
    std::vector<Report> reports;
    reports.push_back(check_algebra(nakayama_from_kupisch(F101, {KupischShape::Linear, {2, 2, 1}}),
                                    64, 0, "kup221"));
    reports.push_back(check_algebra(
        build_monomial_algebra(F101, Quiver(1, {{0, 1, 1, "x"}}), {PathWord{1, {0, 0}}}), 64, 0,
        "dualnum"));
    // a report with lower bounds in it
    reports.push_back(check_algebra(
        radical_square_zero(F101, Quiver(1, {{0, 1, 1, "x"}, {1, 1, 1, "y"}})), 64, 0, "2loops"));
    for (const Report& r : reports) {
        for (bool timing : {false, true}) {
            ordered_json j = to_json(r, timing);
            ordered_json j2 = to_json(report_from_json(j), timing);
            CHECK(j.dump() == j2.dump());
        }
    }
}

TEST_CASE("verdicts stay undetermined on injected lower bounds") {
    using quivhom::detail::verdict_from_tri;
    ExtDim bound = ExtDim::at_least(7);
    ExtDim fin = ExtDim::finite(3);
    // AtLeast(7) vs Finite(3): definitely unequal, but not fully determined
    CHECK(tri_eq(bound, fin) == Tri::False);
    ClaimVerdict v = verdict_from_tri("C1", tri_eq(bound, fin), {{"a", bound}, {"b", fin}});
    CHECK(v.status == ClaimStatus::ConsistentUndetermined);

    // overlapping intervals: unknown
    CHECK(tri_eq(ExtDim::at_least(2), fin) == Tri::Unknown);
    ClaimVerdict u =
        verdict_from_tri("C1", tri_eq(ExtDim::at_least(2), fin), {{"a", ExtDim::at_least(2)}, {"b", fin}});
    CHECK(u.status == ClaimStatus::ConsistentUndetermined);

    // bounds can still confirm an inequality
    CHECK(tri_ge(bound, fin) == Tri::True);
    CHECK(verdict_from_tri("C8", tri_ge(bound, fin), {{"a", bound}, {"b", fin}}).status ==
          ClaimStatus::Confirmed);

    // fully determined disagreement is a violation
    ClaimVerdict w = verdict_from_tri("C1", tri_eq(ExtDim::finite(1), fin),
                                      {{"a", ExtDim::finite(1)}, {"b", fin}});
    CHECK(w.status == ClaimStatus::Violated);
}

TEST_CASE("extdim order and arithmetic") {
    CHECK(tri_le(ExtDim::neg_infinity(), ExtDim::finite(0)) == Tri::True);
    CHECK(tri_le(ExtDim::finite(3), ExtDim::infinite()) == Tri::True);
    CHECK(tri_le(ExtDim::at_least(4), ExtDim::finite(3)) == Tri::False);
    CHECK(tri_le(ExtDim::finite(3), ExtDim::at_least(4)) == Tri::True);
    CHECK(tri_le(ExtDim::at_least(4), ExtDim::infinite()) == Tri::True);
    CHECK(tri_eq(ExtDim::at_least(4), ExtDim::infinite()) == Tri::Unknown);
    CHECK(ExtDim::finite(0).decremented().is_neg_infinity());
    CHECK(ExtDim::finite(5).decremented().same_value(ExtDim::finite(4)));
    CHECK(ExtDim::infinite().decremented().is_infinite());
    CHECK(extdim_max(ExtDim::finite(2), ExtDim::infinite()).is_infinite());
    CHECK(extdim_max(ExtDim::at_least(3), ExtDim::finite(5)).same_value(ExtDim::at_least(5)));
    CHECK(extdim_max(ExtDim::neg_infinity(), ExtDim::finite(0)).same_value(ExtDim::finite(0)));
}

TEST_CASE("kupisch enumeration counts match the brute-force oracle") {
    // 1, 2, 5, 14 series for n = 2..5
    std::vector<int> expected = {1, 2, 5, 14};
    for (int n = 2; n <= 5; ++n) {
        auto series = enumerate_linear_kupisch(n, 64);
        CHECK((int)series.size() == expected[n - 2]);
        CHECK((int)series.size() == oracles::count_linear_kupisch_series(n, n));
        for (const auto& c : series) {
            KupischSeries k{KupischShape::Linear, c};
            CHECK(k.valid());
        }
        CHECK(std::is_sorted(series.begin(), series.end()));
    }
    auto n3 = enumerate_linear_kupisch(3, 64);
    REQUIRE(n3.size() == 2);
    CHECK(n3[0] == std::vector<int>{2, 2, 1});
    CHECK(n3[1] == std::vector<int>{3, 2, 1});

    auto c1 = enumerate_cyclic_kupisch(1, 3);
    REQUIRE(c1.size() == 2); // k[x]/(x^2) and k[x]/(x^3)
    CHECK(c1[0] == std::vector<int>{2});
    CHECK(c1[1] == std::vector<int>{3});

    // rotation classes are enumerated once, via their least representative
    auto c2 = enumerate_cyclic_kupisch(2, 3);
    for (const auto& c : c2) {
        std::vector<int> rot{c[1], c[0]};
        CHECK(!(rot < c));
        KupischSeries k{KupischShape::Cyclic, c};
        CHECK(k.valid());
    }
    CHECK(std::count(c2.begin(), c2.end(), std::vector<int>{2, 3}) == 1);
    CHECK(std::count(c2.begin(), c2.end(), std::vector<int>{3, 2}) == 0);
}

TEST_CASE("scan preconditions") {
    CHECK_THROWS_AS(scan_nakayama(F101, KupischShape::Linear, 1, 6), std::invalid_argument);
    CHECK_THROWS_AS(scan_nakayama(F101, KupischShape::Cyclic, 0, 6), std::invalid_argument);
    CHECK_THROWS_AS(scan_radical_square_zero(F101, 0), std::invalid_argument);
    // cyclic scans are legal from a single vertex
    CHECK(scan_nakayama(F101, KupischShape::Cyclic, 1, 3).size() == 2);
}

TEST_CASE("scan nakayama produces distinct algebras in order") {
    std::vector<Report> reports = scan_nakayama(F101, KupischShape::Linear, 4, 6);
    CHECK(reports.size() == 8); // 1 + 2 + 5
    std::set<std::string> ids;
    for (const Report& r : reports)
        ids.insert(r.algebra_id);
    CHECK(ids.size() == reports.size());
    for (const Report& r : reports)
        CHECK(!r.any_violated());
}

TEST_CASE("scan radsq: canonical dedup and the acyclic law") {
    std::vector<Report> reports = scan_radical_square_zero(F101, 2);
    CHECK(reports.size() == 41); // 2 loops on one vertex + 39 connected digraphs on two
    std::set<std::string> ids;
    for (const Report& r : reports)
        ids.insert(r.algebra_id);
    CHECK(ids.size() == reports.size());

    // acyclic quivers: gldim equals the longest path length
    int acyclic_seen = 0;
    for (int n = 1; n <= 2; ++n) {
        for (const Quiver& q : enumerate_connected_digraphs(n)) {
            auto longest = oracles::longest_directed_path(q);
            Report r = check_algebra(radical_square_zero(F101, q), 64, 0, "x");
            if (longest.has_value()) {
                ++acyclic_seen;
                REQUIRE(r.gldim.is_finite());
                CHECK(r.gldim.finite_value() == *longest);
            } else {
                CHECK(r.gldim.is_infinite());
            }
        }
    }
    CHECK(acyclic_seen == 2); // 1->2 with one or two parallel arrows
}

TEST_CASE("scans are byte deterministic") {
    auto run = [](std::uint64_t seed, int jobs) {
        ScanOptions opt;
        opt.seed = seed;
        opt.jobs = jobs;
        std::ostringstream out;
        emit(scan_nakayama(F101, KupischShape::Cyclic, 3, 5, opt), EmitFormat::Jsonl, out);
        emit(scan_radical_square_zero(F101, 2, opt), EmitFormat::Jsonl, out);
        return out.str();
    };
    CHECK(run(0, 1) == run(0, 1));
    CHECK(run(7, 1) == run(7, 1));
    // scheduling must not leak into the output
    CHECK(run(0, 1) == run(0, 3));
    CHECK(run(7, 1) == run(7, 4));
}

TEST_CASE("per-simple report values agree with their definitions") {
    for (Algebra a : {nakayama_from_kupisch(F101, {KupischShape::Linear, {3, 2, 1}}),
                      nakayama_from_kupisch(F101, {KupischShape::Cyclic, {3, 2}})}) {
        Report r = check_algebra(a, 64, 0, "x");
        for (int v = 1; v <= a.vertex_count(); ++v) {
            ExtDim pd = projective_dimension(simple(a, v));
            ExtDim id = injective_dimension(simple(a, v));
            CHECK(tri_eq(r.pd_simple[v - 1], pd) != Tri::False);
            CHECK(tri_eq(r.id_simple[v - 1], id) != Tri::False);
        }
    }
}
