#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "quivhom/matrix.hpp"

using namespace quivhom;

namespace {

Matrix random_matrix(const PrimeField& f, int rows, int cols, std::uint64_t& state) {
    Matrix m(f, rows, cols);
    for (int r = 0; r < rows; ++r)
        for (int c = 0; c < cols; ++c)
            m.at(r, c) = (std::uint32_t)(splitmix64(state) % f.prime());
    return m;
}

} // namespace

TEST_CASE("prime field construction and inverses") {
    CHECK_THROWS_AS(PrimeField(1), std::invalid_argument);
    CHECK_THROWS_AS(PrimeField(8), std::invalid_argument);
    CHECK_THROWS_AS(PrimeField(91), std::invalid_argument); // 7*13
    PrimeField f2(2), f101(101), big(2147483647);           // 2^31 - 1 is prime
    CHECK(f2.prime() == 2);
    for (std::uint32_t a = 1; a < 101; ++a)
        CHECK(f101.mul(a, f101.inv(a)) == 1);
    CHECK(big.mul(123456789, big.inv(123456789)) == 1);
    CHECK(f101.sub(3, 7) == 97);
    CHECK(f101.neg(0) == 0);
}

TEST_CASE("rref of identity and zero") {
    PrimeField f(5);
    auto [ri, pi] = Matrix::identity(f, 2).rref();
    CHECK(ri == Matrix::identity(f, 2));
    CHECK(pi == std::vector<int>{0, 1});

    auto [rz, pz] = Matrix::zero(f, 3, 2).rref();
    CHECK(rz.is_zero());
    CHECK(pz.empty());
}

TEST_CASE("rref by hand over GF(5)") {
    // [[2,4],[1,2]]: scale row 0 by 3 = 2^-1 -> (1,2); row 1 - (1,2) -> 0
    PrimeField f(5);
    Matrix m = Matrix::from_rows(f, {{2, 4}, {1, 2}}, 2);
    auto [r, p] = m.rref();
    CHECK(r == Matrix::from_rows(f, {{1, 2}, {0, 0}}, 2));
    CHECK(p == std::vector<int>{0});
}

TEST_CASE("kernel basis examples") {
    PrimeField f2(2), f7(7);
    CHECK(Matrix::identity(f7, 4).kernel_basis().rows() == 0);
    Matrix z = Matrix::zero(f7, 2, 3);
    Matrix k = z.kernel_basis();
    CHECK(k.rows() == 3);
    CHECK(k.rank() == 3);

    Matrix m = Matrix::from_rows(f2, {{1, 1}}, 2); // x + y = 0 mod 2
    Matrix km = m.kernel_basis();
    CHECK(km.rows() == 1);
    CHECK(km == Matrix::from_rows(f2, {{1, 1}}, 2));
}

TEST_CASE("solve_right examples") {
    PrimeField f3(3);
    Matrix id = Matrix::identity(f3, 2);
    Matrix b = Matrix::from_rows(f3, {{2}, {1}}, 1);
    auto x = id.solve_right(b);
    REQUIRE(x.has_value());
    CHECK(*x == b);

    CHECK(!Matrix::zero(f3, 2, 2).solve_right(b).has_value());

    Matrix m = Matrix::from_rows(f3, {{1, 1}, {0, 1}}, 2);
    auto y = m.solve_right(b); // back substitution mod 3
    REQUIRE(y.has_value());
    CHECK(*y == Matrix::from_rows(f3, {{1}, {1}}, 1));

    Matrix bad = Matrix::from_rows(f3, {{1}, {1}, {1}}, 1);
    CHECK_THROWS_AS((void)m.solve_right(bad), std::invalid_argument);
}

TEST_CASE("randomized invariants over GF(2) and GF(101)") {
    for (std::uint32_t p : {2u, 101u}) {
        PrimeField f(p);
        std::uint64_t state = 0x1234u + p;
        for (int it = 0; it < 1000; ++it) {
            int rows = 1 + (int)(splitmix64(state) % 6);
            int cols = 1 + (int)(splitmix64(state) % 6);
            Matrix m = random_matrix(f, rows, cols, state);

            auto [r, pivots] = m.rref();
            auto [r2, pivots2] = r.rref();
            CHECK(r == r2); // idempotence
            CHECK(pivots == pivots2);
            for (std::size_t i = 1; i < pivots.size(); ++i)
                CHECK(pivots[i - 1] < pivots[i]);

            Matrix k = m.kernel_basis();
            CHECK((int)pivots.size() + k.rows() == cols); // rank-nullity
            CHECK((m * k.transpose()).is_zero());

            // solve soundness on a solvable system
            Matrix x = random_matrix(f, cols, 2, state);
            Matrix b = m * x;
            auto sol = m.solve_right(b);
            REQUIRE(sol.has_value());
            CHECK(m * *sol == b);
        }
    }
}
