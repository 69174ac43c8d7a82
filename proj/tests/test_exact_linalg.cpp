#include <random>

#include <doctest.h>

#include "inthull/exact_linalg.hpp"
#include "oracles.hpp"

using namespace inthull;

namespace {

IntMatrix random_matrix(std::mt19937_64& rng, std::size_t n, long lo, long hi)
{
    std::uniform_int_distribution<long> dist(lo, hi);
    IntMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            m(i, j) = dist(rng);
    return m;
}

oracle::Grid to_grid(const IntMatrix& m)
{
    oracle::Grid g(m.rows(), std::vector<BigInteger>(m.cols()));
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j)
            g[i][j] = m(i, j);
    return g;
}

void check_snf(const IntMatrix& m, const SmithDecomposition& s)
{
    REQUIRE(s.p * m * s.q == s.d);
    CHECK(abs(determinant(s.p)) == 1);
    CHECK(abs(determinant(s.q)) == 1);
    BigInteger prod = 1;
    for (std::size_t i = 0; i < s.d.rows(); ++i) {
        for (std::size_t j = 0; j < s.d.cols(); ++j)
            if (i != j)
                CHECK(s.d(i, j) == 0);
        CHECK(s.d(i, i) > 0);
        if (i > 0)
            CHECK(s.d(i, i) % s.d(i - 1, i - 1) == 0);
        prod *= s.d(i, i);
    }
    CHECK(prod == s.delta);
    CHECK(s.delta == abs(determinant(m)));
}

}  // namespace

TEST_CASE("rational canonical form")
{
    const BigRational q = make_rational(4, -6);
    CHECK(q.get_num() == -2);
    CHECK(q.get_den() == 3);
    CHECK(make_rational(6, 3) == 2);
    CHECK_THROWS_AS(make_rational(1, 0), Error);
    CHECK(floor_div(-7, 2) == -4);
    CHECK(ceil_div(-7, 2) == -3);
    CHECK(floor_of(make_rational(-1, 3)) == -1);
}

TEST_CASE("determinant examples")
{
    CHECK(determinant(IntMatrix::identity(3)) == 1);
    CHECK(determinant(IntMatrix{{5}}) == 5);
    CHECK(determinant(IntMatrix{{2, 4}, {4, 4}}) == -8);
    CHECK(determinant(IntMatrix{{0, 1}, {1, 0}}) == -1);
    CHECK(determinant(IntMatrix{{1, 2}, {2, 4}}) == 0);
    CHECK_THROWS_AS(determinant(IntMatrix(2, 3)), DimensionError);
}

TEST_CASE("determinant agrees with cofactor expansion")
{
    std::mt19937_64 rng(7);
    for (int trial = 0; trial < 1200; ++trial) {
        const std::size_t n = 1 + trial % 4;
        const IntMatrix m = random_matrix(rng, n, -9, 9);
        REQUIRE(determinant(m) == oracle::cofactor_det(to_grid(m)));
    }
}

TEST_CASE("determinant of a large-entry matrix is exact")
{
    // det = 10^30 - 1 for [[10^15, 1], [1, 10^15]]... written out exactly.
    const BigInteger big("1000000000000000");
    IntMatrix m(2, 2);
    m(0, 0) = big;
    m(0, 1) = 1;
    m(1, 0) = 1;
    m(1, 1) = big;
    CHECK(determinant(m) == BigInteger("999999999999999999999999999999"));
}

TEST_CASE("rref examples")
{
    const auto id = rref(RatMatrix{{1, 0}, {0, 1}});
    CHECK(id.reduced == RatMatrix{{1, 0}, {0, 1}});
    CHECK(id.pivot_cols == std::vector<std::size_t>{0, 1});
    CHECK(id.rank == 2);

    const auto r = rref(RatMatrix{{2, 4}, {1, 2}});
    CHECK(r.reduced == RatMatrix{{1, 2}, {0, 0}});
    CHECK(r.pivot_cols == std::vector<std::size_t>{0});
    CHECK(r.rank == 1);

    const auto z = rref(RatMatrix(2, 3));
    CHECK(z.reduced == RatMatrix(2, 3));
    CHECK(z.pivot_cols.empty());
    CHECK(z.rank == 0);
}

TEST_CASE("rref is idempotent and has unit pivots")
{
    std::mt19937_64 rng(11);
    std::uniform_int_distribution<long> dist(-3, 3);
    for (int trial = 0; trial < 300; ++trial) {
        const std::size_t rows = 1 + trial % 4, cols = 1 + (trial / 4) % 4;
        RatMatrix m(rows, cols);
        for (std::size_t i = 0; i < rows; ++i)
            for (std::size_t j = 0; j < cols; ++j)
                m(i, j) = make_rational(dist(rng), 1 + (trial % 3));
        const auto r = rref(m);
        CHECK(rref(r.reduced).reduced == r.reduced);
        for (std::size_t k = 0; k < r.rank; ++k) {
            CHECK(r.reduced(k, r.pivot_cols[k]) == 1);
            for (std::size_t i = 0; i < rows; ++i)
                if (i != k)
                    CHECK(r.reduced(i, r.pivot_cols[k]) == 0);
        }
        std::vector<RatVector> rowsv;
        for (std::size_t i = 0; i < rows; ++i)
            rowsv.emplace_back(m.row(i).begin(), m.row(i).end());
        CHECK(r.rank == oracle::rank_of(rowsv));
    }
}

TEST_CASE("smith normal form examples")
{
    const auto id = smith_normal_form(IntMatrix::identity(3));
    CHECK(id.p == IntMatrix::identity(3));
    CHECK(id.q == IntMatrix::identity(3));
    CHECK(id.d == IntMatrix::identity(3));
    CHECK(id.delta == 1);

    const IntMatrix diag{{2, 0}, {0, 4}};
    const auto s = smith_normal_form(diag);
    CHECK(s.d == diag);
    CHECK(s.delta == 8);
    check_snf(diag, s);

    // gcd of entries is 2 and |det| = 8, so the invariant factors are 2 and 4.
    const IntMatrix m{{2, 4}, {4, 4}};
    const auto t = smith_normal_form(m);
    CHECK(t.invariant_factors() == IntVector{2, 4});
    CHECK(t.delta == 8);
    check_snf(m, t);

    CHECK_THROWS_AS(smith_normal_form(IntMatrix{{1, 2}, {2, 4}}), SingularMatrixError);
    CHECK_THROWS_AS(smith_normal_form(IntMatrix(2, 3)), DimensionError);
    CHECK_THROWS_AS(smith_normal_form(IntMatrix{{1000, 0}, {0, 1000}}, 999999), ResourceError);
}

TEST_CASE("smith normal form is deterministic")
{
    const IntMatrix m{{3, -7, 1}, {4, 2, 9}, {-5, 6, 8}};
    const auto a = smith_normal_form(m);
    const auto b = smith_normal_form(m);
    CHECK(a.p == b.p);
    CHECK(a.q == b.q);
    CHECK(a.d == b.d);
}

TEST_CASE("smith normal form invariants on random matrices")
{
    std::mt19937_64 rng(2024);
    int checked = 0;
    while (checked < 500) {
        const std::size_t n = 1 + static_cast<std::size_t>(checked % 4);
        const IntMatrix m = random_matrix(rng, n, -9, 9);
        if (determinant(m) == 0)
            continue;
        check_snf(m, smith_normal_form(m));
        ++checked;
    }
}

TEST_CASE("first invariant factor is the gcd of all entries")
{
    std::mt19937_64 rng(5);
    for (int trial = 0; trial < 200; ++trial) {
        IntMatrix m = random_matrix(rng, 3, -6, 6);
        for (std::size_t i = 0; i < 3; ++i)
            for (std::size_t j = 0; j < 3; ++j)
                m(i, j) *= 2 + trial % 3;
        if (determinant(m) == 0)
            continue;
        BigInteger g = 0;
        for (std::size_t i = 0; i < 3; ++i)
            for (std::size_t j = 0; j < 3; ++j)
                mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), m(i, j).get_mpz_t());
        CHECK(smith_normal_form(m).d(0, 0) == g);
    }
}

TEST_CASE("gcd_normalize_row examples")
{
    auto a = gcd_normalize_row(IntVector{2, 4, 6}, 8);
    CHECK(a.a == IntVector{1, 2, 3});
    CHECK(a.beta == 4);

    auto b = gcd_normalize_row(IntVector{3, 5}, 7);
    CHECK(b.a == IntVector{3, 5});
    CHECK(b.beta == 7);

    auto c = gcd_normalize_row(IntVector{2, 4}, 7);
    CHECK(c.a == IntVector{1, 2});
    CHECK(c.beta == 3);

    auto neg = gcd_normalize_row(IntVector{-2, 4}, -3);
    CHECK(neg.a == IntVector{-1, 2});
    CHECK(neg.beta == -2);

    CHECK_THROWS_AS(gcd_normalize_row(IntVector{0, 0}, 1), DegenerateRowError);
}

TEST_CASE("gcd_normalize_row keeps every integer point of the half-space")
{
    std::mt19937_64 rng(99);
    std::uniform_int_distribution<long> coef(-6, 6), rhs(-20, 20);
    for (int trial = 0; trial < 150; ++trial) {
        const std::size_t d = 1 + trial % 3;
        IntVector a(d);
        for (auto& x : a)
            x = coef(rng) * (1 + trial % 4);
        if (gcd_of(a) == 0)
            continue;
        const BigInteger beta = rhs(rng);
        const auto n = gcd_normalize_row(a, beta);
        CHECK(gcd_of(n.a) == 1);
        // Lattice scan over [-10, 10]^d: integer solution sets must coincide.
        IntVector x(d, -10);
        for (;;) {
            CHECK((dot(a, x) <= beta) == (dot(n.a, x) <= n.beta));
            std::size_t j = d;
            while (j > 0 && x[j - 1] == 10)
                x[--j] = -10;
            if (j == 0)
                break;
            ++x[j - 1];
        }
    }
}
