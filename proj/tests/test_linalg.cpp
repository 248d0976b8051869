#include "logsym/linalg.hpp"

#include "catch_amalgamated.hpp"
#include "oracles.hpp"

#include <random>

using namespace logsym;

namespace {

Rational small_rational(std::mt19937_64& rng)
{
    Rational q(static_cast<long>(rng() % 9) - 4, static_cast<long>(rng() % 3) + 1);
    q.canonicalize();
    return q;
}

RationalMatrix random_matrix(std::mt19937_64& rng, int rows, int cols, int zero_percent = 30)
{
    RationalMatrix m(rows, cols, Rational(0));
    for (int r = 0; r < rows; ++r)
        for (int c = 0; c < cols; ++c)
            if (static_cast<int>(rng() % 100) >= zero_percent)
                m(r, c) = small_rational(rng);
    return m;
}

SparseMatrix to_sparse(const RationalMatrix& m)
{
    SparseMatrix s(m.rows(), m.cols());
    for (int c = 0; c < m.cols(); ++c) {
        SparseVector v;
        for (int r = 0; r < m.rows(); ++r)
            if (m(r, c) != 0)
                v.emplace(r, m(r, c));
        s.set_column(c, v);
    }
    return s;
}

std::vector<std::vector<Rational>> rows_of(const RationalMatrix& m)
{
    std::vector<std::vector<Rational>> out(m.rows(), std::vector<Rational>(m.cols()));
    for (int r = 0; r < m.rows(); ++r)
        for (int c = 0; c < m.cols(); ++c)
            out[r][c] = m(r, c);
    return out;
}

} // namespace

TEST_CASE("determinant matches the Leibniz expansion", "[linalg][property]")
{
    std::mt19937_64 rng(21);
    for (int trial = 0; trial < 60; ++trial) {
        const int n = 1 + static_cast<int>(rng() % 5);
        RationalMatrix m = random_matrix(rng, n, n);
        CHECK(determinant(m) == oracle::leibniz_determinant(m));
        CHECK(determinant(to_poly_matrix(VarSpec(2, 0), m)) == LaurentPoly::constant(VarSpec(2, 0), determinant(m)));
    }
}

TEST_CASE("polynomial determinant", "[linalg]")
{
    const VarSpec spec(2, 1);
    PolyMatrix m(2, 2, LaurentPoly(spec));
    m(0, 0) = LaurentPoly::variable(spec, 0);
    m(0, 1) = LaurentPoly::constant(spec, 1);
    m(1, 0) = LaurentPoly::variable(spec, 1);
    m(1, 1) = LaurentPoly::variable(spec, 0, -1);
    // x1 * x1^-1 - x2
    CHECK(determinant(m) == LaurentPoly::constant(spec, 1) - LaurentPoly::variable(spec, 1));
}

TEST_CASE("inverse over Q", "[linalg][property]")
{
    std::mt19937_64 rng(22);
    for (int trial = 0; trial < 40; ++trial) {
        const int n = 1 + static_cast<int>(rng() % 5);
        RationalMatrix m = random_matrix(rng, n, n, 10);
        auto inv = inverse(m);
        CHECK(inv.has_value() == (oracle::leibniz_determinant(m) != 0));
        if (inv)
            CHECK(multiply(m, *inv) == identity_matrix(n));
    }
    CHECK_FALSE(inverse(RationalMatrix(2, 2, Rational(0))).has_value());
}

TEST_CASE("inverse over the Laurent ring", "[linalg]")
{
    const VarSpec spec(2, 2);
    PolyMatrix m(2, 2, LaurentPoly(spec));
    m(0, 1) = LaurentPoly::variable(spec, 0);
    m(1, 0) = -LaurentPoly::variable(spec, 1);
    m(1, 1) = LaurentPoly::constant(spec, 3);
    const PolyMatrix inv = inverse_local(m);
    CHECK(multiply(m, inv) == identity_matrix(spec, 2));
    CHECK(multiply(inv, m) == identity_matrix(spec, 2));

    PolyMatrix singular(2, 2, LaurentPoly(spec));
    singular(0, 0) = LaurentPoly::constant(spec, 1) + LaurentPoly::variable(spec, 0);
    CHECK_THROWS_AS(inverse_local(singular), AlgebraError);
}

TEST_CASE("dense rank matches the oracle", "[linalg][property]")
{
    std::mt19937_64 rng(23);
    for (int trial = 0; trial < 60; ++trial) {
        RationalMatrix m = random_matrix(rng, 1 + static_cast<int>(rng() % 6), 1 + static_cast<int>(rng() % 6), 50);
        CHECK(rank(m) == oracle::dense_rank(rows_of(m)));
    }
}

TEST_CASE("sparse rank in both elimination orders", "[linalg][property]")
{
    std::mt19937_64 rng(24);
    for (int trial = 0; trial < 100; ++trial) {
        const int rows = 1 + static_cast<int>(rng() % 8);
        const int cols = 1 + static_cast<int>(rng() % 8);
        RationalMatrix m = random_matrix(rng, rows, cols, 60);
        // duplicate a column to force dependencies
        if (cols > 1)
            for (int r = 0; r < rows; ++r)
                m(r, cols - 1) = 2 * m(r, 0);
        const SparseMatrix s = to_sparse(m);
        const int expected = oracle::dense_rank(rows_of(m));
        CHECK(rank(s, EliminationOrder::forward) == expected);
        CHECK(rank(s, EliminationOrder::reverse) == expected);
        CHECK(checked_rank(s) == expected);
    }
}

TEST_CASE("sparse products", "[linalg]")
{
    std::mt19937_64 rng(25);
    for (int trial = 0; trial < 30; ++trial) {
        RationalMatrix a = random_matrix(rng, 3, 4), b = random_matrix(rng, 4, 2);
        CHECK(multiply(to_sparse(a), to_sparse(b)) == to_sparse(multiply(a, b)));
    }
    CHECK(SparseMatrix(3, 0).is_zero());
    CHECK(checked_rank(SparseMatrix(0, 5)) == 0);
}

TEST_CASE("submatrices", "[linalg]")
{
    RationalMatrix m(3, 3, Rational(0));
    for (int r = 0; r < 3; ++r)
        for (int c = 0; c < 3; ++c)
            m(r, c) = 3 * r + c;
    RationalMatrix s = submatrix(m, {0, 2}, {1, 2});
    CHECK(s(0, 0) == 1);
    CHECK(s(1, 1) == 8);
}
