#include "logsym/genpos.hpp"
#include "logsym/toric.hpp"

#include "catch_amalgamated.hpp"
#include "oracles.hpp"

#include <random>

using namespace logsym;

namespace {

const VarSpec kSpec(4, 4);

PolyMatrix poly(const RationalMatrix& m, VarSpec spec = kSpec)
{
    return to_poly_matrix(spec, m);
}

RationalMatrix rational(std::initializer_list<std::initializer_list<int>> rows)
{
    const int r = static_cast<int>(rows.size());
    const int c = static_cast<int>(rows.begin()->size());
    RationalMatrix m(r, c, Rational(0));
    int i = 0;
    for (const auto& row : rows) {
        int j = 0;
        for (int v : row)
            m(i, j++) = v;
        ++i;
    }
    return m;
}

RationalMatrix random_rational(std::mt19937_64& rng, int k, int density)
{
    RationalMatrix m(k, k, Rational(0));
    for (int i = 0; i < k; ++i)
        for (int j = 0; j < k; ++j)
            if (static_cast<int>(rng() % 10) < density)
                m(i, j) = Rational(static_cast<long>(rng() % 7) - 3);
    return m;
}

} // namespace

TEST_CASE("relative general position examples", "[genpos]")
{
    const VarSpec spec(2, 2);
    const PolyMatrix id = identity_matrix(spec, 2);
    const PolyMatrix j = poly(rational({{0, 1}, {-1, 0}}), spec);

    auto same = is_relative_t_general(id, id, 2);
    CHECK_FALSE(same.verdict);
    REQUIRE(same.failure);
    CHECK(*same.failure == std::vector<int>{0, 2});

    CHECK(is_relative_t_general(j, id, 1).verdict);

    auto pair = is_relative_t_general(j, id, 2);
    CHECK_FALSE(pair.verdict);
    CHECK(*pair.failure == std::vector<int>{0, 3});
    CHECK(verify_certificate(j, id, pair));
}

TEST_CASE("standard general position examples", "[genpos]")
{
    auto cert = is_standard_t_general(poly(sample_matrix()), 2);
    CHECK(cert.verdict);
    CHECK(cert.t == 2);
    CHECK(cert.witnesses.size() == 28);
    CHECK_FALSE(cert.failure);
    CHECK(verify_certificate(poly(sample_matrix()), identity_matrix(kSpec, 4), cert));
}

TEST_CASE("skew matrices are never in top general position", "[genpos][property]")
{
    std::mt19937_64 rng(5);
    for (int n = 1; n <= 3; ++n) {
        const VarSpec spec(2 * n, 2 * n);
        for (int trial = 0; trial < 10; ++trial) {
            RationalMatrix a = random_skew(rng, n);
            auto cert = is_standard_t_general(poly(a, spec), 2 * n);
            CHECK_FALSE(cert.verdict);
            REQUIRE(cert.failure);
            CHECK(verify_certificate(poly(a, spec), identity_matrix(spec, 2 * n), cert));
        }
    }
}

TEST_CASE("general position of Poisson structures", "[genpos]")
{
    CHECK(poisson_t_general(make_toric(sample_matrix()).structure, 2).verdict);
    CHECK_FALSE(poisson_t_general(make_toric(block_diagonal(2, 3)).structure, 3).verdict);
    CHECK(poisson_t_general(make_toric(block_diagonal(2, 3)).structure, 1).verdict);
    // A_1 is parallel to e_2
    CHECK_FALSE(poisson_t_general(make_toric(block_diagonal(2, 3)).structure, 2).verdict);

    RationalMatrix a = sample_matrix();
    for (int i = 0; i < 4; ++i) {
        a(i, 0) = 0;
        a(0, i) = 0;
    }
    auto cert = poisson_t_general(make_toric(a).structure, 1);
    CHECK_FALSE(cert.verdict);
    CHECK(*cert.failure == std::vector<int>{0});
}

TEST_CASE("generic skew matrices are in 3-general position", "[genpos][property]")
{
    std::mt19937_64 rng(11);
    int passed = 0;
    for (int trial = 0; trial < 20; ++trial) {
        RationalMatrix a = random_generic_skew(rng, 2);
        auto cert = is_standard_t_general(poly(a), 3);
        CHECK(verify_certificate(poly(a), identity_matrix(kSpec, 4), cert));
        passed += cert.verdict;
    }
    CHECK(passed >= 19);
}

TEST_CASE("verdicts match the minor enumeration oracle", "[genpos][property]")
{
    std::mt19937_64 rng(17);
    for (int trial = 0; trial < 60; ++trial) {
        const int k = 2 + static_cast<int>(rng() % 3);
        const VarSpec spec(k % 2 ? k + 1 : k, 0);
        RationalMatrix m = random_rational(rng, k, 2 + static_cast<int>(rng() % 6));
        for (int t = 1; t <= k; ++t) {
            auto cert = is_standard_t_general(poly(m, spec), t);
            CHECK(cert.verdict == oracle::brute_force_t_general(m, t));
            CHECK(verify_certificate(poly(m, spec), identity_matrix(spec, k), cert));
        }
    }
}

TEST_CASE("general position is monotone in t", "[genpos][property]")
{
    std::mt19937_64 rng(23);
    for (int trial = 0; trial < 40; ++trial) {
        const int k = 2 + static_cast<int>(rng() % 5);
        const VarSpec spec(k % 2 ? k + 1 : k, 0);
        RationalMatrix m = random_rational(rng, k, 3 + static_cast<int>(rng() % 7));
        bool previous = true;
        for (int t = 1; t <= k; ++t) {
            const bool now = is_standard_t_general(poly(m, spec), t).verdict;
            CHECK((previous || !now));
            previous = now;
        }
    }
}

TEST_CASE("entries must be local and t in range", "[genpos]")
{
    const VarSpec spec(2, 2);
    PolyMatrix m = identity_matrix(spec, 2);
    CHECK_THROWS_AS(is_standard_t_general(m, 0), std::out_of_range);
    CHECK_THROWS_AS(is_standard_t_general(m, 3), std::out_of_range);
    m(0, 1) = LaurentPoly::variable(spec, 0, -1);
    CHECK_THROWS_AS(is_standard_t_general(m, 1), AlgebraError);
}

TEST_CASE("non-constant entries count by their value at the origin", "[genpos]")
{
    const VarSpec spec(2, 2);
    PolyMatrix m = identity_matrix(spec, 2);
    m(0, 0) = LaurentPoly::variable(spec, 0);
    auto cert = is_standard_t_general(m, 1);
    CHECK_FALSE(cert.verdict);
    CHECK(*cert.failure == std::vector<int>{0});
    m(0, 0) += LaurentPoly::constant(spec, 2);
    CHECK(is_standard_t_general(m, 1).verdict);
}

TEST_CASE("tampered certificates are rejected", "[genpos]")
{
    const PolyMatrix a = poly(sample_matrix());
    const PolyMatrix id = identity_matrix(kSpec, 4);
    auto cert = is_standard_t_general(a, 2);
    auto wrong_rows = cert;
    wrong_rows.witnesses[0].rows = {0, 0};
    CHECK_FALSE(verify_certificate(a, id, wrong_rows));
    auto flipped = cert;
    flipped.verdict = false;
    CHECK_FALSE(verify_certificate(a, id, flipped));
    auto fake_failure = cert;
    fake_failure.verdict = false;
    fake_failure.witnesses.clear();
    fake_failure.failure = std::vector<int>{0, 1};
    CHECK_FALSE(verify_certificate(a, id, fake_failure));
}
