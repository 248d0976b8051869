#include "logsym/toric.hpp"

#include "catch_amalgamated.hpp"
#include "oracles.hpp"

#include <random>

using namespace logsym;

namespace {

RationalMatrix two_by_two()
{
    RationalMatrix a(2, 2, Rational(0));
    a(0, 1) = 1;
    a(1, 0) = -1;
    return a;
}

long long binomial_by_pairs(int d, int k)
{
    return static_cast<long long>(oracle::subsets(d, k).size());
}

} // namespace

TEST_CASE("toric bivectors", "[toric]")
{
    const auto t = make_toric(two_by_two());
    const VarSpec spec = t.structure.spec();
    CHECK(t.n == 1);
    CHECK(spec.divisor_vars() == 2);
    const auto expected = make_field(Frame::coordinate(spec), IndexSet::single(0).with(1),
                                     LaurentPoly::variable(spec, 0) * LaurentPoly::variable(spec, 1));
    CHECK(t.structure.bivector() == expected);

    const auto four = make_toric(sample_matrix());
    const auto divisor = degeneracy_divisor(four.structure);
    CHECK(divisor.simple_normal_crossings);
    CHECK(divisor.components == std::vector<std::pair<int, int>>{{0, 1}, {1, 1}, {2, 1}, {3, 1}});
}

TEST_CASE("make_toric rejects bad input", "[toric]")
{
    RationalMatrix odd(3, 3, Rational(0));
    CHECK_THROWS_AS(make_toric(odd), std::invalid_argument);
    RationalMatrix a = sample_matrix();
    a(1, 0) = 7;
    CHECK_THROWS_AS(make_toric(a), std::invalid_argument);
    a = sample_matrix();
    a(2, 2) = 1;
    CHECK_THROWS_AS(make_toric(a), std::invalid_argument);
}

TEST_CASE("toric structures satisfy Jacobi and have the expected top power", "[toric][property]")
{
    std::mt19937_64 rng(31);
    for (int n : {1, 2, 3}) {
        for (int trial = 0; trial < 4; ++trial) {
            const auto t = make_toric(random_skew(rng, n));
            CHECK(jacobi_holds(t.structure));
            const VarSpec spec = t.structure.spec();
            Exponent all(2 * n, 1);
            const LaurentPoly expected = LaurentPoly::monomial(
                spec, all, Rational(static_cast<long>(oracle::factorial(n))) * oracle::permutation_pfaffian(t.a));
            CHECK(top_power(t.structure).coefficient == expected);
        }
    }
}

TEST_CASE("certification examples", "[toric]")
{
    const auto zero = certify(make_toric(RationalMatrix(4, 4, Rational(0))));
    CHECK(zero.pfaffian == 0);
    CHECK_FALSE(zero.nonsingular);
    CHECK_FALSE(zero.divisor);
    CHECK_FALSE(zero.divisor_error.empty());

    const auto surface = certify(make_toric(two_by_two()));
    CHECK(surface.nonsingular);
    REQUIRE(surface.general_position.size() == 2);
    CHECK(surface.general_position[0].certificate.t == 1);
    CHECK(surface.general_position[0].certificate.verdict);
    CHECK(surface.general_position[1].certificate.t == 2);
    CHECK_FALSE(surface.general_position[1].certificate.verdict);

    const auto block = certify(make_toric(block_diagonal(1, 2)));
    REQUIRE(block.general_position.size() == 4);
    CHECK(block.general_position[2].certificate.t == 3);
    CHECK_FALSE(block.general_position[2].certificate.verdict);
    CHECK(block.general_position[3].certificate.t == 4);
    for (const auto& entry : block.general_position)
        CHECK(entry.certificate_verified);
}

TEST_CASE("certification of generic matrices", "[toric][property]")
{
    std::mt19937_64 rng(37);
    const int draws = 100;
    int two_general = 0;
    for (int trial = 0; trial < draws; ++trial) {
        const auto report = certify(make_toric(random_generic_skew(rng, 2)));
        REQUIRE(report.general_position.size() == 4);
        for (const auto& entry : report.general_position)
            CHECK(entry.certificate_verified);
        CHECK(report.jacobi);
        CHECK_FALSE(report.general_position[3].certificate.verdict);
        if (report.nonsingular) {
            REQUIRE(report.divisor);
            CHECK(report.divisor->simple_normal_crossings);
        }
        two_general += report.nonsingular && report.general_position[1].certificate.verdict;
    }
    CHECK(two_general * 100 >= 95 * draws);
}

TEST_CASE("Betti numbers of the torus", "[toric]")
{
    CHECK(betti_torus(4, 0) == 1);
    CHECK(betti_torus(4, 1) == 4);
    CHECK(betti_torus(4, 2) == 6);
    CHECK(betti_torus(4, 3) == 4);
    CHECK(betti_torus(4, 4) == 1);
    for (int d = 0; d <= 12; ++d) {
        long long sum = 0;
        for (int i = 0; i <= d; ++i)
            sum += betti_torus(d, i);
        CHECK(sum == (1LL << d));
    }
    CHECK_THROWS_AS(betti_torus(4, 5), std::out_of_range);
    CHECK_THROWS_AS(betti_torus(4, -1), std::out_of_range);
}

TEST_CASE("log Hodge numbers", "[toric]")
{
    CHECK(log_hodge_numbers(4, 0, 2) == 6);
    CHECK(log_hodge_numbers(4, 0, 0) == 1);
    for (int j = 0; j <= 4; ++j)
        CHECK(log_hodge_numbers(4, 1, j) == 0);
    CHECK_THROWS_AS(log_hodge_numbers(4, 0, 5), std::out_of_range);
}

TEST_CASE("deformation tangent dimension", "[toric][property]")
{
    CHECK(deformation_tangent_dim(2) == 6);
    CHECK(deformation_tangent_dim(3) == 15);
    for (int n = 2; n <= 8; ++n) {
        CHECK(deformation_tangent_dim(n) == betti_torus(2 * n, 2));
        CHECK(deformation_tangent_dim(n) == binomial_by_pairs(2 * n, 2));
    }
    CHECK_THROWS_AS(deformation_tangent_dim(1), std::domain_error);
}

TEST_CASE("fixture generators", "[toric]")
{
    std::mt19937_64 rng(41);
    for (int trial = 0; trial < 20; ++trial) {
        const RationalMatrix a = random_generic_skew(rng, 2);
        std::vector<Rational> seen;
        for (int i = 0; i < 4; ++i)
            for (int j = i + 1; j < 4; ++j) {
                CHECK(a(i, j) == -a(j, i));
                CHECK(a(i, j) != 0);
                for (const auto& s : seen)
                    CHECK(abs(a(i, j)) != s);
                seen.push_back(abs(a(i, j)));
            }
        const RationalMatrix g = random_two_general(rng, 2);
        CHECK(oracle::permutation_pfaffian(g) != 0);
        CHECK(oracle::brute_force_t_general(g, 2));
    }
    CHECK(oracle::permutation_pfaffian(sample_matrix()) == 8);
    CHECK(oracle::permutation_pfaffian(block_diagonal(2, 3)) == 6);
}
