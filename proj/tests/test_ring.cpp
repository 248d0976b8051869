#include "logsym/ring.hpp"

#include "catch_amalgamated.hpp"
#include "oracles.hpp"

#include <random>

using namespace logsym;

namespace {

const VarSpec kSpec(4, 2);

LaurentPoly random_poly(std::mt19937_64& rng, int terms, bool allow_poles = true)
{
    LaurentPoly p(kSpec);
    for (int t = 0; t < terms; ++t) {
        Exponent e(4);
        for (int i = 0; i < 4; ++i) {
            int lo = allow_poles && kSpec.is_divisor(i) ? -2 : 0;
            e[i] = lo + static_cast<int>(rng() % 4);
        }
        long num = static_cast<long>(rng() % 10) - 5;
        Rational c(num >= 0 ? num + 1 : num, static_cast<long>(rng() % 3) + 1);
        c.canonicalize();
        p.add_term(e, c);
    }
    return p;
}

oracle::Poly as_oracle(const LaurentPoly& p)
{
    oracle::Poly out;
    for (const auto& [e, c] : p.terms())
        out[e] = c;
    return out;
}

LaurentPoly x(int i, int power = 1)
{
    return LaurentPoly::variable(kSpec, i, power);
}

} // namespace

TEST_CASE("rationals are reduced and exact", "[ring]")
{
    CHECK(parse_rational("6/4") == Rational(3, 2));
    CHECK(to_string(parse_rational("-6/4")) == "-3/2");
    CHECK(to_string(parse_rational("7")) == "7");
    CHECK_THROWS_AS(parse_rational("1/0"), std::invalid_argument);
    CHECK_THROWS_AS(parse_rational("abc"), std::invalid_argument);
}

TEST_CASE("variable specs are validated", "[ring]")
{
    CHECK_THROWS_AS(VarSpec(3, 0), std::invalid_argument);
    CHECK_THROWS_AS(VarSpec(0, 0), std::invalid_argument);
    CHECK_THROWS_AS(VarSpec(4, 5), std::invalid_argument);
    CHECK_THROWS_AS(VarSpec(4, -1), std::invalid_argument);
    VarSpec s(6, 2);
    CHECK(s.half_dim() == 3);
    CHECK(s.is_divisor(1));
    CHECK_FALSE(s.is_divisor(2));
}

TEST_CASE("poly_mul examples", "[ring]")
{
    CHECK(poly_mul(x(0), x(0, -1)) == LaurentPoly::constant(kSpec, 1));
    LaurentPoly s = x(0) + x(1);
    CHECK(to_string(poly_mul(s, s)) == "x1^2 + 2*x1*x2 + x2^2");
    CHECK_THROWS_AS(poly_mul(x(0), LaurentPoly::constant(VarSpec(2, 0), 1)), std::invalid_argument);
}

TEST_CASE("poly_mul matches the convolution oracle", "[ring][property]")
{
    std::mt19937_64 rng(11);
    for (int trial = 0; trial < 200; ++trial) {
        LaurentPoly p = random_poly(rng, 1 + static_cast<int>(rng() % 5));
        LaurentPoly q = random_poly(rng, 1 + static_cast<int>(rng() % 5));
        CHECK(as_oracle(poly_mul(p, q)) == oracle::multiply(as_oracle(p), as_oracle(q)));
    }
}

TEST_CASE("ring axioms on random triples", "[ring][property]")
{
    std::mt19937_64 rng(12);
    for (int trial = 0; trial < 100; ++trial) {
        LaurentPoly a = random_poly(rng, 3), b = random_poly(rng, 3), c = random_poly(rng, 3);
        CHECK((a * b) * c == a * (b * c));
        CHECK(a * (b + c) == a * b + a * c);
        CHECK(a * b == b * a);
        CHECK((a - a).is_zero());
    }
}

TEST_CASE("partial derivatives", "[ring]")
{
    CHECK(partial_derivative(x(0) * x(1), 0) == x(1));
    CHECK(partial_derivative(x(0, -1), 0) == -x(0, -2));
    CHECK(partial_derivative(LaurentPoly::constant(kSpec, 5), 2).is_zero());
    CHECK_THROWS_AS(partial_derivative(x(0), 4), std::out_of_range);
}

TEST_CASE("partial derivatives commute and match the oracle", "[ring][property]")
{
    std::mt19937_64 rng(13);
    for (int trial = 0; trial < 100; ++trial) {
        LaurentPoly p = random_poly(rng, 5);
        int i = static_cast<int>(rng() % 4), j = static_cast<int>(rng() % 4);
        CHECK(partial_derivative(partial_derivative(p, i), j) == partial_derivative(partial_derivative(p, j), i));
        CHECK(as_oracle(partial_derivative(p, i)) == oracle::derivative(as_oracle(p), i));
    }
}

TEST_CASE("local units", "[ring]")
{
    CHECK(is_unit_local(LaurentPoly::constant(kSpec, 1) + x(0)));
    CHECK_FALSE(is_unit_local(x(0)));
    CHECK(is_unit_local(LaurentPoly::constant(kSpec, Rational(3, 7)) - x(1) * x(2)));
    CHECK_THROWS_AS(is_unit_local(x(0, -1)), AlgebraError);
}

TEST_CASE("is_unit_local is evaluation at the origin", "[ring][property]")
{
    std::mt19937_64 rng(14);
    for (int trial = 0; trial < 100; ++trial) {
        LaurentPoly p = random_poly(rng, 3, false);
        CHECK(is_unit_local(p) == (p.coefficient(Exponent(4, 0)) != 0));
    }
}

TEST_CASE("poles are only allowed in divisor variables", "[ring]")
{
    CHECK_THROWS_AS(x(2, -1), AlgebraError);
    CHECK_NOTHROW(x(1, -8));
}

TEST_CASE("weights", "[ring]")
{
    CHECK(weight({2, 0, 0, 0}, 1) == 3);
    CHECK(weight({1, 0, 0, 0}, 0) == 1);
    CHECK(weight({0, 0, 0, 0}, 0) == 0);
}

TEST_CASE("weight is additive on monomial products", "[ring][property]")
{
    std::mt19937_64 rng(15);
    for (int trial = 0; trial < 50; ++trial) {
        LaurentPoly p = random_poly(rng, 1), q = random_poly(rng, 1);
        const Exponent& ep = p.terms().begin()->first;
        const Exponent& eq = q.terms().begin()->first;
        const LaurentPoly pq = p * q;
        const Exponent& epq = pq.terms().begin()->first;
        CHECK(weight(epq, 2) == weight(ep, 1) + weight(eq, 1));
    }
}

TEST_CASE("text round trip", "[ring]")
{
    LaurentPoly p = parse_poly(kSpec, "3/2*x1^-1*x3^2");
    CHECK(p == LaurentPoly::monomial(kSpec, {-1, 0, 2, 0}, Rational(3, 2)));
    CHECK(to_string(p) == "3/2*x1^-1*x3^2");
    CHECK(to_string(LaurentPoly(kSpec)) == "0");
    CHECK(to_string(-x(0, -2)) == "-x1^-2");
    CHECK_THROWS_AS(parse_poly(kSpec, "x5"), std::invalid_argument);
    CHECK_THROWS_AS(parse_poly(kSpec, "2*"), std::invalid_argument);

    std::mt19937_64 rng(16);
    for (int trial = 0; trial < 100; ++trial) {
        LaurentPoly q = random_poly(rng, 4);
        CHECK(parse_poly(kSpec, to_string(q)) == q);
    }
}
