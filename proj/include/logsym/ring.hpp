// Exact scalars and sparse Laurent polynomials over Q.
//
// Coordinates x_1..x_N are split into divisor variables (the first m) and the
// rest. Divisor variables may carry negative exponents, so a LaurentPoly is an
// element of the localized ring Q[x_1..x_N][x_1^-1..x_m^-1].
#ifndef LOGSYM_RING_HPP
#define LOGSYM_RING_HPP

#include <gmpxx.h>

#include <map>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace logsym {

using Rational = mpq_class;

Rational parse_rational(std::string_view text);
std::string to_string(const Rational& q);

/// Raised when an algebraic operation leaves the ring it is defined over
/// (pole in a non-divisor variable, inexact division, ...).
class AlgebraError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Number of coordinates and how many of them cut out the divisor.
class VarSpec {
public:
    VarSpec(int total_vars, int divisor_vars);

    int total_vars() const { return total_; }
    int divisor_vars() const { return divisor_; }
    int half_dim() const { return total_ / 2; }
    bool is_divisor(int var) const { return var < divisor_; }

    friend bool operator==(const VarSpec&, const VarSpec&) = default;

private:
    int total_;
    int divisor_;
};

using Exponent = std::vector<int>;

int total_degree(const Exponent& e);

/// Weight of a coefficient monomial sitting on a frame element of weight
/// `frame_weight`: total exponent plus frame weight.
int weight(const Exponent& e, int frame_weight);

class LaurentPoly {
public:
    using TermMap = std::map<Exponent, Rational>;

    explicit LaurentPoly(VarSpec spec);

    static LaurentPoly constant(VarSpec spec, const Rational& c);
    static LaurentPoly monomial(VarSpec spec, Exponent e, const Rational& c = 1);
    static LaurentPoly variable(VarSpec spec, int var, int power = 1);

    const VarSpec& spec() const { return spec_; }
    const TermMap& terms() const { return terms_; }
    std::size_t size() const { return terms_.size(); }

    bool is_zero() const { return terms_.empty(); }
    bool is_constant() const;
    bool is_polynomial() const;
    bool is_single_term() const { return terms_.size() == 1; }
    Rational constant_term() const;

    /// Coefficient of x^e (zero when absent).
    Rational coefficient(const Exponent& e) const;

    void add_term(const Exponent& e, const Rational& c);

    /// Multiplies by x^e; e may be negative in divisor slots only.
    LaurentPoly shifted(const Exponent& e) const;

    /// Exact division by x^e. Throws AlgebraError if the quotient would need
    /// a negative power of a non-divisor variable.
    LaurentPoly divide_by_monomial(const Exponent& e) const;
    bool divisible_by_monomial(const Exponent& e) const;

    /// Inverse of a single-term element c*x^e, provided every variable with
    /// e_i != 0 is a divisor variable.
    LaurentPoly unit_inverse() const;

    LaurentPoly& operator+=(const LaurentPoly& other);
    LaurentPoly& operator-=(const LaurentPoly& other);
    LaurentPoly& operator*=(const LaurentPoly& other);
    LaurentPoly& operator*=(const Rational& c);

    friend LaurentPoly operator+(LaurentPoly a, const LaurentPoly& b) { return a += b; }
    friend LaurentPoly operator-(LaurentPoly a, const LaurentPoly& b) { return a -= b; }
    friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b);
    friend LaurentPoly operator*(LaurentPoly a, const Rational& c) { return a *= c; }
    friend LaurentPoly operator*(const Rational& c, LaurentPoly a) { return a *= c; }
    LaurentPoly operator-() const;

    friend bool operator==(const LaurentPoly& a, const LaurentPoly& b)
    {
        return a.spec_ == b.spec_ && a.terms_ == b.terms_;
    }

private:
    void check_exponent(const Exponent& e) const;

    VarSpec spec_;
    TermMap terms_;
};

LaurentPoly poly_mul(const LaurentPoly& p, const LaurentPoly& q);
LaurentPoly partial_derivative(const LaurentPoly& p, int var);

/// Unit test in the local ring at the origin: nonzero constant term.
/// Throws AlgebraError when p has a negative exponent.
bool is_unit_local(const LaurentPoly& p);

/// Componentwise minimum exponent over all terms (all zeros for p = 0).
Exponent min_exponent(const LaurentPoly& p);

/// Sum-of-monomials text, e.g. "3/2*x1^-1*x3^2 - x2". Variables are 1-based.
std::string to_string(const LaurentPoly& p);
LaurentPoly parse_poly(VarSpec spec, std::string_view text);

} // namespace logsym

#endif
