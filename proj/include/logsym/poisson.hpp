// Poisson bivectors: Schouten bracket, Pfaffian and top power, degeneracy
// divisor, and the duality maps pi_sharp / pi_flat in log bases.
#ifndef LOGSYM_POISSON_HPP
#define LOGSYM_POISSON_HPP

#include "logsym/exterior.hpp"
#include "logsym/linalg.hpp"

#include <memory>
#include <utility>
#include <vector>

namespace logsym {

class SkewMatrix {
public:
    explicit SkewMatrix(PolyMatrix entries);
    static SkewMatrix from_rational(VarSpec spec, const RationalMatrix& m);

    int size() const { return m_.rows(); }
    const LaurentPoly& operator()(int i, int j) const { return m_(i, j); }
    const PolyMatrix& matrix() const { return m_; }
    const VarSpec& spec() const { return m_(0, 0).spec(); }

    bool is_constant() const { return logsym::is_constant(m_); }
    /// Throws if some entry is not constant.
    RationalMatrix constant_matrix() const;

    friend bool operator==(const SkewMatrix&, const SkewMatrix&) = default;

private:
    PolyMatrix m_;
};

class PoissonStructure {
public:
    /// Coordinate-frame bivector with polynomial coefficients.
    explicit PoissonStructure(MultiVector bivector);

    const MultiVector& bivector() const { return pi_; }
    const VarSpec& spec() const { return pi_.spec(); }
    int half_dim() const { return pi_.spec().half_dim(); }

private:
    MultiVector pi_;
};

/// Schouten-Nijenhuis bracket in the coordinate frame, normalized so that
/// [P, Q] = (-1)^(pq) [Q, P], [X, f] = X(f) and [X, Y] is the Lie bracket.
/// With this normalization pi_flat([V, Pi]) = d pi_flat(V) in every degree.
MultiVector schouten(const MultiVector& p, const MultiVector& q);

bool jacobi_holds(const PoissonStructure& p);

struct TopPower {
    LaurentPoly coefficient; // f in Pi^n = f d_1 ^ ... ^ d_2n
    MultiVector power;
};

TopPower top_power(const PoissonStructure& p);

/// Pfaffian by signed enumeration of perfect matchings.
Rational pfaffian(const RationalMatrix& a);
LaurentPoly pfaffian(const SkewMatrix& a);

struct DegeneracyDivisor {
    std::vector<std::pair<int, int>> components; // (variable index, multiplicity)
    LaurentPoly unit_part;
    bool simple_normal_crossings;
};

/// Reads off the divisor of Pi^n when its coefficient is a monomial times a
/// local unit. Throws AlgebraError if the coefficient vanishes or has any
/// other shape.
DegeneracyDivisor degeneracy_divisor(const PoissonStructure& p);

/// The matrix A with Pi = sum_{i<j} a_ij v_i ^ v_j. Throws AlgebraError when
/// Pi is not a log bivector for the declared divisor variables.
SkewMatrix log_matrix(const PoissonStructure& p);

/// pi_sharp(w) = i_w Pi for a 1-form in any frame; coordinate-frame result.
MultiVector pi_sharp(const PoissonStructure& p, const DiffForm& w);

/// Exterior power of pi_sharp: dx_{k1} ^ .. ^ dx_{kr} -> pi_sharp(dx_{k1}) ^ ..
MultiVector pi_sharp_graded(const PoissonStructure& p, const DiffForm& w);

/// A, B = A^-1 and the phi frame of a Poisson structure whose log matrix is
/// invertible over the local ring.
class LogDuality {
public:
    explicit LogDuality(const PoissonStructure& p);

    const PoissonStructure& structure() const { return p_; }
    const SkewMatrix& a() const { return a_; }
    const SkewMatrix& b() const { return b_; }
    const Frame& phi_frame() const { return phi_; }

    /// Graded pi_flat: the coordinate-frame form with phi_K in place of d_K.
    DiffForm pi_flat(const MultiVector& v) const;
    /// phi_i = pi_flat(d_i), in the coordinate frame.
    DiffForm phi(int i) const;

private:
    PoissonStructure p_;
    SkewMatrix a_;
    SkewMatrix b_;
    Frame phi_;
};

DiffForm pi_flat(const PoissonStructure& p, const MultiVector& v);

} // namespace logsym

#endif
