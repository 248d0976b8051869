// Toric Poisson structures Pi_A = sum_{i<j} a_ij x_i x_j d_i ^ d_j on the
// standard chart, their certification, and the dimension counts of the
// torus complement.
#ifndef LOGSYM_TORIC_HPP
#define LOGSYM_TORIC_HPP

#include "logsym/genpos.hpp"
#include "logsym/poisson.hpp"

#include <optional>
#include <random>
#include <string>
#include <vector>

namespace logsym {

struct ToricStructure {
    int n;
    RationalMatrix a;
    PoissonStructure structure;
};

/// Throws std::invalid_argument unless `a` is skew of even size 2..16.
ToricStructure make_toric(const RationalMatrix& a);

struct GenPosEntry {
    GenPosCertificate certificate;
    bool certificate_verified;
};

struct ToricReport {
    Rational pfaffian;
    bool nonsingular;
    bool jacobi;
    std::optional<DegeneracyDivisor> divisor;
    std::string divisor_error;
    /// t = 1, 2, 3, 2n, restricted to t <= 2n and without repeats.
    std::vector<GenPosEntry> general_position;
};

ToricReport certify(const ToricStructure& t);

long long betti_torus(int d, int i);

/// Global values h^i(Omega^j(log D)) of a toric variety: binom(d, j) for
/// i = 0 and 0 otherwise. Transcribed, not computed from local data.
long long log_hodge_numbers(int d, int i, int j);

/// binom(2n, 2); std::domain_error for n < 2.
long long deformation_tangent_dim(int n);

/// Skew matrix with entries p/q, p in [-9, 9], q in [1, 4].
RationalMatrix random_skew(std::mt19937_64& rng, int n);

/// random_skew redrawn until the upper entries are nonzero with pairwise
/// distinct absolute values.
RationalMatrix random_generic_skew(std::mt19937_64& rng, int n);

/// Redraws random_generic_skew until Pf != 0 and the matrix is 2-general.
RationalMatrix random_two_general(std::mt19937_64& rng, int n);

/// The 4 x 4 matrix with a_12..a_34 = 1..6.
RationalMatrix sample_matrix();

/// Two 2 x 2 blocks [[0, a], [-a, 0]], [[0, b], [-b, 0]].
RationalMatrix block_diagonal(const Rational& a, const Rational& b);

} // namespace logsym

#endif
