// t-general position of matrices over the local ring, with certificates.
//
// Columns of [M | N] are numbered 0..2k-1 (M first). A set of t columns is
// independent when some t x t minor on those columns is a unit, i.e. has a
// nonzero constant term.
#ifndef LOGSYM_GENPOS_HPP
#define LOGSYM_GENPOS_HPP

#include "logsym/linalg.hpp"
#include "logsym/poisson.hpp"

#include <optional>
#include <vector>

namespace logsym {

struct MinorWitness {
    std::vector<int> columns;
    std::vector<int> rows;
};

struct GenPosCertificate {
    bool verdict = false;
    int t = 0;
    /// One unit minor per column set checked, in lexicographic column order.
    std::vector<MinorWitness> witnesses;
    /// First column set (lexicographic) without a unit minor.
    std::optional<std::vector<int>> failure;
};

GenPosCertificate is_relative_t_general(const PolyMatrix& m, const PolyMatrix& n, int t);
GenPosCertificate is_standard_t_general(const PolyMatrix& m, int t);
GenPosCertificate poisson_t_general(const PoissonStructure& p, int t);

/// Recomputes every minor named by the certificate exactly and checks that
/// witnesses are units and that the failing column set has no unit minor.
bool verify_certificate(const PolyMatrix& m, const PolyMatrix& n, const GenPosCertificate& cert);

} // namespace logsym

#endif
