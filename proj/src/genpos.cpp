#include "logsym/genpos.hpp"

#include "logsym/parallel.hpp"

namespace logsym {

namespace {

std::vector<std::vector<int>> index_subsets(int n, int k)
{
    std::vector<std::vector<int>> out;
    for (IndexSet s : subsets_of_size(n, k))
        out.push_back(s.indices());
    return out;
}

PolyMatrix block_matrix(const PolyMatrix& m, const PolyMatrix& n)
{
    const int k = m.rows();
    PolyMatrix out(k, 2 * k, m(0, 0));
    for (int r = 0; r < k; ++r)
        for (int c = 0; c < k; ++c) {
            out(r, c) = m(r, c);
            out(r, k + c) = n(r, c);
        }
    return out;
}

void check_inputs(const PolyMatrix& m, const PolyMatrix& n)
{
    const int k = m.rows();
    if (k == 0 || m.cols() != k || n.rows() != k || n.cols() != k)
        throw std::invalid_argument("general position needs two k x k matrices");
    for (const PolyMatrix* x : {&m, &n})
        for (int r = 0; r < k; ++r)
            for (int c = 0; c < k; ++c)
                if (!(*x)(r, c).is_polynomial())
                    throw AlgebraError("matrix entry has a pole; not in the local ring");
}

} // namespace

GenPosCertificate is_relative_t_general(const PolyMatrix& m, const PolyMatrix& n, int t)
{
    check_inputs(m, n);
    const int k = m.rows();
    if (t < 1 || t > k)
        throw std::out_of_range("t must lie in [1, k]");

    // Minors are units iff their value at the origin is nonzero, and taking
    // the value at the origin commutes with the determinant.
    const RationalMatrix at_origin = constant_terms(block_matrix(m, n));
    const auto column_sets = index_subsets(2 * k, t);
    const auto row_sets = index_subsets(k, t);

    std::vector<int> found(column_sets.size(), -1);
    parallel_for(column_sets.size(), [&](std::size_t c) {
        for (std::size_t r = 0; r < row_sets.size(); ++r)
            if (determinant(submatrix(at_origin, row_sets[r], column_sets[c])) != 0) {
                found[c] = static_cast<int>(r);
                return;
            }
    });

    GenPosCertificate cert;
    cert.t = t;
    cert.verdict = true;
    for (std::size_t c = 0; c < column_sets.size(); ++c) {
        if (found[c] < 0) {
            cert.verdict = false;
            cert.failure = column_sets[c];
            break;
        }
        cert.witnesses.push_back({column_sets[c], row_sets[found[c]]});
    }
    return cert;
}

GenPosCertificate is_standard_t_general(const PolyMatrix& m, int t)
{
    if (m.rows() == 0)
        throw std::invalid_argument("empty matrix");
    return is_relative_t_general(m, identity_matrix(m(0, 0).spec(), m.rows()), t);
}

GenPosCertificate poisson_t_general(const PoissonStructure& p, int t)
{
    return is_standard_t_general(log_matrix(p).matrix(), t);
}

bool verify_certificate(const PolyMatrix& m, const PolyMatrix& n, const GenPosCertificate& cert)
{
    check_inputs(m, n);
    const int k = m.rows();
    const PolyMatrix block = block_matrix(m, n);
    const auto column_sets = index_subsets(2 * k, cert.t);
    if (cert.witnesses.size() > column_sets.size())
        return false;
    for (std::size_t c = 0; c < cert.witnesses.size(); ++c) {
        const auto& w = cert.witnesses[c];
        if (w.columns != column_sets[c] || static_cast<int>(w.rows.size()) != cert.t)
            return false;
        if (!is_unit_local(determinant(submatrix(block, w.rows, w.columns))))
            return false;
    }
    if (cert.verdict)
        return !cert.failure && cert.witnesses.size() == column_sets.size();
    if (!cert.failure || *cert.failure != column_sets[cert.witnesses.size()])
        return false;
    for (const auto& rows : index_subsets(k, cert.t))
        if (is_unit_local(determinant(submatrix(block, rows, *cert.failure))))
            return false;
    return true;
}

} // namespace logsym
