#include "logsym/linalg.hpp"

#include <bit>
#include <cstdint>

namespace logsym {

RationalMatrix identity_matrix(int size)
{
    RationalMatrix out(size, size, 0);
    for (int i = 0; i < size; ++i)
        out(i, i) = 1;
    return out;
}

PolyMatrix identity_matrix(VarSpec spec, int size)
{
    return to_poly_matrix(spec, identity_matrix(size));
}

PolyMatrix to_poly_matrix(VarSpec spec, const RationalMatrix& m)
{
    PolyMatrix out(m.rows(), m.cols(), LaurentPoly(spec));
    for (int r = 0; r < m.rows(); ++r)
        for (int c = 0; c < m.cols(); ++c)
            out(r, c) = LaurentPoly::constant(spec, m(r, c));
    return out;
}

bool is_constant(const PolyMatrix& m)
{
    for (int r = 0; r < m.rows(); ++r)
        for (int c = 0; c < m.cols(); ++c)
            if (!m(r, c).is_constant())
                return false;
    return true;
}

RationalMatrix constant_terms(const PolyMatrix& m)
{
    RationalMatrix out(m.rows(), m.cols(), 0);
    for (int r = 0; r < m.rows(); ++r)
        for (int c = 0; c < m.cols(); ++c)
            out(r, c) = m(r, c).constant_term();
    return out;
}

RationalMatrix multiply(const RationalMatrix& a, const RationalMatrix& b)
{
    if (a.cols() != b.rows())
        throw std::invalid_argument("matrix shape mismatch");
    RationalMatrix out(a.rows(), b.cols(), 0);
    for (int i = 0; i < a.rows(); ++i)
        for (int k = 0; k < a.cols(); ++k)
            if (a(i, k) != 0)
                for (int j = 0; j < b.cols(); ++j)
                    out(i, j) += a(i, k) * b(k, j);
    return out;
}

PolyMatrix multiply(const PolyMatrix& a, const PolyMatrix& b)
{
    if (a.cols() != b.rows() || a.rows() == 0)
        throw std::invalid_argument("matrix shape mismatch");
    PolyMatrix out(a.rows(), b.cols(), LaurentPoly(a(0, 0).spec()));
    for (int i = 0; i < a.rows(); ++i)
        for (int k = 0; k < a.cols(); ++k)
            if (!a(i, k).is_zero())
                for (int j = 0; j < b.cols(); ++j)
                    out(i, j) += a(i, k) * b(k, j);
    return out;
}

namespace {

// Row-reduces m in place; returns rank and the determinant sign/product.
int eliminate(RationalMatrix& m, Rational* det)
{
    int rank = 0;
    if (det)
        *det = 1;
    for (int c = 0; c < m.cols() && rank < m.rows(); ++c) {
        int pivot = -1;
        for (int r = rank; r < m.rows(); ++r)
            if (m(r, c) != 0) {
                pivot = r;
                break;
            }
        if (pivot < 0) {
            if (det)
                *det = 0;
            continue;
        }
        if (pivot != rank) {
            for (int k = 0; k < m.cols(); ++k)
                std::swap(m(pivot, k), m(rank, k));
            if (det)
                *det = -*det;
        }
        if (det)
            *det *= m(rank, c);
        for (int r = rank + 1; r < m.rows(); ++r) {
            if (m(r, c) == 0)
                continue;
            Rational f = m(r, c) / m(rank, c);
            for (int k = c; k < m.cols(); ++k)
                m(r, k) -= f * m(rank, k);
        }
        ++rank;
    }
    return rank;
}

} // namespace

Rational determinant(const RationalMatrix& m)
{
    if (m.rows() != m.cols())
        throw std::invalid_argument("determinant of a non-square matrix");
    RationalMatrix work = m;
    Rational det;
    int r = eliminate(work, &det);
    return r == m.rows() ? det : Rational(0);
}

int rank(const RationalMatrix& m)
{
    RationalMatrix work = m;
    return eliminate(work, nullptr);
}

std::optional<RationalMatrix> inverse(const RationalMatrix& m)
{
    const int n = m.rows();
    if (n != m.cols())
        throw std::invalid_argument("inverse of a non-square matrix");
    RationalMatrix work = m;
    RationalMatrix inv = identity_matrix(n);
    for (int c = 0; c < n; ++c) {
        int pivot = -1;
        for (int r = c; r < n; ++r)
            if (work(r, c) != 0) {
                pivot = r;
                break;
            }
        if (pivot < 0)
            return std::nullopt;
        for (int k = 0; k < n; ++k) {
            std::swap(work(pivot, k), work(c, k));
            std::swap(inv(pivot, k), inv(c, k));
        }
        Rational p = work(c, c);
        for (int k = 0; k < n; ++k) {
            work(c, k) /= p;
            inv(c, k) /= p;
        }
        for (int r = 0; r < n; ++r) {
            if (r == c || work(r, c) == 0)
                continue;
            Rational f = work(r, c);
            for (int k = 0; k < n; ++k) {
                work(r, k) -= f * work(c, k);
                inv(r, k) -= f * inv(c, k);
            }
        }
    }
    return inv;
}

LaurentPoly determinant(const PolyMatrix& m)
{
    const int n = m.rows();
    if (n != m.cols())
        throw std::invalid_argument("determinant of a non-square matrix");
    if (n == 0)
        throw std::invalid_argument("determinant of an empty matrix needs a variable spec");
    const VarSpec spec = m(0, 0).spec();
    // partial[mask]: signed sum over injections of the first popcount(mask)
    // columns into the rows in mask.
    std::vector<LaurentPoly> partial(std::size_t{1} << n, LaurentPoly(spec));
    partial[0] = LaurentPoly::constant(spec, 1);
    for (std::uint32_t mask = 0; mask + 1 < (std::uint32_t{1} << n); ++mask) {
        if (partial[mask].is_zero())
            continue;
        const int col = std::popcount(mask);
        for (int r = 0; r < n; ++r) {
            if (mask & (1u << r) || m(r, col).is_zero())
                continue;
            // rows of mask above r each contribute an inversion
            const int above = std::popcount(mask >> (r + 1));
            LaurentPoly term = partial[mask] * m(r, col);
            if (above % 2)
                partial[mask | (1u << r)] -= term;
            else
                partial[mask | (1u << r)] += term;
        }
    }
    return partial[(std::size_t{1} << n) - 1];
}

PolyMatrix inverse_local(const PolyMatrix& m)
{
    const int n = m.rows();
    if (n != m.cols() || n == 0)
        throw std::invalid_argument("inverse of a non-square or empty matrix");
    const VarSpec spec = m(0, 0).spec();
    if (is_constant(m)) {
        auto inv = inverse(constant_terms(m));
        if (!inv)
            throw AlgebraError("matrix is singular");
        return to_poly_matrix(spec, *inv);
    }
    PolyMatrix work = m;
    PolyMatrix inv = identity_matrix(spec, n);
    for (int c = 0; c < n; ++c) {
        int pivot = -1;
        for (int r = c; r < n; ++r) {
            const LaurentPoly& p = work(r, c);
            if (p.is_single_term()) {
                const Exponent& e = p.terms().begin()->first;
                bool invertible = true;
                for (int v = spec.divisor_vars(); v < spec.total_vars(); ++v)
                    invertible = invertible && e[v] == 0;
                if (invertible) {
                    pivot = r;
                    break;
                }
            }
        }
        if (pivot < 0)
            throw AlgebraError("no Laurent-unit pivot; inverse not representable in the localized ring");
        for (int k = 0; k < n; ++k) {
            std::swap(work(pivot, k), work(c, k));
            std::swap(inv(pivot, k), inv(c, k));
        }
        LaurentPoly p_inv = work(c, c).unit_inverse();
        for (int k = 0; k < n; ++k) {
            work(c, k) = work(c, k) * p_inv;
            inv(c, k) = inv(c, k) * p_inv;
        }
        for (int r = 0; r < n; ++r) {
            if (r == c || work(r, c).is_zero())
                continue;
            LaurentPoly f = work(r, c);
            for (int k = 0; k < n; ++k) {
                work(r, k) -= f * work(c, k);
                inv(r, k) -= f * inv(c, k);
            }
        }
    }
    return inv;
}

PolyMatrix submatrix(const PolyMatrix& m, const std::vector<int>& rows, const std::vector<int>& cols)
{
    PolyMatrix out(static_cast<int>(rows.size()), static_cast<int>(cols.size()), m(0, 0));
    for (std::size_t r = 0; r < rows.size(); ++r)
        for (std::size_t c = 0; c < cols.size(); ++c)
            out(r, c) = m(rows[r], cols[c]);
    return out;
}

RationalMatrix submatrix(const RationalMatrix& m, const std::vector<int>& rows, const std::vector<int>& cols)
{
    RationalMatrix out(static_cast<int>(rows.size()), static_cast<int>(cols.size()), 0);
    for (std::size_t r = 0; r < rows.size(); ++r)
        for (std::size_t c = 0; c < cols.size(); ++c)
            out(r, c) = m(rows[r], cols[c]);
    return out;
}

void axpy(SparseVector& y, const Rational& a, const SparseVector& x)
{
    if (a == 0)
        return;
    for (const auto& [i, v] : x) {
        auto [it, inserted] = y.try_emplace(i, a * v);
        if (!inserted) {
            it->second += a * v;
            if (it->second == 0)
                y.erase(it);
        }
    }
}

void SparseMatrix::set_column(int j, SparseVector v)
{
    for (auto it = v.begin(); it != v.end();) {
        if (it->first < 0 || it->first >= rows_)
            throw std::out_of_range("sparse row index out of range");
        it = it->second == 0 ? v.erase(it) : std::next(it);
    }
    columns_.at(j) = std::move(v);
}

SparseVector SparseMatrix::apply(const SparseVector& x) const
{
    SparseVector y;
    for (const auto& [j, a] : x)
        axpy(y, a, columns_.at(j));
    return y;
}

bool SparseMatrix::is_zero() const
{
    for (const auto& c : columns_)
        if (!c.empty())
            return false;
    return true;
}

SparseMatrix multiply(const SparseMatrix& a, const SparseMatrix& b)
{
    if (a.cols() != b.rows())
        throw std::invalid_argument("sparse matrix shape mismatch");
    SparseMatrix out(a.rows(), b.cols());
    for (int j = 0; j < b.cols(); ++j)
        out.set_column(j, a.apply(b.column(j)));
    return out;
}

int rank(const SparseMatrix& m, EliminationOrder order)
{
    // pivots keyed by their leading row; each stored vector has value 1 there
    std::map<int, SparseVector> pivots;
    const bool fwd = order == EliminationOrder::forward;
    const int n = m.cols();
    for (int step = 0; step < n; ++step) {
        SparseVector v = m.column(fwd ? step : n - 1 - step);
        while (!v.empty()) {
            const auto lead = fwd ? v.begin() : std::prev(v.end());
            auto p = pivots.find(lead->first);
            if (p == pivots.end()) {
                Rational inv = 1 / lead->second;
                for (auto& [i, x] : v)
                    x *= inv;
                pivots.emplace(lead->first, std::move(v));
                break;
            }
            axpy(v, -lead->second, p->second);
        }
    }
    return static_cast<int>(pivots.size());
}

int checked_rank(const SparseMatrix& m)
{
    int a = rank(m, EliminationOrder::forward);
    int b = rank(m, EliminationOrder::reverse);
    if (a != b)
        throw std::logic_error("rank mismatch between elimination orders");
    return a;
}

} // namespace logsym
