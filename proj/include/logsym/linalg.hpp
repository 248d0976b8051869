// Exact linear algebra: dense matrices over Q and over Laurent polynomials,
// and sparse rational matrices for the differentials of weight slices.
#ifndef LOGSYM_LINALG_HPP
#define LOGSYM_LINALG_HPP

#include "logsym/ring.hpp"

#include <map>
#include <optional>
#include <vector>

namespace logsym {

template <class T>
class Matrix {
public:
    Matrix(int rows, int cols, const T& fill) : rows_(rows), cols_(cols), data_(rows * cols, fill) {}

    int rows() const { return rows_; }
    int cols() const { return cols_; }
    T& operator()(int r, int c) { return data_[r * cols_ + c]; }
    const T& operator()(int r, int c) const { return data_[r * cols_ + c]; }

    friend bool operator==(const Matrix&, const Matrix&) = default;

private:
    int rows_;
    int cols_;
    std::vector<T> data_;
};

using RationalMatrix = Matrix<Rational>;
using PolyMatrix = Matrix<LaurentPoly>;

RationalMatrix identity_matrix(int size);
PolyMatrix identity_matrix(VarSpec spec, int size);
PolyMatrix to_poly_matrix(VarSpec spec, const RationalMatrix& m);

bool is_constant(const PolyMatrix& m);
/// Entrywise constant terms: the value at the origin for polynomial entries.
RationalMatrix constant_terms(const PolyMatrix& m);

RationalMatrix multiply(const RationalMatrix& a, const RationalMatrix& b);
PolyMatrix multiply(const PolyMatrix& a, const PolyMatrix& b);

Rational determinant(const RationalMatrix& m);
int rank(const RationalMatrix& m);
std::optional<RationalMatrix> inverse(const RationalMatrix& m);

/// Determinant by dynamic programming over row subsets (exact, no division).
LaurentPoly determinant(const PolyMatrix& m);

/// Inverse over the Laurent ring. Constant matrices are inverted over Q;
/// otherwise Gauss-Jordan elimination with single-term (Laurent unit) pivots.
/// Throws AlgebraError when the matrix is singular or no such pivot exists.
PolyMatrix inverse_local(const PolyMatrix& m);

PolyMatrix submatrix(const PolyMatrix& m, const std::vector<int>& rows, const std::vector<int>& cols);
RationalMatrix submatrix(const RationalMatrix& m, const std::vector<int>& rows, const std::vector<int>& cols);

using SparseVector = std::map<int, Rational>;

void axpy(SparseVector& y, const Rational& a, const SparseVector& x);

/// Column-major sparse matrix: column j is the image of source basis vector j.
class SparseMatrix {
public:
    SparseMatrix(int rows, int cols) : rows_(rows), columns_(cols) {}

    int rows() const { return rows_; }
    int cols() const { return static_cast<int>(columns_.size()); }
    const SparseVector& column(int j) const { return columns_[j]; }
    void set_column(int j, SparseVector v);

    SparseVector apply(const SparseVector& x) const;
    bool is_zero() const;

    friend bool operator==(const SparseMatrix&, const SparseMatrix&) = default;

private:
    int rows_;
    std::vector<SparseVector> columns_;
};

/// Product a*b (apply b first).
SparseMatrix multiply(const SparseMatrix& a, const SparseMatrix& b);

enum class EliminationOrder { forward, reverse };

/// Column-space rank by incremental echelon reduction. The forward order
/// scans columns left to right and pivots on the smallest row index; the
/// reverse order scans right to left and pivots on the largest.
int rank(const SparseMatrix& m, EliminationOrder order = EliminationOrder::forward);

/// Rank computed in both orders; throws std::logic_error if they disagree.
int checked_rank(const SparseMatrix& m);

} // namespace logsym

#endif
