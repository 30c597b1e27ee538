#pragma once

// Branch matrices and exact determinants.

#include "branchkit/core.hpp"
#include "branchkit/scalar.hpp"

#include <Eigen/Core>

#include <cassert>
#include <numeric>
#include <utility>

namespace branchkit {

using ShiftTable = Eigen::Matrix<Part, Eigen::Dynamic, Eigen::Dynamic>;

/// u(i, j) = lambda_i - mu_j + j - i over the n x n grid, n = rank of the big
/// group, with both weights zero-padded.
ShiftTable shift_table(const BranchPair& pair, const DominantWeight& lambda, const DominantWeight& mu);

/// The n x n matrix whose determinant (times 2^l) is the branching
/// multiplicity. Columns j <= m hold truncated binomials of u + r - 1; the
/// remaining columns hold family-specific half-integer binomials.
RationalMatrix build_branch_matrix(const BranchPair& pair, const DominantWeight& lambda,
                                   const DominantWeight& mu);

/// Fraction-free (Bareiss) determinant of a matrix over an integral domain in
/// which every Bareiss quotient is exact. Pivots on the first nonzero entry of
/// each column.
template <typename Derived>
typename Derived::Scalar bareiss_determinant(const Eigen::MatrixBase<Derived>& matrix) {
  using Scalar = typename Derived::Scalar;
  assert(matrix.rows() == matrix.cols());
  Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic> a = matrix;
  const Eigen::Index n = a.rows();
  if (n == 0) return Scalar(1);

  Scalar previous_pivot(1);
  bool negate = false;
  for (Eigen::Index k = 0; k + 1 < n; ++k) {
    Eigen::Index pivot_row = k;
    while (pivot_row < n && a(pivot_row, k) == 0) ++pivot_row;
    if (pivot_row == n) return Scalar(0);
    if (pivot_row != k) {
      a.row(k).swap(a.row(pivot_row));
      negate = !negate;
    }
    for (Eigen::Index i = k + 1; i < n; ++i) {
      for (Eigen::Index j = k + 1; j < n; ++j) {
        Scalar cross = a(i, j) * a(k, k) - a(i, k) * a(k, j);
        a(i, j) = cross / previous_pivot;
      }
      a(i, k) = 0;
    }
    previous_pivot = a(k, k);
  }
  Scalar result = a(n - 1, n - 1);
  if (negate) result = -result;
  return result;
}

/// Gaussian elimination over a field, pivoting on the first nonzero entry.
template <typename Derived>
typename Derived::Scalar elimination_determinant(const Eigen::MatrixBase<Derived>& matrix) {
  using Scalar = typename Derived::Scalar;
  assert(matrix.rows() == matrix.cols());
  Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic> a = matrix;
  const Eigen::Index n = a.rows();
  Scalar result(1);
  for (Eigen::Index k = 0; k < n; ++k) {
    Eigen::Index pivot_row = k;
    while (pivot_row < n && a(pivot_row, k) == 0) ++pivot_row;
    if (pivot_row == n) return Scalar(0);
    if (pivot_row != k) {
      a.row(k).swap(a.row(pivot_row));
      result = -result;
    }
    result *= a(k, k);
    for (Eigen::Index i = k + 1; i < n; ++i) {
      if (a(i, k) == 0) continue;
      const Scalar factor = a(i, k) / a(k, k);
      for (Eigen::Index j = k + 1; j < n; ++j) a(i, j) -= factor * a(k, j);
      a(i, k) = 0;
    }
  }
  return result;
}

/// Clears the denominators of a rational matrix row by row. Returns the
/// integer matrix and the product of the row multipliers.
std::pair<IntegerMatrix, Integer> clear_denominators(const RationalMatrix& matrix);

/// Exact determinant: denominators are cleared per row, Bareiss runs on the
/// integer matrix and the result is divided by the cleared factor. The empty
/// matrix has determinant 1.
Rational det_exact(const RationalMatrix& matrix);

}  // namespace branchkit
