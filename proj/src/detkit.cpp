#include "branchkit/detkit.hpp"

#include "branchkit/combinatorics.hpp"

namespace branchkit {

ShiftTable shift_table(const BranchPair& pair, const DominantWeight& lambda, const DominantWeight& mu) {
  const int n = pair.n();
  ShiftTable u(n, n);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) u(i, j) = lambda.padded(i) - mu.padded(j) + j - i;
  }
  return u;
}

RationalMatrix build_branch_matrix(const BranchPair& pair, const DominantWeight& lambda,
                                   const DominantWeight& mu) {
  const int n = pair.n();
  const int m = pair.m();
  const ShiftTable u = shift_table(pair, lambda, mu);
  RationalMatrix matrix(n, n);
  for (int i = 0; i < n; ++i) {
    for (int col = 0; col < n; ++col) {
      const long j = col + 1;  // 1-based column index of the formulas
      const Part shift = u(i, col);
      if (j <= m) {
        const unsigned k = static_cast<unsigned>(pair.r() - 1);
        matrix(i, col) = Rational(binom_trunc(shift + pair.r() - 1, k));
        continue;
      }
      switch (pair.family()) {
        case Family::GL:
          matrix(i, col) = binom_ext(HalfInteger::from_integer(shift + n - j), static_cast<unsigned>(n - j));
          break;
        case Family::Sp:
          matrix(i, col) = binom_ext(HalfInteger::from_integer(shift + 2 * n - 2 * j + 1),
                                     static_cast<unsigned>(2 * n - 2 * j + 1));
          break;
        case Family::SO: {
          const long p = pair.big().size();
          // shift + p - 2j - 1/2
          const HalfInteger top = HalfInteger::plus_half(shift + p - 2 * j - 1);
          matrix(i, col) = binom_ext(top, static_cast<unsigned>(p - 2 * j));
          break;
        }
      }
    }
  }
  return matrix;
}

std::pair<IntegerMatrix, Integer> clear_denominators(const RationalMatrix& matrix) {
  IntegerMatrix cleared(matrix.rows(), matrix.cols());
  Integer factor = 1;
  for (Eigen::Index i = 0; i < matrix.rows(); ++i) {
    Integer row_lcm = 1;
    for (Eigen::Index j = 0; j < matrix.cols(); ++j) {
      mpz_lcm(row_lcm.get_mpz_t(), row_lcm.get_mpz_t(), matrix(i, j).get_den_mpz_t());
    }
    for (Eigen::Index j = 0; j < matrix.cols(); ++j) {
      cleared(i, j) = matrix(i, j).get_num() * (row_lcm / matrix(i, j).get_den());
    }
    factor *= row_lcm;
  }
  return {std::move(cleared), std::move(factor)};
}

Rational det_exact(const RationalMatrix& matrix) {
  const auto [cleared, factor] = clear_denominators(matrix);
  Rational result(bareiss_determinant(cleared), factor);
  result.canonicalize();
  return result;
}

}  // namespace branchkit
