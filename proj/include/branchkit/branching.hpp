#pragma once

// Branching multiplicities for GL(m) ⊂ GL(n), Sp(2m) ⊂ Sp(2n), SO(q) ⊂ SO(p).

#include "branchkit/core.hpp"
#include "branchkit/scalar.hpp"

#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace branchkit {

class WrongCorank : public Error { public: using Error::Error; };
class BadRankWindow : public Error { public: using Error::Error; };
/// The determinant did not vanish outside the interlacing box.
class ZeroSetMismatch : public Error { public: using Error::Error; };

/// ShortCircuit returns 0 outside the interlacing box without touching the
/// determinant. Full always evaluates it and checks that it vanishes there.
enum class Evaluation { ShortCircuit, Full };

#ifdef BRANCHKIT_VERIFY
inline constexpr Evaluation kDefaultEvaluation = Evaluation::Full;
#else
inline constexpr Evaluation kDefaultEvaluation = Evaluation::ShortCircuit;
#endif

struct MultiplicityRow {
  DominantWeight mu;
  Integer mult;

  friend bool operator==(const MultiplicityRow&, const MultiplicityRow&) = default;
};

/// Restriction of one irreducible representation of the big group. Rows are
/// sorted lexicographically descending by mu and carry positive multiplicities.
struct MultiplicityTable {
  BranchPair pair;
  DominantWeight lambda;
  std::vector<MultiplicityRow> rows;

  /// Multiplicity of mu, 0 when absent.
  Integer at(const DominantWeight& mu) const;
  friend bool operator==(const MultiplicityTable&, const MultiplicityTable&) = default;
};

/// lambda_i >= mu_i >= lambda_{i+delta} for every i <= m (zero padded).
bool interlaces(const BranchPair& pair, const DominantWeight& lambda, const DominantWeight& mu);

/// 2^l det(branch matrix), evaluated regardless of interlacing. Throws
/// NonIntegerResult when the value is not a non-negative integer.
Integer determinant_multiplicity(const BranchPair& pair, const DominantWeight& lambda,
                                 const DominantWeight& mu);

Integer multiplicity(const BranchPair& pair, const DominantWeight& lambda, const DominantWeight& mu,
                     Evaluation evaluation = kDefaultEvaluation);

/// Every dominant weight of `group` with first part at most max_part,
/// lexicographically descending.
std::vector<DominantWeight> dominant_weights_up_to(const ClassicalGroup& group, Part max_part);

/// Every mu in the interlacing box, lexicographically descending.
std::vector<DominantWeight> support(const BranchPair& pair, const DominantWeight& lambda);

MultiplicityTable decompose(const BranchPair& pair, const DominantWeight& lambda,
                            Evaluation evaluation = kDefaultEvaluation);

/// Sum of mult * dim(mu) over every subgroup irreducible, paired with
/// dim(lambda). For SO(2m) subgroups a row with mu_m > 0 covers both
/// (..., mu_m) and (..., -mu_m), which occur with the same multiplicity.
std::pair<Integer, Integer> dimension_sum(const MultiplicityTable& table);

// Corank-two product formulas.

/// Non-increasing rearrangement x_1 >= y_1 >= x_2 >= ... >= y_{n-1} >= x_n of
/// the parts of lambda and of mu padded to length n - 1.
struct RearrangedChain {
  std::vector<Part> x;
  std::vector<Part> y;
};

/// True for GL(n-2) ⊂ GL(n), Sp(2n-2) ⊂ Sp(2n), SO(2n-1) ⊂ SO(2n+1) and
/// SO(2n-2) ⊂ SO(2n).
bool has_corank_two_pattern(const BranchPair& pair);

RearrangedChain rearrange(const DominantWeight& lambda, const DominantWeight& mu, int n);

/// Throws WrongCorank unless has_corank_two_pattern(pair).
Integer product_formula(const BranchPair& pair, const DominantWeight& lambda, const DominantWeight& mu);

// Cross-family comparison for GL^n_{2m-n}, Sp^{2n}_{2m}, SO^{2n+1}_{2m+1}, SO^{2n}_{2m}.

struct PairValue {
  BranchPair pair;
  /// Absent when lambda or mu cannot be read as a weight of this pair
  /// without dropping a nonzero part.
  std::optional<Integer> mult;
};

struct ClauseVerdict {
  /// Rank window and length bound of the clause both hold.
  bool hypotheses = false;
  /// All defined multiplicities among the clause's pairs coincide.
  bool equal = false;
};

struct ComparisonReport {
  int n = 0;
  int m = 0;
  std::vector<Part> lambda;
  std::vector<Part> mu;
  /// GL entry is present only when 2m - n >= 0.
  std::vector<PairValue> values;
  ClauseVerdict mu_length;      // l(mu) <= 2m - n, all four pairs
  ClauseVerdict lambda_length;  // l(lambda) <= 2m - n, all four pairs
  ClauseVerdict symplectic_orthogonal;  // l(lambda) <= m, Sp and both SO pairs

  /// A clause whose hypotheses hold but whose values differ.
  bool violated() const;
};

/// Throws BadRankWindow unless 0 <= m < n.
ComparisonReport compare_pairs(int n, int m, std::span<const Part> lambda, std::span<const Part> mu);

}  // namespace branchkit
