#include "branchkit/branching.hpp"

#include "branchkit/detkit.hpp"
#include "branchkit/weyl.hpp"

#include <algorithm>

namespace branchkit {

Integer MultiplicityTable::at(const DominantWeight& mu) const {
  for (const auto& row : rows) {
    if (row.mu == mu) return row.mult;
  }
  return 0;
}

bool interlaces(const BranchPair& pair, const DominantWeight& lambda, const DominantWeight& mu) {
  for (int i = 0; i < pair.m(); ++i) {
    if (lambda.padded(i) < mu.padded(i)) return false;
    if (mu.padded(i) < lambda.padded(i + pair.delta())) return false;
  }
  return true;
}

Integer determinant_multiplicity(const BranchPair& pair, const DominantWeight& lambda,
                                 const DominantWeight& mu) {
  Rational value = det_exact(build_branch_matrix(pair, lambda, mu));
  value *= Rational(Integer(1) << pair.l());
  if (!is_integral(value) || value < 0) {
    throw NonIntegerResult("multiplicity for " + to_string(pair) + " at lambda=(" + to_string(lambda) +
                           "), mu=(" + to_string(mu) + ") evaluated to " + to_decimal(value));
  }
  return value.get_num();
}

Integer multiplicity(const BranchPair& pair, const DominantWeight& lambda, const DominantWeight& mu,
                     Evaluation evaluation) {
  const bool inside = interlaces(pair, lambda, mu);
  if (!inside && evaluation == Evaluation::ShortCircuit) return 0;
  Integer value = determinant_multiplicity(pair, lambda, mu);
  if (inside == (value == 0)) {
    throw ZeroSetMismatch("determinant for " + to_string(pair) + " at lambda=(" + to_string(lambda) +
                          "), mu=(" + to_string(mu) + ") is " + to_decimal(value) +
                          (inside ? " inside" : " outside") + " the interlacing box");
  }
  return value;
}

std::vector<DominantWeight> support(const BranchPair& pair, const DominantWeight& lambda) {
  const int m = pair.m();
  const int delta = pair.delta();
  std::vector<DominantWeight> result;
  std::vector<Part> mu(m);

  // Depth-first descent: mu_i runs from min(mu_{i-1}, lambda_i) down to
  // lambda_{i+delta}.
  auto descend = [&](auto&& self, int i) -> void {
    if (i == m) {
      result.push_back(make_weight(pair.small(), mu));
      return;
    }
    const Part upper = i == 0 ? lambda.padded(0) : std::min(mu[i - 1], lambda.padded(i));
    const Part lower = lambda.padded(i + delta);
    for (Part value = upper; value >= lower; --value) {
      mu[i] = value;
      self(self, i + 1);
    }
  };
  descend(descend, 0);
  return result;
}

std::vector<DominantWeight> dominant_weights_up_to(const ClassicalGroup& group, Part max_part) {
  const int rank = group.rank();
  std::vector<DominantWeight> result;
  std::vector<Part> parts(rank);
  auto descend = [&](auto&& self, int i) -> void {
    if (i == rank) {
      result.push_back(make_weight(group, parts));
      return;
    }
    for (Part value = i == 0 ? max_part : parts[i - 1]; value >= 0; --value) {
      parts[i] = value;
      self(self, i + 1);
    }
  };
  descend(descend, 0);
  return result;
}

MultiplicityTable decompose(const BranchPair& pair, const DominantWeight& lambda, Evaluation evaluation) {
  MultiplicityTable table{pair, lambda, {}};
  for (auto& mu : support(pair, lambda)) {
    Integer mult = multiplicity(pair, lambda, mu, evaluation);
    if (mult != 0) table.rows.push_back({std::move(mu), std::move(mult)});
  }
  return table;
}

std::pair<Integer, Integer> dimension_sum(const MultiplicityTable& table) {
  const ClassicalGroup& small = table.pair.small();
  const auto last = static_cast<std::size_t>(small.rank()) - 1;
  Integer total = 0;
  for (const auto& row : table.rows) {
    Integer term = row.mult * weyl_dim_product(small, row.mu);
    // For SO(2m), mu with mu_m > 0 stands for the two irreducibles (..., +-mu_m).
    if (small.is_even_orthogonal() && small.rank() > 0 && row.mu.padded(last) > 0) term *= 2;
    total += term;
  }
  return {total, weyl_dim_product(table.pair.big(), table.lambda)};
}

bool has_corank_two_pattern(const BranchPair& pair) {
  switch (pair.family()) {
    case Family::GL: return pair.n() >= 2 && pair.m() == pair.n() - 2;
    case Family::Sp: return pair.m() == pair.n() - 1;
    case Family::SO: return pair.small().size() == pair.big().size() - 2;
  }
  return false;
}

RearrangedChain rearrange(const DominantWeight& lambda, const DominantWeight& mu, int n) {
  std::vector<Part> merged;
  merged.reserve(2 * n - 1);
  for (int i = 0; i < n; ++i) merged.push_back(lambda.padded(i));
  for (int i = 0; i + 1 < n; ++i) merged.push_back(mu.padded(i));
  std::sort(merged.begin(), merged.end(), std::greater<>());
  RearrangedChain chain;
  for (std::size_t k = 0; k < merged.size(); ++k) (k % 2 == 0 ? chain.x : chain.y).push_back(merged[k]);
  return chain;
}

Integer product_formula(const BranchPair& pair, const DominantWeight& lambda, const DominantWeight& mu) {
  if (!has_corank_two_pattern(pair)) {
    throw WrongCorank(to_string(pair) + " is not one of the corank-two patterns");
  }
  const int n = pair.n();
  for (int j = 0; j + 1 < n; ++j) {
    if (lambda.padded(j) < mu.padded(j) || mu.padded(j) < lambda.padded(j + 2)) return 0;
  }
  const RearrangedChain chain = rearrange(lambda, mu, n);
  Integer value = 1;
  for (int j = 0; j + 1 < n; ++j) value *= chain.x[j] - chain.y[j] + 1;
  const Part last = chain.x[n - 1];
  if (pair.family() == Family::Sp) value *= last + 1;
  if (pair.big().is_odd_orthogonal()) value *= 2 * last + 1;
  return value;
}

bool ComparisonReport::violated() const {
  const auto fails = [](const ClauseVerdict& v) { return v.hypotheses && !v.equal; };
  return fails(mu_length) || fails(lambda_length) || fails(symplectic_orthogonal);
}

namespace {

std::optional<std::vector<Part>> fit_to_rank(std::span<const Part> parts, int rank) {
  std::vector<Part> fitted(rank, 0);
  for (std::size_t i = 0; i < parts.size(); ++i) {
    if (i < static_cast<std::size_t>(rank)) {
      fitted[i] = parts[i];
    } else if (parts[i] != 0) {
      return std::nullopt;
    }
  }
  return fitted;
}

std::size_t length_of(std::span<const Part> parts) {
  std::size_t length = 0;
  for (std::size_t i = 0; i < parts.size(); ++i) {
    if (parts[i] != 0) length = i + 1;
  }
  return length;
}

bool all_equal(const std::vector<const PairValue*>& values) {
  const Integer* first = nullptr;
  for (const PairValue* value : values) {
    if (!value->mult) continue;
    if (!first) first = &*value->mult;
    else if (*first != *value->mult) return false;
  }
  return true;
}

}  // namespace

ComparisonReport compare_pairs(int n, int m, std::span<const Part> lambda, std::span<const Part> mu) {
  if (n < 1 || m < 0 || m >= n) {
    throw BadRankWindow("comparison needs 0 <= m < n, got n=" + std::to_string(n) + ", m=" + std::to_string(m));
  }
  ComparisonReport report;
  report.n = n;
  report.m = m;
  report.lambda.assign(lambda.begin(), lambda.end());
  report.mu.assign(mu.begin(), mu.end());

  const auto lambda_fit = fit_to_rank(lambda, n);
  if (!lambda_fit) {
    throw WrongLength("lambda (" + to_string(lambda) + ") does not fit rank " + std::to_string(n));
  }

  std::vector<BranchPair> pairs;
  const bool gl_exists = 2 * m - n >= 0;
  if (gl_exists) {
    pairs.push_back(make_pair(make_group(Family::GL, n),
                              2 * m - n == 0 ? trivial_group(Family::GL) : make_group(Family::GL, 2 * m - n)));
  }
  pairs.push_back(make_pair(make_group(Family::Sp, 2 * n), m == 0 ? trivial_group(Family::Sp)
                                                                   : make_group(Family::Sp, 2 * m)));
  pairs.push_back(make_pair(make_group(Family::SO, 2 * n + 1), make_group(Family::SO, 2 * m + 1)));
  pairs.push_back(make_pair(make_group(Family::SO, 2 * n), m == 0 ? trivial_group(Family::SO)
                                                                   : make_group(Family::SO, 2 * m)));

  for (const auto& pair : pairs) {
    const DominantWeight lambda_weight = make_weight(pair.big(), *lambda_fit);
    PairValue value{pair, std::nullopt};
    if (const auto mu_fit = fit_to_rank(mu, pair.m())) {
      value.mult = multiplicity(pair, lambda_weight, make_weight(pair.small(), *mu_fit));
    }
    report.values.push_back(std::move(value));
  }

  std::vector<const PairValue*> all, sp_so;
  for (const auto& value : report.values) {
    all.push_back(&value);
    if (value.pair.family() != Family::GL) sp_so.push_back(&value);
  }
  const bool window = gl_exists && 2 * m >= n;
  const std::size_t gl_rank = gl_exists ? static_cast<std::size_t>(2 * m - n) : 0;

  report.mu_length.hypotheses = window && length_of(mu) <= gl_rank;
  report.mu_length.equal = all_equal(all);
  report.lambda_length.hypotheses = window && length_of(lambda) <= gl_rank;
  report.lambda_length.equal = all_equal(all);
  report.symplectic_orthogonal.hypotheses = length_of(lambda) <= static_cast<std::size_t>(m);
  report.symplectic_orthogonal.equal = all_equal(sp_so);
  return report;
}

}  // namespace branchkit
