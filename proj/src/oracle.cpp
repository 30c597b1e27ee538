#include "branchkit/oracle.hpp"

#include "branchkit/weyl.hpp"

#include <algorithm>
#include <cassert>
#include <cstdlib>
#include <deque>
#include <numeric>
#include <set>

namespace branchkit {

RootSystem positive_roots(const ClassicalGroup& group) {
  const int n = group.rank();
  RootSystem system{group, {}};
  auto basis = [n](int i) {
    WeightVector e(n, 0);
    e[i] = 1;
    return e;
  };
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      WeightVector minus = basis(i);
      minus[j] = -1;
      system.positives.push_back(minus);
      if (group.family() != Family::GL) {
        WeightVector plus = basis(i);
        plus[j] = 1;
        system.positives.push_back(plus);
      }
    }
  }
  for (int i = 0; i < n; ++i) {
    if (group.family() == Family::Sp) {
      WeightVector twice = basis(i);
      twice[i] = 2;
      system.positives.push_back(twice);
    } else if (group.is_odd_orthogonal()) {
      system.positives.push_back(basis(i));
    }
  }
  return system;
}

bool in_dominant_chamber(const ClassicalGroup& group, std::span<const Part> v) {
  const std::size_t n = v.size();
  if (n == 0) return true;
  for (std::size_t i = 0; i + 2 < n; ++i) {
    if (v[i] < v[i + 1]) return false;
  }
  switch (group.family()) {
    case Family::GL: return n == 1 || v[n - 2] >= v[n - 1];
    case Family::Sp: return (n == 1 || v[n - 2] >= v[n - 1]) && v[n - 1] >= 0;
    case Family::SO:
      if (group.is_odd_orthogonal()) return (n == 1 || v[n - 2] >= v[n - 1]) && v[n - 1] >= 0;
      return n == 1 || v[n - 2] >= std::abs(v[n - 1]);
  }
  return false;
}

WeightVector dominant_representative(const ClassicalGroup& group, std::span<const Part> v) {
  WeightVector result(v.begin(), v.end());
  if (group.family() == Family::GL) {
    std::sort(result.begin(), result.end(), std::greater<>());
    return result;
  }
  if (group.is_even_orthogonal() && result.size() == 1) return result;  // SO(2): trivial Weyl group
  bool odd_sign_changes = false;
  bool has_zero = false;
  for (auto& part : result) {
    if (part < 0) {
      part = -part;
      odd_sign_changes = !odd_sign_changes;
    }
    has_zero = has_zero || part == 0;
  }
  std::sort(result.begin(), result.end(), std::greater<>());
  if (group.is_even_orthogonal() && odd_sign_changes && !has_zero) result.back() = -result.back();
  return result;
}

std::vector<WeightVector> weyl_orbit(const ClassicalGroup& group, std::span<const Part> dominant) {
  const WeightVector target(dominant.begin(), dominant.end());
  WeightVector base = target;
  if (group.family() != Family::GL) {
    for (auto& part : base) part = std::abs(part);
  }
  std::sort(base.begin(), base.end());

  std::set<WeightVector> orbit;
  do {
    if (group.family() == Family::GL) {
      orbit.insert(base);
      continue;
    }
    const std::size_t n = base.size();
    for (std::uint32_t mask = 0; mask < (1u << n); ++mask) {
      WeightVector image = base;
      bool redundant = false;
      for (std::size_t i = 0; i < n; ++i) {
        if (mask & (1u << i)) {
          if (image[i] == 0) redundant = true;
          image[i] = -image[i];
        }
      }
      if (redundant) continue;
      if (dominant_representative(group, image) == target) orbit.insert(std::move(image));
    }
  } while (std::next_permutation(base.begin(), base.end()));
  return {orbit.begin(), orbit.end()};
}

std::optional<std::vector<Part>> simple_root_coordinates(const ClassicalGroup& group,
                                                         std::span<const Part> difference) {
  const std::size_t n = difference.size();
  std::vector<Part> partial(n);
  std::partial_sum(difference.begin(), difference.end(), partial.begin());
  std::vector<Part> coords;
  if (n == 0) return coords;

  switch (group.family()) {
    case Family::GL:
      if (partial[n - 1] != 0) return std::nullopt;
      coords.assign(partial.begin(), partial.end() - 1);
      break;
    case Family::Sp:
      if (partial[n - 1] % 2 != 0) return std::nullopt;
      coords.assign(partial.begin(), partial.end());
      coords[n - 1] = partial[n - 1] / 2;
      break;
    case Family::SO:
      if (group.is_odd_orthogonal()) {
        coords.assign(partial.begin(), partial.end());
      } else if (n == 1) {
        if (difference[0] != 0) return std::nullopt;
      } else {
        if (partial[n - 1] % 2 != 0) return std::nullopt;
        coords.assign(partial.begin(), partial.end());
        coords[n - 1] = partial[n - 1] / 2;
        coords[n - 2] = partial[n - 2] - coords[n - 1];
      }
      break;
  }
  if (std::any_of(coords.begin(), coords.end(), [](Part c) { return c < 0; })) return std::nullopt;
  return coords;
}

namespace {

Part dot(std::span<const Part> a, std::span<const Part> b) {
  Part total = 0;
  for (std::size_t i = 0; i < a.size(); ++i) total += a[i] * b[i];
  return total;
}

WeightVector add(std::span<const Part> a, std::span<const Part> b, Part scale = 1) {
  WeightVector sum(a.begin(), a.end());
  for (std::size_t i = 0; i < sum.size(); ++i) sum[i] += scale * b[i];
  return sum;
}

WeightVector subtract(std::span<const Part> a, std::span<const Part> b) { return add(a, b, -1); }

// Multiplicities of the chamber weights only, by Freudenthal's recursion.
std::map<WeightVector, Integer> dominant_multiplicities(const ClassicalGroup& group,
                                                        std::span<const Part> highest) {
  const WeightVector top(highest.begin(), highest.end());
  const std::vector<WeightVector> positives = positive_roots(group).positives;
  std::vector<WeightVector> roots = positives;
  for (const auto& root : positives) roots.push_back(subtract(WeightVector(root.size(), 0), root));

  const auto is_weight = [&](std::span<const Part> chamber_weight) {
    return simple_root_coordinates(group, subtract(top, chamber_weight)).has_value();
  };

  // Chamber weights reachable from the top by root steps, modulo the Weyl group.
  std::set<WeightVector> found{top};
  std::deque<WeightVector> queue{top};
  while (!queue.empty()) {
    const WeightVector current = std::move(queue.front());
    queue.pop_front();
    for (const auto& root : roots) {
      WeightVector next = dominant_representative(group, add(current, root));
      if (!found.contains(next) && is_weight(next)) {
        found.insert(next);
        queue.push_back(std::move(next));
      }
    }
  }

  const auto height = [&](const WeightVector& weight) {
    const auto coords = simple_root_coordinates(group, subtract(top, weight));
    return std::accumulate(coords->begin(), coords->end(), Part{0});
  };
  std::vector<WeightVector> ordered(found.begin(), found.end());
  std::stable_sort(ordered.begin(), ordered.end(),
                   [&](const WeightVector& a, const WeightVector& b) { return height(a) < height(b); });

  // Doubled Weyl vector keeps the recursion integral.
  WeightVector twice_rho;
  for (const auto& coordinate : rho(group)) twice_rho.push_back(coordinate.doubled().get_si());
  const auto shifted_norm = [&](std::span<const Part> weight) {
    const WeightVector shifted = add(add(weight, weight), twice_rho);
    return dot(shifted, shifted);
  };
  const Part top_norm = shifted_norm(top);

  std::map<WeightVector, Integer> mult;
  mult[top] = 1;
  for (const auto& weight : ordered) {
    if (weight == top) continue;
    Integer sum = 0;
    for (const auto& root : positives) {
      for (Part k = 1;; ++k) {
        const WeightVector raised = add(weight, root, k);
        const WeightVector chamber = dominant_representative(group, raised);
        if (!is_weight(chamber)) break;
        const auto it = mult.find(chamber);
        assert(it != mult.end());
        sum += it->second * dot(raised, root);
      }
    }
    const Part gap = top_norm - shifted_norm(weight);
    assert(gap > 0);
    Integer value = 8 * sum;
    if (!mpz_divisible_ui_p(value.get_mpz_t(), static_cast<unsigned long>(gap))) {
      throw NonIntegerResult("Freudenthal recursion produced a fractional multiplicity");
    }
    value /= gap;
    mult[weight] = value;
  }
  return mult;
}

}  // namespace

WeightMultiset character(const ClassicalGroup& group, std::span<const Part> highest) {
  if (highest.size() != static_cast<std::size_t>(group.rank())) {
    throw WrongLength("highest weight length does not match rank of " + to_string(group));
  }
  if (!in_dominant_chamber(group, highest)) {
    throw NotDominant("(" + to_string(highest) + ") is not in the dominant chamber of " + to_string(group));
  }
  WeightMultiset weights;
  for (const auto& [chamber_weight, mult] : dominant_multiplicities(group, highest)) {
    if (mult == 0) continue;
    for (auto& image : weyl_orbit(group, chamber_weight)) weights.emplace(std::move(image), mult);
  }
  return weights;
}

WeightMultiset weight_multiplicities(const ClassicalGroup& group, const DominantWeight& lambda,
                                     const OracleOptions& options) {
  const Integer dim = weyl_dim_product(group, lambda);
  if (dim > options.max_dim) {
    throw ScaleExceeded("representation (" + to_string(lambda) + ") of " + to_string(group) + " has dimension " +
                        to_decimal(dim) + ", above the oracle cap " + std::to_string(options.max_dim));
  }
  return character(group, lambda.parts());
}

Integer total_mass(const WeightMultiset& weights) {
  Integer total = 0;
  for (const auto& [weight, mult] : weights) total += mult;
  return total;
}

namespace {

// Strict order refining dominance: coordinate sum first, then lexicographic.
bool higher(const WeightVector& a, const WeightVector& b) {
  const Part sum_a = std::accumulate(a.begin(), a.end(), Part{0});
  const Part sum_b = std::accumulate(b.begin(), b.end(), Part{0});
  if (sum_a != sum_b) return sum_a > sum_b;
  return a > b;
}

}  // namespace

OracleDecomposition oracle_branching(const BranchPair& pair, const DominantWeight& lambda,
                                     const OracleOptions& options) {
  const WeightMultiset big_weights = weight_multiplicities(pair.big(), lambda, options);
  const auto m = static_cast<std::size_t>(pair.m());

  WeightMultiset remaining;
  for (const auto& [weight, mult] : big_weights) {
    remaining[WeightVector(weight.begin(), weight.begin() + m)] += mult;
  }

  OracleDecomposition result{pair, lambda, {}};
  std::map<WeightVector, WeightMultiset> characters;
  while (!remaining.empty()) {
    auto top = remaining.begin();
    for (auto it = remaining.begin(); it != remaining.end(); ++it) {
      if (higher(it->first, top->first)) top = it;
    }
    const WeightVector highest = top->first;
    const Integer count = top->second;
    if (!in_dominant_chamber(pair.small(), highest)) {
      throw NegativeRemainder("leading remainder weight (" + to_string(highest) + ") is not dominant for " +
                              to_string(pair.small()));
    }
    auto cached = characters.find(highest);
    if (cached == characters.end()) cached = characters.emplace(highest, character(pair.small(), highest)).first;

    for (const auto& [weight, mult] : cached->second) {
      auto it = remaining.find(weight);
      const Integer left = (it == remaining.end() ? Integer(0) : it->second) - count * mult;
      if (left < 0) {
        throw NegativeRemainder("subtracting " + to_decimal(count) + " x (" + to_string(highest) +
                                ") leaves weight (" + to_string(weight) + ") at " + to_decimal(left));
      }
      if (left == 0) remaining.erase(it);
      else it->second = left;
    }
    result.rows.emplace_back(highest, count);
  }
  std::sort(result.rows.begin(), result.rows.end(),
            [](const auto& a, const auto& b) { return a.first > b.first; });
  return result;
}

Integer OracleDecomposition::at(std::span<const Part> mu) const {
  for (const auto& [weight, mult] : rows) {
    if (std::equal(weight.begin(), weight.end(), mu.begin(), mu.end())) return mult;
  }
  return 0;
}

bool OracleDecomposition::sign_symmetric() const {
  for (const auto& [weight, mult] : rows) {
    if (weight.empty() || weight.back() == 0) continue;
    WeightVector flipped = weight;
    flipped.back() = -flipped.back();
    if (at(flipped) != mult) return false;
  }
  return true;
}

MultiplicityTable OracleDecomposition::folded() const {
  MultiplicityTable table{pair, lambda, {}};
  for (const auto& [weight, mult] : rows) {
    if (!weight.empty() && weight.back() < 0) {
      if (!pair.small().is_even_orthogonal()) {
        throw NegativeRemainder("oracle produced non-polynomial highest weight (" + to_string(weight) + ")");
      }
      continue;
    }
    table.rows.push_back({make_weight(pair.small(), weight), mult});
  }
  return table;
}

MultiplicityTable restrict_and_decompose(const BranchPair& pair, const DominantWeight& lambda,
                                         const OracleOptions& options) {
  return oracle_branching(pair, lambda, options).folded();
}

}  // namespace branchkit
