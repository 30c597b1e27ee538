#pragma once

// Determinant-free branching oracle: Freudenthal's recursion for the weights
// of an irreducible representation, restriction to the subgroup torus, and
// peeling off subgroup characters from the top.

#include "branchkit/branching.hpp"
#include "branchkit/core.hpp"
#include "branchkit/scalar.hpp"

#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <vector>

namespace branchkit {

class ScaleExceeded : public Error { public: using Error::Error; };
class NegativeRemainder : public Error { public: using Error::Error; };

using WeightVector = std::vector<Part>;
using WeightMultiset = std::map<WeightVector, Integer>;

struct RootSystem {
  ClassicalGroup group;
  std::vector<WeightVector> positives;
};

inline constexpr std::int64_t kDefaultMaxDim = 50000;

struct OracleOptions {
  /// Largest representation dimension the oracle will expand.
  std::int64_t max_dim = kDefaultMaxDim;
};

RootSystem positive_roots(const ClassicalGroup& group);

/// Whether v lies in the closed dominant chamber of the group's Weyl group
/// action: non-increasing for GL, non-increasing and non-negative for Sp and
/// SO(2n+1), v_1 >= ... >= v_{n-1} >= |v_n| for SO(2n).
bool in_dominant_chamber(const ClassicalGroup& group, std::span<const Part> v);

/// The unique chamber element in the Weyl orbit of v.
WeightVector dominant_representative(const ClassicalGroup& group, std::span<const Part> v);

/// All distinct images of a chamber element under the Weyl group.
std::vector<WeightVector> weyl_orbit(const ClassicalGroup& group, std::span<const Part> dominant);

/// Simple-root coordinates of `difference` when it is a non-negative integral
/// combination of simple roots.
std::optional<std::vector<Part>> simple_root_coordinates(const ClassicalGroup& group,
                                                         std::span<const Part> difference);

/// Full weight multiset of the irreducible representation with highest weight
/// lambda. Throws ScaleExceeded above options.max_dim.
WeightMultiset weight_multiplicities(const ClassicalGroup& group, const DominantWeight& lambda,
                                     const OracleOptions& options = {});

/// Same for any chamber element, including SO(2n) highest weights with a
/// negative last coordinate. No dimension cap.
WeightMultiset character(const ClassicalGroup& group, std::span<const Part> highest);

Integer total_mass(const WeightMultiset& weights);

/// Oracle decomposition with signed rows: for SO(2m) subgroups both signs of
/// mu_m are reported.
struct OracleDecomposition {
  BranchPair pair;
  DominantWeight lambda;
  /// (highest weight, multiplicity), lexicographically descending.
  std::vector<std::pair<WeightVector, Integer>> rows;

  Integer at(std::span<const Part> mu) const;
  /// Multiplicities at (..., mu_m) and (..., -mu_m) coincide for every row.
  bool sign_symmetric() const;
  /// Rows with non-negative entries, as a MultiplicityTable.
  MultiplicityTable folded() const;
};

OracleDecomposition oracle_branching(const BranchPair& pair, const DominantWeight& lambda,
                                     const OracleOptions& options = {});

/// oracle_branching(...).folded()
MultiplicityTable restrict_and_decompose(const BranchPair& pair, const DominantWeight& lambda,
                                         const OracleOptions& options = {});

}  // namespace branchkit
