#pragma once

// Domain model: classical groups, branching pairs and dominant weights.

#include "branchkit/scalar.hpp"

#include <compare>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace branchkit {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class InvalidGroup : public Error { public: using Error::Error; };
class FamilyMismatch : public Error { public: using Error::Error; };
class SizeOrder : public Error { public: using Error::Error; };
class NotDominant : public Error { public: using Error::Error; };
class WrongLength : public Error { public: using Error::Error; };
class ParseError : public Error { public: using Error::Error; };

/// Raised when an exact computation that must be integral (or must vanish)
/// is not. Always an implementation bug, never a property of valid input.
class NonIntegerResult : public Error { public: using Error::Error; };

using Part = std::int64_t;

enum class Family { GL, Sp, SO };

std::string_view family_name(Family family);

/// GL(n), Sp(2n) or SO(p). The size is the matrix size as written in the
/// group's name: n for GL(n), 2n for Sp(2n), p for SO(p).
class ClassicalGroup {
 public:
  Family family() const { return family_; }
  int size() const { return size_; }
  int rank() const;
  bool is_trivial() const { return rank() == 0; }
  bool is_odd_orthogonal() const { return family_ == Family::SO && size_ % 2 == 1; }
  bool is_even_orthogonal() const { return family_ == Family::SO && size_ % 2 == 0; }

  friend bool operator==(const ClassicalGroup&, const ClassicalGroup&) = default;

 private:
  ClassicalGroup(Family family, int size) : family_(family), size_(size) {}
  friend ClassicalGroup make_group(Family family, int size);
  friend ClassicalGroup trivial_group(Family family);

  Family family_;
  int size_;
};

/// Throws InvalidGroup for size 0, negative sizes and odd Sp sizes.
ClassicalGroup make_group(Family family, int size);

/// GL(0), Sp(0) or SO(0): the rank-0 subgroup used for m = 0 pairs.
ClassicalGroup trivial_group(Family family);

/// A validated subgroup pair H ⊂ G of one family.
class BranchPair {
 public:
  const ClassicalGroup& big() const { return big_; }
  const ClassicalGroup& small() const { return small_; }
  Family family() const { return big_.family(); }
  int n() const { return big_.rank(); }
  int m() const { return small_.rank(); }
  /// Index gap of the interlacing condition.
  int delta() const { return delta_; }
  /// Multiplicity of each restricted root in the partition function.
  int r() const { return r_; }
  /// Exponent of the power-of-two prefactor (nonzero only for SO).
  int l() const { return l_; }

  friend bool operator==(const BranchPair&, const BranchPair&) = default;

 private:
  BranchPair(ClassicalGroup big, ClassicalGroup small, int delta, int r, int l)
      : big_(big), small_(small), delta_(delta), r_(r), l_(l) {}
  friend BranchPair make_pair(const ClassicalGroup& big, const ClassicalGroup& small);

  ClassicalGroup big_;
  ClassicalGroup small_;
  int delta_;
  int r_;
  int l_;
};

/// Throws FamilyMismatch or SizeOrder.
BranchPair make_pair(const ClassicalGroup& big, const ClassicalGroup& small);

/// Non-increasing, non-negative integer vector of length rank. Reads beyond
/// the stored length return 0.
class DominantWeight {
 public:
  DominantWeight() = default;

  std::span<const Part> parts() const { return parts_; }
  std::size_t size() const { return parts_.size(); }
  bool is_zero() const;

  /// 0-based access with zero padding.
  Part padded(std::size_t index) const { return index < parts_.size() ? parts_[index] : 0; }
  Part operator[](std::size_t index) const { return padded(index); }

  /// Number of nonzero parts.
  std::size_t length() const;

  friend bool operator==(const DominantWeight&, const DominantWeight&) = default;
  friend auto operator<=>(const DominantWeight& a, const DominantWeight& b) {
    return a.parts_ <=> b.parts_;
  }

 private:
  explicit DominantWeight(std::vector<Part> parts) : parts_(std::move(parts)) {}
  friend DominantWeight make_weight(const ClassicalGroup& group, std::span<const Part> parts);

  std::vector<Part> parts_;
};

/// Throws WrongLength or NotDominant.
DominantWeight make_weight(const ClassicalGroup& group, std::span<const Part> parts);
DominantWeight make_weight(const ClassicalGroup& group, std::initializer_list<Part> parts);

// String encodings shared by the CLI and JSON output.
std::string to_string(const ClassicalGroup& group);  // "SO:7"
std::string to_string(const BranchPair& pair);       // "SO:7/SO:3"
std::string to_string(std::span<const Part> parts);  // "2,1,0"
std::string to_string(const DominantWeight& weight);

/// Parses "GL:3", "Sp:6", "SO:7". Size 0 yields the trivial group.
ClassicalGroup parse_group(std::string_view text);
BranchPair parse_pair(std::string_view text);
/// Parses a comma separated integer list; the empty string is the empty list.
std::vector<Part> parse_parts(std::string_view text);

}  // namespace branchkit
