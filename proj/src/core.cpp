#include "branchkit/core.hpp"

#include <algorithm>
#include <charconv>
#include <sstream>

namespace branchkit {

std::string_view family_name(Family family) {
  switch (family) {
    case Family::GL: return "GL";
    case Family::Sp: return "Sp";
    case Family::SO: return "SO";
  }
  return "?";
}

int ClassicalGroup::rank() const {
  switch (family_) {
    case Family::GL: return size_;
    case Family::Sp: return size_ / 2;
    case Family::SO: return size_ / 2;
  }
  return 0;
}

ClassicalGroup make_group(Family family, int size) {
  if (size <= 0) {
    throw InvalidGroup(std::string(family_name(family)) + " size must be positive, got " +
                       std::to_string(size));
  }
  if (family == Family::Sp && size % 2 != 0) {
    throw InvalidGroup("Sp size must be even, got " + std::to_string(size));
  }
  return ClassicalGroup(family, size);
}

ClassicalGroup trivial_group(Family family) { return ClassicalGroup(family, 0); }

namespace {

// Partition-function multiplicity of the restricted roots, per family.
int restricted_root_multiplicity(const ClassicalGroup& big, const ClassicalGroup& small) {
  const int n = big.rank();
  const int m = small.rank();
  switch (big.family()) {
    case Family::GL: return n - m;
    case Family::Sp: return 2 * n - 2 * m;
    case Family::SO: return big.is_odd_orthogonal() ? 2 * n + 1 - small.size() : 2 * n - small.size();
  }
  return 0;
}

}  // namespace

BranchPair make_pair(const ClassicalGroup& big, const ClassicalGroup& small) {
  if (big.family() != small.family()) {
    throw FamilyMismatch("cannot pair " + to_string(big) + " with " + to_string(small));
  }
  if (big.size() == 0) throw SizeOrder("the big group of a pair cannot be trivial");
  if (small.size() > big.size() - 1) {
    throw SizeOrder(to_string(small) + " is not a proper subgroup of " + to_string(big));
  }
  const int delta = big.size() - small.size();
  const int r = restricted_root_multiplicity(big, small);
  int l = 0;
  if (big.family() == Family::SO) {
    l = big.is_odd_orthogonal() ? big.rank() - small.rank() : big.rank() - small.rank() - 1;
  }
  return BranchPair(big, small, delta, r, l);
}

bool DominantWeight::is_zero() const {
  return std::all_of(parts_.begin(), parts_.end(), [](Part p) { return p == 0; });
}

std::size_t DominantWeight::length() const {
  return static_cast<std::size_t>(
      std::count_if(parts_.begin(), parts_.end(), [](Part p) { return p != 0; }));
}

DominantWeight make_weight(const ClassicalGroup& group, std::span<const Part> parts) {
  if (parts.size() != static_cast<std::size_t>(group.rank())) {
    throw WrongLength("weight (" + to_string(parts) + ") has length " + std::to_string(parts.size()) +
                      " but " + to_string(group) + " has rank " + std::to_string(group.rank()));
  }
  for (std::size_t i = 0; i < parts.size(); ++i) {
    const bool increasing = i + 1 < parts.size() && parts[i] < parts[i + 1];
    if (increasing || parts[i] < 0) {
      throw NotDominant("weight (" + to_string(parts) + ") is not a non-increasing non-negative sequence");
    }
  }
  return DominantWeight(std::vector<Part>(parts.begin(), parts.end()));
}

DominantWeight make_weight(const ClassicalGroup& group, std::initializer_list<Part> parts) {
  return make_weight(group, std::span<const Part>(parts.begin(), parts.size()));
}

std::string to_string(const ClassicalGroup& group) {
  return std::string(family_name(group.family())) + ":" + std::to_string(group.size());
}

std::string to_string(const BranchPair& pair) { return to_string(pair.big()) + "/" + to_string(pair.small()); }

std::string to_string(std::span<const Part> parts) {
  std::ostringstream out;
  for (std::size_t i = 0; i < parts.size(); ++i) {
    if (i) out << ',';
    out << parts[i];
  }
  return out.str();
}

std::string to_string(const DominantWeight& weight) { return to_string(weight.parts()); }

namespace {

std::string_view trim(std::string_view text) {
  while (!text.empty() && (text.front() == ' ' || text.front() == '\t')) text.remove_prefix(1);
  while (!text.empty() && (text.back() == ' ' || text.back() == '\t')) text.remove_suffix(1);
  return text;
}

long parse_integer(std::string_view text, std::string_view what) {
  text = trim(text);
  if (!text.empty() && text.front() == '+') text.remove_prefix(1);
  long value = 0;
  const auto [end, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  if (text.empty() || ec != std::errc() || end != text.data() + text.size()) {
    throw ParseError("cannot parse " + std::string(what) + " '" + std::string(text) + "'");
  }
  return value;
}

}  // namespace

ClassicalGroup parse_group(std::string_view text) {
  text = trim(text);
  const auto colon = text.find(':');
  if (colon == std::string_view::npos) {
    throw ParseError("group must look like GL:3, Sp:6 or SO:7, got '" + std::string(text) + "'");
  }
  const std::string_view name = trim(text.substr(0, colon));
  Family family;
  if (name == "GL") family = Family::GL;
  else if (name == "Sp") family = Family::Sp;
  else if (name == "SO") family = Family::SO;
  else throw ParseError("unknown group family '" + std::string(name) + "'");
  const long size = parse_integer(text.substr(colon + 1), "group size");
  if (size == 0) return trivial_group(family);
  if (size < 0 || size > 1 << 20) throw InvalidGroup("group size out of range: " + std::to_string(size));
  return make_group(family, static_cast<int>(size));
}

BranchPair parse_pair(std::string_view text) {
  const auto slash = text.find('/');
  if (slash == std::string_view::npos) {
    throw ParseError("pair must look like SO:7/SO:3, got '" + std::string(text) + "'");
  }
  return make_pair(parse_group(text.substr(0, slash)), parse_group(text.substr(slash + 1)));
}

std::vector<Part> parse_parts(std::string_view text) {
  std::vector<Part> parts;
  text = trim(text);
  if (text.empty()) return parts;
  std::size_t start = 0;
  while (true) {
    const auto comma = text.find(',', start);
    parts.push_back(parse_integer(text.substr(start, comma == std::string_view::npos ? text.npos : comma - start),
                                  "weight entry"));
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  return parts;
}

}  // namespace branchkit
