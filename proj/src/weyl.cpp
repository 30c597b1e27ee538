#include "branchkit/weyl.hpp"

#include "branchkit/combinatorics.hpp"
#include "branchkit/detkit.hpp"

namespace branchkit {

RhoVector rho(const ClassicalGroup& group) {
  const int n = group.rank();
  RhoVector coords;
  coords.reserve(n);
  for (int i = 1; i <= n; ++i) {
    switch (group.family()) {
      case Family::GL: coords.push_back(HalfInteger::from_integer(n - i)); break;
      case Family::Sp: coords.push_back(HalfInteger::from_integer(n - i + 1)); break;
      case Family::SO:
        coords.push_back(group.is_odd_orthogonal() ? HalfInteger::plus_half(n - i)
                                                   : HalfInteger::from_integer(n - i));
        break;
    }
  }
  return coords;
}

namespace {

Integer require_integer(const Rational& value, const char* what) {
  if (!is_integral(value)) {
    throw NonIntegerResult(std::string(what) + " produced non-integral value " + to_decimal(value));
  }
  return value.get_num();
}

}  // namespace

Integer weyl_dim_product(const ClassicalGroup& group, const DominantWeight& lambda) {
  const int n = group.rank();
  const RhoVector shifts = rho(group);
  // Shifted coordinates, both doubled so everything stays integral.
  std::vector<Integer> shifted(n), base(n);
  for (int i = 0; i < n; ++i) {
    base[i] = shifts[i].doubled();
    shifted[i] = base[i] + 2 * lambda.padded(i);
  }

  Integer numerator = 1;
  Integer denominator = 1;
  const bool squared = group.family() != Family::GL;
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      if (squared) {
        numerator *= shifted[i] * shifted[i] - shifted[j] * shifted[j];
        denominator *= base[i] * base[i] - base[j] * base[j];
      } else {
        numerator *= shifted[i] - shifted[j];
        denominator *= base[i] - base[j];
      }
    }
  }
  if (group.family() == Family::Sp || group.is_odd_orthogonal()) {
    for (int i = 0; i < n; ++i) {
      numerator *= shifted[i];
      denominator *= base[i];
    }
  }
  Rational value(numerator, denominator);
  value.canonicalize();
  return require_integer(value, "Weyl product formula");
}

int weyl_dim_prefactor_exponent(const ClassicalGroup& group) {
  if (group.family() != Family::SO || group.rank() == 0) return 0;
  return group.is_odd_orthogonal() ? group.rank() : group.rank() - 1;
}

RationalMatrix weyl_dim_matrix(const ClassicalGroup& group, const DominantWeight& lambda) {
  const long n = group.rank();
  RationalMatrix matrix(n, n);
  for (long i = 1; i <= n; ++i) {
    const long part = lambda.padded(i - 1);
    for (long j = 1; j <= n; ++j) {
      Rational& entry = matrix(i - 1, j - 1);
      switch (group.family()) {
        case Family::GL:
          entry = binom_ext(HalfInteger::from_integer(part + n - i), static_cast<unsigned>(n - j));
          break;
        case Family::Sp:
          entry = binom_ext(HalfInteger::from_integer(part - i + 2 * n - j + 1),
                            static_cast<unsigned>(2 * n - 2 * j + 1));
          break;
        case Family::SO:
          if (group.is_odd_orthogonal()) {
            entry = binom_ext(HalfInteger::plus_half(part - i + 2 * n - j),
                              static_cast<unsigned>(2 * n - 2 * j + 1));
          } else {
            entry = binom_ext(HalfInteger::plus_half(part - i + 2 * n - j - 1),
                              static_cast<unsigned>(2 * n - 2 * j));
          }
          break;
      }
    }
  }
  return matrix;
}

Integer weyl_dim_det(const ClassicalGroup& group, const DominantWeight& lambda) {
  if (group.rank() == 0) return 1;
  Rational value = det_exact(weyl_dim_matrix(group, lambda));
  value *= Rational(Integer(1) << weyl_dim_prefactor_exponent(group));
  return require_integer(value, "determinantal Weyl dimension");
}

}  // namespace branchkit
