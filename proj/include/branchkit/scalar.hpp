#pragma once

// Exact scalar types used throughout branchkit, and the Eigen glue that lets
// them live inside Eigen::Matrix.

#include <gmpxx.h>

#include <Eigen/Core>

#include <string>

namespace branchkit {

using Integer = mpz_class;
using Rational = mpq_class;

/// Returns the decimal representation of `value`.
inline std::string to_decimal(const Integer& value) { return value.get_str(10); }

/// Returns "p/q", or "p" when the denominator is one.
inline std::string to_decimal(const Rational& value) { return value.get_str(10); }

inline bool is_integral(const Rational& value) { return value.get_den() == 1; }

/// A value exactly representable as doubled/2.
class HalfInteger {
 public:
  HalfInteger() = default;

  static HalfInteger from_integer(const Integer& value) { return HalfInteger(value * 2); }
  static HalfInteger from_doubled(Integer doubled) { return HalfInteger(std::move(doubled)); }
  /// value + 1/2
  static HalfInteger plus_half(const Integer& value) { return HalfInteger(value * 2 + 1); }

  const Integer& doubled() const { return doubled_; }
  bool is_integer() const { return mpz_even_p(doubled_.get_mpz_t()) != 0; }
  Rational to_rational() const { return Rational(doubled_, 2); }

  friend HalfInteger operator+(const HalfInteger& a, const HalfInteger& b) {
    return HalfInteger(a.doubled_ + b.doubled_);
  }
  friend HalfInteger operator-(const HalfInteger& a, const HalfInteger& b) {
    return HalfInteger(a.doubled_ - b.doubled_);
  }
  friend HalfInteger operator+(const HalfInteger& a, long b) { return HalfInteger(a.doubled_ + 2 * b); }
  friend HalfInteger operator-(const HalfInteger& a, long b) { return HalfInteger(a.doubled_ - 2 * b); }
  friend bool operator==(const HalfInteger& a, const HalfInteger& b) { return a.doubled_ == b.doubled_; }
  friend bool operator<(const HalfInteger& a, const HalfInteger& b) { return a.doubled_ < b.doubled_; }

  std::string str() const {
    if (is_integer()) return to_decimal(Integer(doubled_ / 2));
    return to_decimal(doubled_) + "/2";
  }

 private:
  explicit HalfInteger(Integer doubled) : doubled_(std::move(doubled)) {}
  Integer doubled_{0};
};

}  // namespace branchkit

namespace Eigen {

template <>
struct NumTraits<mpz_class> : GenericNumTraits<mpz_class> {
  typedef mpz_class Real;
  typedef mpq_class NonInteger;
  typedef mpz_class Nested;
  typedef mpz_class Literal;
  enum {
    IsComplex = 0,
    IsInteger = 1,
    IsSigned = 1,
    RequireInitialization = 1,
    ReadCost = 4,
    AddCost = 16,
    MulCost = 32
  };
  static inline Real epsilon() { return 0; }
  static inline Real dummy_precision() { return 0; }
  static inline int digits10() { return 0; }
};

template <>
struct NumTraits<mpq_class> : GenericNumTraits<mpq_class> {
  typedef mpq_class Real;
  typedef mpq_class NonInteger;
  typedef mpq_class Nested;
  typedef mpq_class Literal;
  enum {
    IsComplex = 0,
    IsInteger = 0,
    IsSigned = 1,
    RequireInitialization = 1,
    ReadCost = 8,
    AddCost = 64,
    MulCost = 64
  };
  static inline Real epsilon() { return 0; }
  static inline Real dummy_precision() { return 0; }
  static inline int digits10() { return 0; }
};

}  // namespace Eigen

namespace branchkit {

using IntegerMatrix = Eigen::Matrix<Integer, Eigen::Dynamic, Eigen::Dynamic>;
using RationalMatrix = Eigen::Matrix<Rational, Eigen::Dynamic, Eigen::Dynamic>;

}  // namespace branchkit
