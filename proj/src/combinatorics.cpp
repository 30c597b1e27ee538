#include "branchkit/combinatorics.hpp"

#include <cassert>

namespace branchkit {

Rational binom_ext(const HalfInteger& x, unsigned k) {
  // Work with the doubled argument: prod (2x - 2i) / (2^k k!).
  Integer numerator = 1;
  for (unsigned i = 0; i < k; ++i) numerator *= x.doubled() - 2 * static_cast<long>(i);
  Integer denominator;
  mpz_fac_ui(denominator.get_mpz_t(), k);
  denominator <<= k;
  Rational value(numerator, denominator);
  value.canonicalize();
  return value;
}

Integer binom_trunc(std::int64_t n, unsigned k) {
  if (n < static_cast<std::int64_t>(k)) return 0;
  Integer value;
  mpz_bin_uiui(value.get_mpz_t(), static_cast<unsigned long>(n), k);
  return value;
}

Integer partition_value(std::span<const std::int64_t> xi, unsigned r) {
  Integer value = 1;
  for (const std::int64_t coordinate : xi) {
    if (coordinate < 0) return 0;
    assert(r >= 1);
    value *= binom_trunc(coordinate + r - 1, r - 1);
    if (value == 0) break;
  }
  return value;
}

}  // namespace branchkit
