#pragma once

#include "branchkit/scalar.hpp"

#include <cstdint>
#include <span>

namespace branchkit {

/// Polynomial binomial x(x-1)...(x-k+1)/k! at a half-integer x; 1 when k = 0.
Rational binom_ext(const HalfInteger& x, unsigned k);

/// C(n, k) when n >= k, otherwise 0 (including every negative n).
Integer binom_trunc(std::int64_t n, unsigned k);

/// Number of ways to write xi as a non-negative combination of m independent
/// vectors, each available with multiplicity r. Zero when any xi_j < 0.
Integer partition_value(std::span<const std::int64_t> xi, unsigned r);

}  // namespace branchkit
