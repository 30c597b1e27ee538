#pragma once

// Weyl vectors and the two forms of the Weyl dimension formula.

#include "branchkit/core.hpp"
#include "branchkit/scalar.hpp"

#include <vector>

namespace branchkit {

/// Half the sum of the positive roots in epsilon coordinates. Strictly
/// decreasing; half-integral only for SO(2n+1).
using RhoVector = std::vector<HalfInteger>;

RhoVector rho(const ClassicalGroup& group);

/// Classical product over positive roots. Rank-0 groups give 1.
Integer weyl_dim_product(const ClassicalGroup& group, const DominantWeight& lambda);

/// Determinant of a binomial matrix, times 2^n for SO(2n+1) and 2^(n-1) for
/// SO(2n).
Integer weyl_dim_det(const ClassicalGroup& group, const DominantWeight& lambda);

/// Binomial matrix whose determinant is the dimension, before the power-of-two
/// prefactor.
RationalMatrix weyl_dim_matrix(const ClassicalGroup& group, const DominantWeight& lambda);

/// Exponent of the power-of-two prefactor used by weyl_dim_det.
int weyl_dim_prefactor_exponent(const ClassicalGroup& group);

}  // namespace branchkit
