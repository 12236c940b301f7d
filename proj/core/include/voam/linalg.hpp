#pragma once

#include <vector>

#include "voam/rational.hpp"

namespace voam {

using RatMatrix = std::vector<std::vector<Rational>>;
using RatVector = std::vector<Rational>;

/* Solves A x = b exactly by Gaussian elimination with nonzero pivoting.
 * Throws std::domain_error if A is singular. */
RatVector solve_linear(RatMatrix A, RatVector b);

/* Exact inverse of a square matrix; throws std::domain_error if singular. */
RatMatrix invert_matrix(const RatMatrix& A);

/* Exact determinant by fraction-free-ish Gaussian elimination. */
Rational determinant(RatMatrix A);

}  // namespace voam
