#pragma once

#include <vector>

#include "vanishforge/complexnum.hpp"

namespace vanishforge {

using CMatrix = std::vector<std::vector<Complex>>;

Real matrix_max_abs(const CMatrix& a);
Real frobenius_norm(const CMatrix& a);

// Numerical rank by full-pivot Gaussian elimination on the row-scaled
// matrix; a pivot below threshold (relative to the scaled matrix) ends
// the elimination.
long numerical_rank(CMatrix a, const Real& threshold);

// Inverse of a square matrix; throws std::runtime_error when a pivot
// falls below threshold * max|entry|.
CMatrix invert(const CMatrix& a, const Real& threshold);

// Frobenius-based condition estimate |A|_F |A^-1|_F (upper bound of the
// spectral condition number up to a dimension factor).
Real condition_estimate(const CMatrix& a, const Real& threshold);

CMatrix matmul(const CMatrix& a, const CMatrix& b);

}  // namespace vanishforge
