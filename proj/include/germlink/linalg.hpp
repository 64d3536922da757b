#pragma once

#include <vector>

#include "germlink/plumbing.hpp"

namespace germlink {

// Exact solution of A x = rhs by fraction-free-in-spirit Gaussian elimination
// over rationals. Throws SingularMatrix.
std::vector<Rational> solve_exact(const IntersectionMatrix& matrix, const std::vector<Rational>& rhs);

} // namespace germlink
