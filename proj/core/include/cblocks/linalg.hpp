#pragma once

#include <vector>

#include "cblocks/numeric.hpp"

namespace cblocks {

/// Solves the (possibly overdetermined) integer system A·x = b exactly
/// over the rationals by fraction-free Gaussian elimination.  Requires the
/// columns of A to be independent and the system to be consistent; throws
/// SingularBasis / InconsistentSystem otherwise.
std::vector<Rational> solve_exact(const std::vector<std::vector<Integer>>& a,
                                  const std::vector<Integer>& b);

}  // namespace cblocks
