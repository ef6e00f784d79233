#pragma once

#include "cblocks/fusion.hpp"
#include "cblocks/numeric.hpp"
#include "cblocks/weights.hpp"

namespace cblocks {

/// Degree of the four-point sl2 bundle on M̄0,4: rank·s when s ≥ 0, else 0.
Integer deg4_sl2(const WeightVector& weights, int level);

/// Degree of the four-point sp(2ℓ) level-one bundle, in closed form.
/// With (a,b,c,d) sorted descending and s the s-parameter, the degree is 0
/// when a > ℓ+s (the rank vanishes), and otherwise
///   a+d ≥ b+c, s > 0:  max{0, (ℓ+1−a)(ℓ+2s−a)/2}
///   a+d ≥ b+c, s ≤ 0:  (ℓ+s+1−a)(ℓ+s−a)/2
///   a+d < b+c, s > 0:  max{0, (1+d−s)(d+s)/2}
///   a+d < b+c, s ≤ 0:  d(d+1)/2
/// Ties a+d = b+c take the first branch; both branches agree there.
/// Every halving is checked-exact, never truncated.
Integer deg4_sp(const WeightVector& weights, int level);

/// The rank-factored form of deg4_sp: rank times (ℓ+2s−a)/2, (ℓ+s−a)/2,
/// (d+s)/2 or d/2 in the same four cases, clamped to 0 when the factor is
/// negative or a > ℓ+s.  The division by 2 applies to the whole product.
/// Agreement with deg4_sp is a standing cross-check.
Integer deg4_sp_rank_form(const WeightVector& weights, int level);

/// Dispatch on the family tag.
Integer deg4(Family family, const WeightVector& weights, int level);

}  // namespace cblocks
