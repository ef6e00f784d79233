#pragma once

#include <cstddef>
#include <vector>

#include "cblocks/numeric.hpp"
#include "cblocks/weights.hpp"

namespace cblocks {

/// Bundle ranks are exact and unbounded.
using Rank = Integer;

/// Two-point rank at level ℓ: 1 iff the weights are equal.
Rank rank2(int a, int b, int level);

/// Three-point fusion rules for sl2 at level ℓ: rank 1 iff a+b+c is even,
/// the three triangle inequalities hold, and a+b+c ≤ 2ℓ; otherwise 0.
Rank rank3(int a, int b, int c, int level);

/// Exact rank of the n-point bundle, by factorization: base cases for
/// n ≤ 3, then split off the two smallest weights and sum over the
/// attaching weight.  sl2 at level ℓ and sp(2ℓ) at level one have the
/// same rank, so this serves both families.  Returns 0 for odd weight
/// sums.  Memoized on (canonical weights, level); the memo tolerates
/// concurrent idempotent inserts.
Rank rank(const WeightVector& weights, int level);

/// rank() of an arbitrary-order multiset; canonicalizes first.
Rank rank_of(std::vector<int> weights, int level);

/// True iff the largest weight strictly exceeds the sum of the others.
/// A sufficient condition for rank zero at every level (generalized
/// triangle inequality); used as a pruning fast path.
bool triangle_vanishes(const WeightVector& weights);

enum class RankOneClass { Zero, One, MoreThanOne };

/// Closed-form classification of four-point ranks into {0, 1, >1} in
/// terms of s = s_parameter and the sorted weights (a,b,c,d):
///   rank = 1  iff  (s ≥ 0, d ≥ s, and a = ℓ or d = s)  or  (s < 0, a = ℓ+s)
///   rank > 1  iff  (s ≥ 0, d > s, a ≠ ℓ)               or  (s < 0, a < ℓ+s)
/// These conditions assume positive weights; d = 0 reduces to the
/// three-point rules (rank is then 0 or 1).
RankOneClass classify_rank_one_4pt(const WeightVector& weights, int level);

/// Ranks at every level in [level_lo, level_hi].
std::vector<Rank> rank_at_levels(const WeightVector& weights, int level_lo,
                                 int level_hi);

std::size_t rank_memo_size();
void clear_rank_memo();

}  // namespace cblocks
