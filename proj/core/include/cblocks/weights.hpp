#pragma once

#include <functional>
#include <vector>

#include "cblocks/errors.hpp"

namespace cblocks {

/// An n-tuple of nonnegative integer weights in canonical (weakly
/// decreasing) order.  The same integers encode sl2 weights a·ω1 and
/// sp(2ℓ) level-one weights ω_a, so one type serves both families.
/// Zero entries are retained; they are meaningful marked points.
class WeightVector {
 public:
  WeightVector() = default;
  /// Sorts into canonical order; rejects negative entries.
  explicit WeightVector(std::vector<int> entries);

  const std::vector<int>& entries() const { return entries_; }
  int operator[](std::size_t i) const { return entries_[i]; }
  std::size_t size() const { return entries_.size(); }
  bool empty() const { return entries_.empty(); }

  long long sum() const;
  bool even_sum() const { return sum() % 2 == 0; }
  int max_entry() const { return entries_.empty() ? 0 : entries_.front(); }

  bool operator==(const WeightVector&) const = default;
  auto operator<=>(const WeightVector&) const = default;

 private:
  std::vector<int> entries_;  // weakly decreasing
};

/// The two bundle families handled here: sl2 at level ℓ, and sp(2ℓ) at
/// level one where ℓ is the Lie-algebra rank.
enum class Family { Sl2, Spc };

const char* family_name(Family f);

/// Identity of one conformal-blocks bundle.  `weights` are kept in
/// marked-point order: divisor classes (unlike ranks) are sensitive to
/// which point carries which weight, and published decompositions assign
/// weights to specific points.  `make_bundle` canonicalizes the order,
/// `make_labeled_bundle` preserves it.
struct BundleSpec {
  Family family = Family::Sl2;
  int level = 1;              // level for Sl2, Lie rank for Spc
  std::vector<int> weights;   // marked-point order, entries in [0, level]

  int n() const { return static_cast<int>(weights.size()); }
  WeightVector canonical() const { return WeightVector(weights); }

  bool operator==(const BundleSpec&) const = default;
};

BundleSpec make_bundle(Family family, int level, std::vector<int> raw_weights);
BundleSpec make_labeled_bundle(Family family, int level, std::vector<int> raw_weights);

/// s with a+b+c+d = 2(ℓ+s); defined for exactly four weights.
int s_parameter(const WeightVector& weights, int level);

/// r_λ = Σ aᵢ / 2 − 1.  Divisor classes of sp(2r) level-one bundles with
/// these weights coincide for every r ≥ r_λ.
int stabilizing_lie_rank(const WeightVector& weights);

/// Replaces λᵢ by ℓ−λᵢ at the positions in `subset` (0-based indices into
/// the stored order) and re-canonicalizes.  |subset| must be even; sl2
/// ranks are invariant under this move.
WeightVector plussed(const WeightVector& weights, int level,
                     const std::vector<std::size_t>& subset);

/// Calls `fn` for every weakly decreasing n-tuple with entries in
/// [0, max_entry] and even sum, in ascending lexicographic order.
void for_each_weight_vector(int n, int max_entry,
                            const std::function<void(const WeightVector&)>& fn);

std::vector<WeightVector> enumerate_weight_vectors(int n, int max_entry);

}  // namespace cblocks
