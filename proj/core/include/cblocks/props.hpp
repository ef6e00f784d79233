#pragma once

#include <chrono>
#include <optional>
#include <string>
#include <vector>

#include "cblocks/fcurve.hpp"
#include "cblocks/numeric.hpp"
#include "cblocks/weights.hpp"

namespace cblocks {

/// One failed instance, with enough data to reproduce it.
struct CheckFailure {
  std::vector<BundleSpec> bundles;
  std::optional<FCurve> curve;  // witness F-curve, when one applies
  std::optional<int> level;     // witness level, when one applies
  std::string expected;
  std::string got;
};

/// A rank > 1 instance together with an F-curve where the sp degree
/// strictly exceeds the sl2 degree (recorded by the main-proposition scan).
struct StrictWitness {
  WeightVector weights;
  int level = 0;
  FCurve curve;
  Integer sl2_degree;
  Integer spc_degree;
};

/// Structured outcome of one proposition scan.  Zero failures iff pass;
/// instances are never suppressed, and every failure is reproducible.
struct VerificationReport {
  std::string proposition_id;
  long long instances_checked = 0;
  std::vector<CheckFailure> failures;
  std::vector<StrictWitness> witnesses;
  std::vector<std::string> notes;  // skipped instances and similar
  std::chrono::milliseconds elapsed{0};

  bool passed() const { return failures.empty(); }
};

/// Divisor equality across the two families holds iff rank ≤ 1.  Scans all
/// even-sum λ with n entries ≤ ℓ for every ℓ ≤ level_max: rank ≤ 1
/// instances must have equal intersection vectors; rank > 1 instances must
/// yield a strict witness curve (recorded); the sp degree must dominate
/// pointwise everywhere.
VerificationReport check_prop_main(int n, int level_max);

/// Classes of sp(2r) level-one bundles are constant for r ≥ r_λ and
/// nontrivial iff the rank at r_λ is positive.  Checks r in
/// [max(a₁, r_λ), r_λ + extra].  Skipped (with a note) when r_λ < a₁:
/// those bundles are trivial for every r.
VerificationReport check_stabilization(const WeightVector& weights, int extra);

/// Ranks strictly increase with the Lie rank up to r_λ + 1 and are
/// constant beyond.  Checks r from max(a₁, 1) to r_hi.
VerificationReport check_rank_monotonicity(const WeightVector& weights, int r_hi);

/// rank(λ) = rank(plussed(λ, I)) for every even-size subset I, checked
/// exhaustively over all even-sum λ with n entries ≤ ℓ.
VerificationReport check_plussing(int n, int level);

/// Frozen published values reproduced bit-exactly by
/// check_reference_examples.  Exposed so the harness can be self-tested
/// against a corrupted copy.
struct ReferenceValues {
  // (4,4,4,4) at ℓ=5: rank and the two four-point degrees
  Integer rank_4444{2};
  Integer deg_sl2_4444{6};
  Integer deg_sp_4444{7};
  // (2,2,1,1) at ℓ=5
  Integer rank_2211{2};
  Integer deg_sl2_2211{0};
  Integer deg_sp_2211{1};
  // labeled weights (4,4,3,4,4,3) at ℓ=5: coordinates in the nonadjacent
  // basis of Pic(M̄0,6)
  std::vector<int> labeled_m06 = {4, 4, 3, 4, 4, 3};
  std::vector<long long> coords_sl2 = {12, 6, 12, 12, 6, 12, 12, 0,
                                       12, 2,  2,  6,  24, 2,  2,  6};
  std::vector<long long> coords_spc = {14, 8, 14, 14, 8, 14, 14, 3,
                                       14, 4,  4,  8,  28, 4,  4,  8};
  // (5,4,3,2,1,1) at Lie ranks 5..10: ranks and basis coordinates
  std::vector<int> stable_weights = {5, 4, 3, 2, 1, 1};
  std::vector<long long> stable_ranks = {3, 7, 10, 11, 11, 11};
  std::vector<std::vector<long long>> stable_coords = {
      {7, 1, 1, 5, 2, 2, 1, 1, 1, 1, 1, 3, 7, 6, 1, 1},
      {11, 4, 2, 9, 4, 4, 3, 3, 2, 4, 2, 6, 12, 10, 3, 3},
      {12, 5, 3, 10, 5, 5, 4, 4, 3, 5, 3, 7, 14, 11, 4, 4},
      {12, 5, 3, 10, 5, 5, 4, 4, 3, 5, 3, 7, 14, 11, 4, 4},
      {12, 5, 3, 10, 5, 5, 4, 4, 3, 5, 3, 7, 14, 11, 4, 4},
      {12, 5, 3, 10, 5, 5, 4, 4, 3, 5, 3, 7, 14, 11, 4, 4}};
  // n = 9 level-one decomposition: target weights at ℓ = 9 and the nine
  // labeled level-one summands
  std::vector<int> decomposition_target = {9, 8, 8, 8, 8, 8, 8, 2, 1};
  std::vector<std::vector<int>> decomposition_parts = {
      {1, 1, 1, 1, 1, 1, 1, 1, 0}, {1, 1, 1, 1, 1, 1, 1, 1, 0},
      {1, 1, 1, 1, 1, 1, 1, 0, 1}, {1, 1, 1, 1, 1, 1, 0, 0, 0},
      {1, 1, 1, 1, 1, 0, 1, 0, 0}, {1, 1, 1, 1, 0, 1, 1, 0, 0},
      {1, 1, 1, 0, 1, 1, 1, 0, 0}, {1, 1, 0, 1, 1, 1, 1, 0, 0},
      {1, 0, 1, 1, 1, 1, 1, 0, 0}};
};

const ReferenceValues& reference_values();

/// Reproduces every frozen reference value exactly: the two four-point
/// examples, both M̄0,6 coordinate vectors, the six stable rows, and the
/// nine-summand decomposition on all S(9,4) F-curves.
VerificationReport check_reference_examples(
    const ReferenceValues& values = reference_values());

}  // namespace cblocks
