#pragma once

#include <string>
#include <vector>

#include "cblocks/fcurve.hpp"
#include "cblocks/numeric.hpp"
#include "cblocks/weights.hpp"

namespace cblocks {

/// Degrees of one bundle against every F-curve, aligned with the order of
/// enumerate_fcurves(n).  Nonnegative throughout: the bundles are globally
/// generated, hence nef.  This is the canonical, basis-free representation
/// of the divisor class.
struct IntersectionVector {
  int n = 0;
  std::vector<Integer> degrees;

  bool operator==(const IntersectionVector&) const = default;
};

/// deg(V|F) for the F-curve of a 4-block partition: the sum over attaching
/// weight 4-tuples μ⃗ of deg4(μ⃗) times the product of the four attach
/// ranks rank(λ_{I_i} ∪ {μ_i}).  Terms with a vanishing rank factor are
/// pruned.  Weights attach to points through the bundle's stored order.
Integer intersect(const BundleSpec& bundle, const FCurve& curve);

IntersectionVector intersection_vector(const BundleSpec& bundle);

/// Exact coordinates of c1 in a declared boundary basis.
struct DivisorClass {
  std::string basis_id;
  std::vector<std::vector<int>> basis;  // boundary subsets, 1-based points
  std::vector<Rational> coords;
};

/// The 16-element nonadjacent boundary basis of Pic(M̄0,6), in the fixed
/// published ordering δ13, δ14, δ15, δ24, δ25, δ26, δ35, δ36, δ46, δ124,
/// δ125, δ134, δ135, δ136, δ145, δ146.
const std::vector<std::vector<int>>& nonadjacent_basis_m06();

/// Solves Σ_I x_I · (F · δ_I) = deg(V|F) over all F-curves, exactly.  The
/// overdetermined system must be consistent; the solution is verified to
/// reproduce the full intersection vector.  Uses the built-in basis for
/// n = 6; other n require an explicit basis.
DivisorClass divisor_class(const BundleSpec& bundle);
DivisorClass divisor_class(const BundleSpec& bundle,
                           const std::vector<std::vector<int>>& basis,
                           const std::string& basis_id = "user");

/// Nef classes are determined by their F-curve degrees, so equality of
/// divisors is entrywise equality of intersection vectors.
bool divisors_equal(const BundleSpec& lhs, const BundleSpec& rhs);

/// True iff every F-curve degree is zero.
bool is_trivial(const BundleSpec& bundle);

/// True iff target's intersection vector equals the entrywise sum of the
/// parts'.  All bundles must share n.
bool verify_sum_decomposition(const BundleSpec& target,
                              const std::vector<BundleSpec>& parts);

/// For a rank-one sp(2ℓ) level-one base, checks the scaling identity
/// c1(V_N) = N·c1(V_1) with V_N at Lie rank Nℓ and weights Nλ.
bool verify_scaling(const BundleSpec& base, int scale);

}  // namespace cblocks
