#include "cblocks/intersection.hpp"

#include <algorithm>
#include <array>
#include <utility>

#include "cblocks/degrees.hpp"
#include "cblocks/fusion.hpp"
#include "cblocks/linalg.hpp"

namespace cblocks {

namespace {

Integer deg4_ints(Family family, int a, int b, int c, int d, int level) {
  std::array<int, 4> w{a, b, c, d};
  std::sort(w.begin(), w.end(), std::greater<int>());
  return deg4(family, WeightVector({w[0], w[1], w[2], w[3]}), level);
}

}  // namespace

Integer intersect(const BundleSpec& bundle, const FCurve& curve) {
  if (curve.n() != bundle.n()) throw PartitionMismatch(curve.n(), bundle.n());
  const int level = bundle.level;

  // Attach-rank support per block: μ contributes only when the block's
  // weights plus μ have nonzero rank, which pins μ's parity and caps it by
  // the block's weight sum.
  std::array<std::vector<std::pair<int, Integer>>, 4> support;
  for (int i = 0; i < 4; ++i) {
    std::vector<int> lam;
    lam.reserve(curve.block(i).size() + 1);
    for (int p : curve.block(i)) lam.push_back(bundle.weights[static_cast<std::size_t>(p - 1)]);
    lam.push_back(0);
    for (int mu = 0; mu <= level; ++mu) {
      lam.back() = mu;
      Integer r = rank_of(lam, level);
      if (r != 0) support[i].emplace_back(mu, std::move(r));
    }
  }

  Integer total = 0;
  for (const auto& [m0, r0] : support[0])
    for (const auto& [m1, r1] : support[1])
      for (const auto& [m2, r2] : support[2])
        for (const auto& [m3, r3] : support[3]) {
          if ((m0 + m1 + m2 + m3) % 2 != 0) continue;
          Integer d = deg4_ints(bundle.family, m0, m1, m2, m3, level);
          if (d != 0) total += d * r0 * r1 * r2 * r3;
        }
  return total;
}

IntersectionVector intersection_vector(const BundleSpec& bundle) {
  IntersectionVector out;
  out.n = bundle.n();
  for (const FCurve& curve : enumerate_fcurves(bundle.n()))
    out.degrees.push_back(intersect(bundle, curve));
  return out;
}

const std::vector<std::vector<int>>& nonadjacent_basis_m06() {
  static const std::vector<std::vector<int>> basis = {
      {1, 3}, {1, 4}, {1, 5}, {2, 4}, {2, 5}, {2, 6}, {3, 5}, {3, 6},
      {4, 6}, {1, 2, 4}, {1, 2, 5}, {1, 3, 4}, {1, 3, 5}, {1, 3, 6},
      {1, 4, 5}, {1, 4, 6}};
  return basis;
}

DivisorClass divisor_class(const BundleSpec& bundle) {
  if (bundle.n() != 6) throw BasisUnavailable(bundle.n());
  return divisor_class(bundle, nonadjacent_basis_m06(), "m06-nonadjacent");
}

DivisorClass divisor_class(const BundleSpec& bundle,
                           const std::vector<std::vector<int>>& basis,
                           const std::string& basis_id) {
  const auto curves = enumerate_fcurves(bundle.n());
  std::vector<std::vector<Integer>> pairing(curves.size());
  std::vector<Integer> degrees(curves.size());
  for (std::size_t i = 0; i < curves.size(); ++i) {
    pairing[i].reserve(basis.size());
    for (const auto& subset : basis)
      pairing[i].emplace_back(boundary_pairing(curves[i], subset));
    degrees[i] = intersect(bundle, curves[i]);
  }
  std::vector<Rational> coords = solve_exact(pairing, degrees);

  // Round trip: the coordinates must reproduce every F-curve degree.
  for (std::size_t i = 0; i < curves.size(); ++i) {
    Rational acc = 0;
    for (std::size_t j = 0; j < basis.size(); ++j) acc += coords[j] * pairing[i][j];
    if (acc != Rational(degrees[i])) throw InconsistentSystem();
  }
  return DivisorClass{basis_id, basis, std::move(coords)};
}

bool divisors_equal(const BundleSpec& lhs, const BundleSpec& rhs) {
  if (lhs.n() != rhs.n())
    throw ArityMismatch(static_cast<std::size_t>(lhs.n()),
                        static_cast<std::size_t>(rhs.n()));
  for (const FCurve& curve : enumerate_fcurves(lhs.n()))
    if (intersect(lhs, curve) != intersect(rhs, curve)) return false;
  return true;
}

bool is_trivial(const BundleSpec& bundle) {
  for (const FCurve& curve : enumerate_fcurves(bundle.n()))
    if (intersect(bundle, curve) != 0) return false;
  return true;
}

bool verify_sum_decomposition(const BundleSpec& target,
                              const std::vector<BundleSpec>& parts) {
  for (const BundleSpec& part : parts)
    if (part.n() != target.n())
      throw ArityMismatch(static_cast<std::size_t>(target.n()),
                          static_cast<std::size_t>(part.n()));
  for (const FCurve& curve : enumerate_fcurves(target.n())) {
    Integer sum = 0;
    for (const BundleSpec& part : parts) sum += intersect(part, curve);
    if (sum != intersect(target, curve)) return false;
  }
  return true;
}

bool verify_scaling(const BundleSpec& base, int scale) {
  if (base.family != Family::Spc)
    throw Error("scaling identity applies to spc bundles");
  if (scale < 1) throw Error("scale must be positive");
  Rank base_rank = rank(base.canonical(), base.level);
  if (base_rank != 1) throw RankNotOne(base_rank.str());
  std::vector<int> scaled = base.weights;
  for (int& w : scaled) w *= scale;
  const BundleSpec big = make_labeled_bundle(Family::Spc, base.level * scale,
                                             std::move(scaled));
  for (const FCurve& curve : enumerate_fcurves(base.n()))
    if (intersect(big, curve) != scale * intersect(base, curve)) return false;
  return true;
}

}  // namespace cblocks
