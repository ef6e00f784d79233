#include "cblocks/props.hpp"

#include <algorithm>
#include <chrono>
#include <sstream>

#include "cblocks/degrees.hpp"
#include "cblocks/fusion.hpp"
#include "cblocks/intersection.hpp"
#include "cblocks/parallel.hpp"

namespace cblocks {

namespace {

using Clock = std::chrono::steady_clock;

std::chrono::milliseconds since(Clock::time_point start) {
  return std::chrono::duration_cast<std::chrono::milliseconds>(Clock::now() - start);
}

std::string weights_str(const std::vector<int>& w) {
  std::string out;
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(w[i]);
  }
  return out;
}

}  // namespace

VerificationReport check_prop_main(int n, int level_max) {
  const auto start = Clock::now();
  VerificationReport report;
  report.proposition_id = "main";

  struct Instance {
    WeightVector weights;
    int level;
  };
  std::vector<Instance> instances;
  for (int level = 1; level <= level_max; ++level)
    for_each_weight_vector(n, level, [&](const WeightVector& wv) {
      instances.push_back({wv, level});
    });

  struct Result {
    std::vector<CheckFailure> failures;
    std::optional<StrictWitness> witness;
  };
  std::vector<Result> results(instances.size());
  const auto curves = enumerate_fcurves(n);

  parallel_for(instances.size(), [&](std::size_t idx) {
    const auto& [wv, level] = instances[idx];
    Result& res = results[idx];
    const BundleSpec sl2 = make_bundle(Family::Sl2, level, wv.entries());
    const BundleSpec spc = make_bundle(Family::Spc, level, wv.entries());
    const Rank r = rank(wv, level);

    bool equal = true;
    std::optional<StrictWitness> strict;
    for (const FCurve& curve : curves) {
      const Integer da = intersect(sl2, curve);
      const Integer db = intersect(spc, curve);
      if (da > db) {
        res.failures.push_back({{sl2, spc},
                                curve,
                                std::nullopt,
                                "sl2 degree <= spc degree",
                                da.str() + " > " + db.str()});
      }
      if (da != db) {
        equal = false;
        if (!strict && db > da)
          strict = StrictWitness{wv, level, curve, da, db};
      }
    }
    if (r <= 1 && !equal) {
      res.failures.push_back({{sl2, spc},
                              strict ? std::optional<FCurve>(strict->curve) : std::nullopt,
                              std::nullopt,
                              "equal divisors at rank " + r.str(),
                              "intersection vectors differ"});
    }
    if (r > 1) {
      if (!strict) {
        res.failures.push_back({{sl2, spc},
                                std::nullopt,
                                std::nullopt,
                                "a strict witness curve at rank " + r.str(),
                                "all F-curve degrees equal"});
      } else {
        res.witness = strict;
      }
    }
  });

  report.instances_checked = static_cast<long long>(instances.size());
  for (auto& res : results) {
    for (auto& f : res.failures) report.failures.push_back(std::move(f));
    if (res.witness) report.witnesses.push_back(std::move(*res.witness));
  }
  report.elapsed = since(start);
  return report;
}

VerificationReport check_stabilization(const WeightVector& weights, int extra) {
  const auto start = Clock::now();
  VerificationReport report;
  report.proposition_id = "stab";

  long long sum = weights.sum();
  const int a1 = weights.max_entry();
  if (sum < 2 || stabilizing_lie_rank(weights) < a1) {
    report.notes.push_back("skipped: stabilizing Lie rank below max weight for (" +
                           weights_str(weights.entries()) +
                           "); such bundles are trivial at every Lie rank");
    report.elapsed = since(start);
    return report;
  }
  const int r_stable = stabilizing_lie_rank(weights);
  const int r_lo = std::max(a1, r_stable);
  const bool nontrivial_expected = rank(weights, r_stable) > 0;

  std::optional<IntersectionVector> first;
  for (int r = r_lo; r <= r_stable + extra; ++r) {
    const BundleSpec bundle = make_bundle(Family::Spc, r, weights.entries());
    IntersectionVector iv = intersection_vector(bundle);
    ++report.instances_checked;
    const bool trivial = std::all_of(iv.degrees.begin(), iv.degrees.end(),
                                     [](const Integer& d) { return d == 0; });
    if (trivial == nontrivial_expected) {
      report.failures.push_back({{bundle},
                                 std::nullopt,
                                 r,
                                 nontrivial_expected ? "nontrivial class" : "trivial class",
                                 trivial ? "trivial" : "nontrivial"});
    }
    if (!first) {
      first = std::move(iv);
    } else if (iv != *first) {
      report.failures.push_back({{bundle},
                                 std::nullopt,
                                 r,
                                 "class equal to the one at Lie rank " + std::to_string(r_lo),
                                 "class differs"});
    }
  }
  report.elapsed = since(start);
  return report;
}

VerificationReport check_rank_monotonicity(const WeightVector& weights, int r_hi) {
  const auto start = Clock::now();
  VerificationReport report;
  report.proposition_id = "mono";

  const int r_lo = std::max(weights.max_entry(), 1);
  if (r_lo > r_hi) {
    report.notes.push_back("skipped: no Lie rank admits the weights below r_hi");
    report.elapsed = since(start);
    return report;
  }
  // ranks below the stabilizing Lie rank are strictly smaller than the
  // stabilized value, and equal to it from r_λ + 1 on; consecutive levels
  // need not differ (the four-point increment bottoms out at zero)
  const int r_stable = weights.sum() >= 2 ? stabilizing_lie_rank(weights) : -1;
  const Rank anchor = rank(weights, std::max(r_lo, r_stable + 1));
  const std::vector<Rank> ranks = rank_at_levels(weights, r_lo, r_hi);
  for (int r = r_lo; r <= r_hi; ++r) {
    const Rank& here = ranks[static_cast<std::size_t>(r - r_lo)];
    ++report.instances_checked;
    const bool below = r <= r_stable;
    const bool ok = below ? here < anchor : here == anchor;
    if (!ok) {
      report.failures.push_back({{make_bundle(Family::Spc, r, weights.entries())},
                                 std::nullopt,
                                 r,
                                 below ? "rank(r) < stabilized rank " + anchor.str()
                                       : "rank(r) = stabilized rank " + anchor.str(),
                                 here.str()});
    }
  }
  report.elapsed = since(start);
  return report;
}

VerificationReport check_plussing(int n, int level) {
  const auto start = Clock::now();
  VerificationReport report;
  report.proposition_id = "plussing";
  if (n < 1 || n > 20) throw Error("plussing scan supports 1 <= n <= 20");

  std::vector<WeightVector> all = enumerate_weight_vectors(n, level);
  std::vector<std::vector<CheckFailure>> failures(all.size());
  std::vector<long long> counts(all.size(), 0);

  parallel_for(all.size(), [&](std::size_t idx) {
    const WeightVector& wv = all[idx];
    const Rank expected = rank(wv, level);
    const std::size_t size = wv.size();
    for (std::uint64_t bits = 0; bits < (1ULL << size); ++bits) {
      if (__builtin_popcountll(bits) % 2 != 0) continue;
      std::vector<std::size_t> subset;
      for (std::size_t i = 0; i < size; ++i)
        if (bits & (1ULL << i)) subset.push_back(i);
      const WeightVector moved = plussed(wv, level, subset);
      ++counts[idx];
      const Rank got = rank(moved, level);
      if (got != expected) {
        failures[idx].push_back({{make_bundle(Family::Sl2, level, wv.entries()),
                                  make_bundle(Family::Sl2, level, moved.entries())},
                                 std::nullopt,
                                 level,
                                 expected.str(),
                                 got.str()});
      }
    }
  });

  for (std::size_t i = 0; i < all.size(); ++i) {
    report.instances_checked += counts[i];
    for (auto& f : failures[i]) report.failures.push_back(std::move(f));
  }
  report.elapsed = since(start);
  return report;
}

const ReferenceValues& reference_values() {
  static const ReferenceValues values;
  return values;
}

VerificationReport check_reference_examples(const ReferenceValues& values) {
  const auto start = Clock::now();
  VerificationReport report;
  report.proposition_id = "examples";

  auto expect = [&](bool ok, const std::vector<BundleSpec>& bundles,
                    const std::string& expected, const std::string& got) {
    ++report.instances_checked;
    if (!ok) report.failures.push_back({bundles, std::nullopt, std::nullopt, expected, got});
  };
  auto coords_str = [](const std::vector<Rational>& coords) {
    std::ostringstream os;
    for (std::size_t i = 0; i < coords.size(); ++i) {
      if (i) os << ',';
      os << coords[i];
    }
    return os.str();
  };
  auto ll_str = [](const std::vector<long long>& v) {
    std::string out;
    for (std::size_t i = 0; i < v.size(); ++i) {
      if (i) out += ',';
      out += std::to_string(v[i]);
    }
    return out;
  };
  auto coords_match = [](const std::vector<Rational>& got,
                         const std::vector<long long>& want) {
    if (got.size() != want.size()) return false;
    for (std::size_t i = 0; i < got.size(); ++i)
      if (got[i] != Rational(want[i])) return false;
    return true;
  };

  {  // four-point example at ℓ = 5, weights (4,4,4,4)
    const WeightVector wv({4, 4, 4, 4});
    const BundleSpec sl2 = make_bundle(Family::Sl2, 5, wv.entries());
    const BundleSpec spc = make_bundle(Family::Spc, 5, wv.entries());
    expect(rank(wv, 5) == values.rank_4444, {sl2, spc}, values.rank_4444.str(),
           rank(wv, 5).str());
    expect(deg4_sl2(wv, 5) == values.deg_sl2_4444, {sl2}, values.deg_sl2_4444.str(),
           deg4_sl2(wv, 5).str());
    expect(deg4_sp(wv, 5) == values.deg_sp_4444, {spc}, values.deg_sp_4444.str(),
           deg4_sp(wv, 5).str());
  }
  {  // four-point example above the critical level: (2,2,1,1) at ℓ = 5
    const WeightVector wv({2, 2, 1, 1});
    const BundleSpec sl2 = make_bundle(Family::Sl2, 5, wv.entries());
    const BundleSpec spc = make_bundle(Family::Spc, 5, wv.entries());
    expect(rank(wv, 5) == values.rank_2211, {sl2, spc}, values.rank_2211.str(),
           rank(wv, 5).str());
    expect(deg4_sl2(wv, 5) == values.deg_sl2_2211, {sl2}, values.deg_sl2_2211.str(),
           deg4_sl2(wv, 5).str());
    expect(deg4_sp(wv, 5) == values.deg_sp_2211, {spc}, values.deg_sp_2211.str(),
           deg4_sp(wv, 5).str());
  }
  {  // both published coordinate vectors in the M̄0,6 nonadjacent basis
    const BundleSpec sl2 = make_labeled_bundle(Family::Sl2, 5, values.labeled_m06);
    const BundleSpec spc = make_labeled_bundle(Family::Spc, 5, values.labeled_m06);
    const DivisorClass csl = divisor_class(sl2);
    const DivisorClass csp = divisor_class(spc);
    expect(coords_match(csl.coords, values.coords_sl2), {sl2},
           ll_str(values.coords_sl2), coords_str(csl.coords));
    expect(coords_match(csp.coords, values.coords_spc), {spc},
           ll_str(values.coords_spc), coords_str(csp.coords));
  }
  {  // six stable rows: ranks and classes at Lie ranks 5..10
    const WeightVector wv(values.stable_weights);
    for (int level = 5; level <= 10; ++level) {
      const std::size_t row = static_cast<std::size_t>(level - 5);
      const BundleSpec spc = make_bundle(Family::Spc, level, wv.entries());
      expect(rank(wv, level) == Integer(values.stable_ranks[row]), {spc},
             std::to_string(values.stable_ranks[row]), rank(wv, level).str());
      const DivisorClass cls = divisor_class(spc);
      expect(coords_match(cls.coords, values.stable_coords[row]), {spc},
             ll_str(values.stable_coords[row]), coords_str(cls.coords));
    }
  }
  {  // nine-summand level-one decomposition on all S(9,4) F-curves
    const BundleSpec target =
        make_labeled_bundle(Family::Sl2, 9, values.decomposition_target);
    std::vector<BundleSpec> parts;
    for (const auto& w : values.decomposition_parts)
      parts.push_back(make_labeled_bundle(Family::Sl2, 1, w));
    expect(verify_sum_decomposition(target, parts), {target},
           "class equals the sum of the nine level-one classes",
           "some F-curve degree differs");
  }

  report.elapsed = since(start);
  return report;
}

}  // namespace cblocks
