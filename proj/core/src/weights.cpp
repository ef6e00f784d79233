#include "cblocks/weights.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace cblocks {

WeightVector::WeightVector(std::vector<int> entries) : entries_(std::move(entries)) {
  for (int w : entries_) {
    if (w < 0) throw Error("negative weight " + std::to_string(w));
  }
  std::sort(entries_.begin(), entries_.end(), std::greater<int>());
}

long long WeightVector::sum() const {
  return std::accumulate(entries_.begin(), entries_.end(), 0LL);
}

const char* family_name(Family f) {
  return f == Family::Sl2 ? "sl2" : "spc";
}

namespace {

BundleSpec validated(Family family, int level, std::vector<int> weights) {
  if (level < 1) throw Error("level must be positive, got " + std::to_string(level));
  if (weights.empty()) throw EmptyWeights();
  long long sum = 0;
  for (int w : weights) {
    if (w < 0) throw Error("negative weight " + std::to_string(w));
    if (w > level) throw WeightExceedsLevel(w, level);
    sum += w;
  }
  if (sum % 2 != 0) throw OddWeightSum(sum);
  return BundleSpec{family, level, std::move(weights)};
}

}  // namespace

BundleSpec make_bundle(Family family, int level, std::vector<int> raw_weights) {
  std::sort(raw_weights.begin(), raw_weights.end(), std::greater<int>());
  return validated(family, level, std::move(raw_weights));
}

BundleSpec make_labeled_bundle(Family family, int level, std::vector<int> raw_weights) {
  return validated(family, level, std::move(raw_weights));
}

int s_parameter(const WeightVector& weights, int level) {
  if (weights.size() != 4) throw ArityError(4, weights.size());
  long long sum = weights.sum();
  if (sum % 2 != 0) throw OddWeightSum(sum);
  return static_cast<int>(sum / 2) - level;
}

int stabilizing_lie_rank(const WeightVector& weights) {
  long long sum = weights.sum();
  if (sum % 2 != 0) throw OddWeightSum(sum);
  if (sum < 2) throw DegenerateSum();
  return static_cast<int>(sum / 2) - 1;
}

WeightVector plussed(const WeightVector& weights, int level,
                     const std::vector<std::size_t>& subset) {
  if (subset.size() % 2 != 0) throw OddSubset();
  if (weights.max_entry() > level)
    throw WeightExceedsLevel(weights.max_entry(), level);
  std::vector<int> out = weights.entries();
  std::vector<bool> seen(out.size(), false);
  for (std::size_t i : subset) {
    if (i >= out.size()) throw Error("plussing position out of range");
    if (seen[i]) throw Error("plussing position repeated");
    seen[i] = true;
    out[i] = level - out[i];
  }
  return WeightVector(std::move(out));
}

namespace {

void enumerate_rec(int remaining, int cap, long long sum, std::vector<int>& acc,
                   const std::function<void(const WeightVector&)>& fn) {
  if (remaining == 0) {
    if (sum % 2 == 0) fn(WeightVector(acc));
    return;
  }
  for (int w = 0; w <= cap; ++w) {
    acc.push_back(w);
    enumerate_rec(remaining - 1, w, sum + w, acc, fn);
    acc.pop_back();
  }
}

}  // namespace

void for_each_weight_vector(int n, int max_entry,
                            const std::function<void(const WeightVector&)>& fn) {
  if (n < 1) throw Error("need n >= 1 for weight enumeration");
  if (max_entry < 0) throw Error("max_entry must be nonnegative");
  // Each position ranges over [0, previous entry], so tuples are generated
  // directly in canonical form and in ascending lexicographic order.
  std::vector<int> acc;
  enumerate_rec(n, max_entry, 0, acc, fn);
}

std::vector<WeightVector> enumerate_weight_vectors(int n, int max_entry) {
  std::vector<WeightVector> out;
  for_each_weight_vector(n, max_entry,
                         [&](const WeightVector& wv) { out.push_back(wv); });
  return out;
}

}  // namespace cblocks
