#include "cblocks/fusion.hpp"

#include <algorithm>
#include <cassert>
#include <mutex>
#include <numeric>
#include <shared_mutex>
#include <unordered_map>

#include "cblocks/errors.hpp"

namespace cblocks {

namespace {

void check_level(int w, int level) {
  if (w > level) throw WeightExceedsLevel(w, level);
}

struct MemoKey {
  int level;
  std::vector<int> weights;  // weakly decreasing

  bool operator==(const MemoKey&) const = default;
};

struct MemoKeyHash {
  std::size_t operator()(const MemoKey& k) const {
    std::uint64_t h = 1469598103934665603ULL;
    auto mix = [&h](std::uint64_t v) {
      h ^= v;
      h *= 1099511628211ULL;
    };
    mix(static_cast<std::uint64_t>(k.level));
    for (int w : k.weights) mix(static_cast<std::uint64_t>(w) + 1);
    return static_cast<std::size_t>(h);
  }
};

// Pure function table: concurrent inserts of the same key write the same
// value, so losing a race only costs a recomputation.
std::unordered_map<MemoKey, Integer, MemoKeyHash> g_memo;
std::shared_mutex g_memo_mutex;

bool memo_lookup(const MemoKey& key, Integer& out) {
  std::shared_lock lock(g_memo_mutex);
  auto it = g_memo.find(key);
  if (it == g_memo.end()) return false;
  out = it->second;
  return true;
}

void memo_store(MemoKey key, const Integer& value) {
  std::unique_lock lock(g_memo_mutex);
  g_memo.emplace(std::move(key), value);
}

// weights weakly decreasing, all ≤ level, even or odd sum.
Integer rank_sorted(const std::vector<int>& weights, int level) {
  const std::size_t n = weights.size();
  if (n == 0) return 1;  // vacuum convention
  long long sum = std::accumulate(weights.begin(), weights.end(), 0LL);
  if (sum % 2 != 0) return 0;
  if (n == 1) return weights[0] == 0 ? 1 : 0;
  if (n == 2) return weights[0] == weights[1] ? 1 : 0;
  if (n == 3) return rank3(weights[0], weights[1], weights[2], level);
  if (weights[0] > sum - weights[0]) return 0;  // generalized triangle inequality

  MemoKey key{level, weights};
  Integer cached;
  if (memo_lookup(key, cached)) return cached;

  // Split off the two smallest weights; the attaching weight μ runs over
  // the three-point support of (b1, b2, μ) at this level.
  const int b1 = weights[n - 2];
  const int b2 = weights[n - 1];
  const int lo = b1 - b2;  // b1 ≥ b2
  const int hi = std::min(b1 + b2, 2 * level - b1 - b2);
  Integer total = 0;
  std::vector<int> rest(weights.begin(), weights.end() - 2);
  for (int mu = lo; mu <= hi; mu += 2) {
    std::vector<int> next = rest;
    next.insert(std::upper_bound(next.begin(), next.end(), mu, std::greater<int>()), mu);
    total += rank_sorted(next, level);
  }

  memo_store(std::move(key), total);
  return total;
}

}  // namespace

Rank rank2(int a, int b, int level) {
  check_level(a, level);
  check_level(b, level);
  return a == b ? 1 : 0;
}

Rank rank3(int a, int b, int c, int level) {
  check_level(a, level);
  check_level(b, level);
  check_level(c, level);
  if ((a + b + c) % 2 != 0) return 0;
  if (a > b + c || b > a + c || c > a + b) return 0;
  if (a + b + c > 2 * level) return 0;
  return 1;
}

Rank rank(const WeightVector& weights, int level) {
  check_level(weights.max_entry(), level);
  return rank_sorted(weights.entries(), level);
}

Rank rank_of(std::vector<int> weights, int level) {
  return rank(WeightVector(std::move(weights)), level);
}

bool triangle_vanishes(const WeightVector& weights) {
  if (weights.empty()) throw EmptyWeights();
  return weights.max_entry() > weights.sum() - weights.max_entry();
}

RankOneClass classify_rank_one_4pt(const WeightVector& weights, int level) {
  if (weights.size() != 4) throw ArityError(4, weights.size());
  check_level(weights.max_entry(), level);
  const int a = weights[0];
  const int d = weights[3];
  // a zero weight is a vacuum insertion: the bundle degenerates to the
  // three-point one, whose rank the fusion rules settle directly (the
  // closed-form conditions below assume four positive weights)
  if (d == 0) {
    return rank3(weights[0], weights[1], weights[2], level) == 1
               ? RankOneClass::One
               : RankOneClass::Zero;
  }
  const int s = s_parameter(weights, level);
  if (s >= 0) {
    if (d >= s && (a == level || d == s)) return RankOneClass::One;
    if (d > s && a != level) return RankOneClass::MoreThanOne;
    return RankOneClass::Zero;
  }
  if (a == level + s) return RankOneClass::One;
  if (a < level + s) return RankOneClass::MoreThanOne;
  return RankOneClass::Zero;
}

std::vector<Rank> rank_at_levels(const WeightVector& weights, int level_lo,
                                 int level_hi) {
  check_level(weights.max_entry(), level_lo);
  if (level_lo > level_hi)
    throw Error("empty level range " + std::to_string(level_lo) + ".." +
                std::to_string(level_hi));
  std::vector<Rank> out;
  out.reserve(static_cast<std::size_t>(level_hi - level_lo + 1));
  for (int level = level_lo; level <= level_hi; ++level)
    out.push_back(rank(weights, level));
  return out;
}

std::size_t rank_memo_size() {
  std::shared_lock lock(g_memo_mutex);
  return g_memo.size();
}

void clear_rank_memo() {
  std::unique_lock lock(g_memo_mutex);
  g_memo.clear();
}

}  // namespace cblocks
