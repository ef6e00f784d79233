#include "cblocks/degrees.hpp"

#include <cassert>

#include "cblocks/errors.hpp"

namespace cblocks {

namespace {

struct FourPoint {
  int a, b, c, d;
  int s;
};

FourPoint unpack(const WeightVector& weights, int level) {
  if (weights.size() != 4) throw ArityError(4, weights.size());
  if (weights.max_entry() > level) throw WeightExceedsLevel(weights.max_entry(), level);
  return FourPoint{weights[0], weights[1], weights[2], weights[3],
                   s_parameter(weights, level)};
}

// checked-exact halving: a silent floor would mask a transcription bug
Integer half(long long value) {
  if (value % 2 != 0) throw Error("degree formula produced an odd numerator");
  return Integer(value / 2);
}

}  // namespace

Integer deg4_sl2(const WeightVector& weights, int level) {
  const FourPoint p = unpack(weights, level);
  if (p.s < 0) return 0;
  return rank(weights, level) * p.s;
}

Integer deg4_sp(const WeightVector& weights, int level) {
  const auto [a, b, c, d, s] = unpack(weights, level);
  if (a > level + s) return 0;  // rank vanishes
  long long v;
  if (a + d >= b + c) {
    v = s > 0 ? static_cast<long long>(level + 1 - a) * (level + 2 * s - a)
              : static_cast<long long>(level + s + 1 - a) * (level + s - a);
  } else {
    v = s > 0 ? static_cast<long long>(1 + d - s) * (d + s)
              : static_cast<long long>(d) * (d + 1);
  }
  if (v < 0) return 0;
  return half(v);
}

Integer deg4_sp_rank_form(const WeightVector& weights, int level) {
  const auto [a, b, c, d, s] = unpack(weights, level);
  if (a > level + s) return 0;
  long long factor;
  if (a + d >= b + c) {
    factor = s > 0 ? level + 2 * s - a : level + s - a;
  } else {
    factor = s > 0 ? d + s : d;
  }
  if (factor < 0) return 0;
  Integer product = rank(weights, level) * factor;
  if (product % 2 != 0) throw Error("rank-form degree produced an odd product");
  return product / 2;
}

Integer deg4(Family family, const WeightVector& weights, int level) {
  return family == Family::Sl2 ? deg4_sl2(weights, level)
                               : deg4_sp(weights, level);
}

}  // namespace cblocks
