#pragma once

#include <array>
#include <compare>
#include <cstdint>
#include <string>
#include <vector>

#include "cblocks/errors.hpp"

namespace cblocks {

/// An F-curve class on M̄0,n: an unordered partition of {1..n} into four
/// nonempty blocks.  Canonical form sorts each block ascending and orders
/// blocks by smallest element.  Supports n up to 62 (bitmask-backed).
class FCurve {
 public:
  FCurve(int n, std::array<std::vector<int>, 4> blocks);

  int n() const { return n_; }
  const std::array<std::vector<int>, 4>& blocks() const { return blocks_; }
  const std::vector<int>& block(int i) const { return blocks_[i]; }
  std::uint64_t block_mask(int i) const { return masks_[i]; }

  /// "1|2|3|456" for single-digit points; dot-separated inside blocks
  /// otherwise ("1|2|3|4.10.11").
  std::string to_string() const;

  bool operator==(const FCurve&) const = default;
  auto operator<=>(const FCurve&) const = default;

 private:
  int n_ = 0;
  std::array<std::vector<int>, 4> blocks_;
  std::array<std::uint64_t, 4> masks_{};
};

/// Every 4-block set partition of {1..n}, each exactly once, in a fixed
/// canonical order.  Count is the Stirling number S(n,4).
std::vector<FCurve> enumerate_fcurves(int n);

/// Intersection of the F-curve with the boundary divisor δ_I:
///   +1 if I or its complement is the union of exactly two blocks,
///   −1 if I or its complement is a single block of size ≥ 2,
///    0 otherwise.
/// `subset` holds 1-based points, 2 ≤ |I| ≤ n−2.
int boundary_pairing(const FCurve& curve, const std::vector<int>& subset);

}  // namespace cblocks
