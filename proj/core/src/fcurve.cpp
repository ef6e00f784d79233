#include "cblocks/fcurve.hpp"

#include <algorithm>
#include <numeric>

namespace cblocks {

FCurve::FCurve(int n, std::array<std::vector<int>, 4> blocks)
    : n_(n), blocks_(std::move(blocks)) {
  if (n < 4) throw TooFewPoints(n);
  if (n > 62) throw Error("F-curves supported for n <= 62");
  std::uint64_t all = 0;
  std::size_t count = 0;
  for (auto& block : blocks_) {
    if (block.empty()) throw Error("F-curve block is empty");
    std::sort(block.begin(), block.end());
    count += block.size();
    for (int p : block) {
      if (p < 1 || p > n) throw Error("F-curve point out of range");
      std::uint64_t bit = 1ULL << (p - 1);
      if (all & bit) throw Error("F-curve blocks overlap");
      all |= bit;
    }
  }
  if (count != static_cast<std::size_t>(n))
    throw Error("F-curve blocks do not cover {1..n}");
  std::sort(blocks_.begin(), blocks_.end(),
            [](const auto& x, const auto& y) { return x.front() < y.front(); });
  for (int i = 0; i < 4; ++i) {
    std::uint64_t m = 0;
    for (int p : blocks_[i]) m |= 1ULL << (p - 1);
    masks_[i] = m;
  }
}

std::string FCurve::to_string() const {
  const char* point_sep = n_ > 9 ? "." : "";
  std::string out;
  for (int i = 0; i < 4; ++i) {
    if (i) out += '|';
    for (std::size_t j = 0; j < blocks_[i].size(); ++j) {
      if (j) out += point_sep;
      out += std::to_string(blocks_[i][j]);
    }
  }
  return out;
}

std::vector<FCurve> enumerate_fcurves(int n) {
  if (n < 4) throw TooFewPoints(n);
  // Restricted-growth strings with exactly four classes: point 1 is always
  // in block 0, and each new label extends the current maximum by one.
  // This yields every partition once, blocks already ordered by smallest
  // element, in a fixed lexicographic order.
  std::vector<FCurve> out;
  std::vector<int> label(static_cast<std::size_t>(n), 0);
  auto rec = [&](auto&& self, int i, int max_label) -> void {
    if (i == n) {
      if (max_label == 3) {
        std::array<std::vector<int>, 4> blocks;
        for (int p = 0; p < n; ++p) blocks[static_cast<std::size_t>(label[p])].push_back(p + 1);
        out.emplace_back(n, std::move(blocks));
      }
      return;
    }
    const int remaining = n - i;
    for (int lab = 0; lab <= std::min(max_label + 1, 3); ++lab) {
      const int new_max = std::max(max_label, lab);
      if (new_max + (remaining - 1) < 3) continue;  // cannot reach 4 blocks
      label[static_cast<std::size_t>(i)] = lab;
      self(self, i + 1, new_max);
    }
  };
  rec(rec, 1, 0);
  return out;
}

int boundary_pairing(const FCurve& curve, const std::vector<int>& subset) {
  const int n = curve.n();
  std::uint64_t mask = 0;
  for (int p : subset) {
    if (p < 1 || p > n)
      throw InvalidBoundaryIndex("boundary point " + std::to_string(p) +
                                 " out of range for n = " + std::to_string(n));
    std::uint64_t bit = 1ULL << (p - 1);
    if (mask & bit)
      throw InvalidBoundaryIndex("boundary subset repeats point " + std::to_string(p));
    mask |= bit;
  }
  const std::uint64_t full = n == 64 ? ~0ULL : (1ULL << n) - 1;
  const std::size_t size = subset.size();
  if (size < 2 || size > static_cast<std::size_t>(n) - 2)
    throw InvalidBoundaryIndex("boundary subset size must be in [2, n-2]");
  const std::uint64_t comp = full & ~mask;

  for (std::uint64_t side : {mask, comp}) {
    for (int i = 0; i < 4; ++i)
      for (int j = i + 1; j < 4; ++j)
        if ((curve.block_mask(i) | curve.block_mask(j)) == side) return 1;
  }
  for (std::uint64_t side : {mask, comp}) {
    for (int i = 0; i < 4; ++i)
      if (curve.block_mask(i) == side && curve.block(i).size() >= 2) return -1;
  }
  return 0;
}

}  // namespace cblocks
