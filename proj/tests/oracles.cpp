#include "oracles.hpp"

#include <algorithm>
#include <stdexcept>

namespace oracles {

using cblocks::Integer;

namespace {

// classical sl2 Clebsch-Gordan: V_a ⊗ V_b ⊇ V_c iff |a−b| ≤ c ≤ a+b with
// matching parity
int classical_multiplicity(int a, int b, int c) {
  if (c < 0) return 0;
  if ((a + b + c) % 2 != 0) return 0;
  return (std::abs(a - b) <= c && c <= a + b) ? 1 : 0;
}

}  // namespace

int rank3_reflection(int a, int b, int c, int level) {
  return classical_multiplicity(a, b, c) -
         classical_multiplicity(a, b, 2 * level + 2 - c);
}

Integer rank_fold(const std::vector<int>& weights, int level) {
  // coefficient vector over the weight alphabet {0..ℓ}, folded left to
  // right; the vacuum coefficient of the full product is the rank
  std::vector<Integer> acc(static_cast<std::size_t>(level) + 1, 0);
  acc[0] = 1;
  for (int w : weights) {
    if (w < 0 || w > level) throw std::invalid_argument("weight out of range");
    std::vector<Integer> next(acc.size(), 0);
    for (int x = 0; x <= level; ++x) {
      if (acc[static_cast<std::size_t>(x)] == 0) continue;
      for (int y = 0; y <= level; ++y) {
        if (rank3_reflection(x, w, y, level) == 1)
          next[static_cast<std::size_t>(y)] += acc[static_cast<std::size_t>(x)];
      }
    }
    acc = std::move(next);
  }
  return acc[0];
}

std::vector<std::vector<int>> enumerate_odometer(int n, int max_entry) {
  std::vector<std::vector<int>> out;
  std::vector<int> tuple(static_cast<std::size_t>(n), 0);
  for (;;) {
    bool sorted = true;
    long long sum = 0;
    for (std::size_t i = 0; i < tuple.size(); ++i) {
      sum += tuple[i];
      if (i > 0 && tuple[i] > tuple[i - 1]) sorted = false;
    }
    if (sorted && sum % 2 == 0) out.push_back(tuple);
    std::size_t pos = tuple.size();
    while (pos > 0 && tuple[pos - 1] == max_entry) tuple[--pos] = 0;
    if (pos == 0) break;
    ++tuple[pos - 1];
  }
  std::sort(out.begin(), out.end());
  return out;
}

long long parity_signed_count(int n, int max_entry) {
  long long signed_count = 0;
  std::vector<int> tuple(static_cast<std::size_t>(n), 0);
  for (;;) {
    bool sorted = true;
    long long sum = 0;
    for (std::size_t i = 0; i < tuple.size(); ++i) {
      sum += tuple[i];
      if (i > 0 && tuple[i] > tuple[i - 1]) sorted = false;
    }
    if (sorted) signed_count += (sum % 2 == 0) ? 1 : -1;
    std::size_t pos = tuple.size();
    while (pos > 0 && tuple[pos - 1] == max_entry) tuple[--pos] = 0;
    if (pos == 0) break;
    ++tuple[pos - 1];
  }
  return signed_count;
}

Integer stirling2(int n, int k) {
  if (k < 0 || k > n) return 0;
  std::vector<std::vector<Integer>> table(static_cast<std::size_t>(n) + 1,
                                          std::vector<Integer>(static_cast<std::size_t>(k) + 1, 0));
  table[0][0] = 1;
  for (int i = 1; i <= n; ++i)
    for (int j = 1; j <= std::min(i, k); ++j)
      table[i][j] = table[i - 1][j - 1] + Integer(j) * table[i - 1][j];
  return table[static_cast<std::size_t>(n)][static_cast<std::size_t>(k)];
}

Integer deg4_sp_other_tie_branch(const std::vector<int>& sorted_desc, int level) {
  const int a = sorted_desc[0], b = sorted_desc[1], c = sorted_desc[2],
            d = sorted_desc[3];
  const int s = (a + b + c + d) / 2 - level;
  if (a > level + s) return 0;
  long long v;
  if (a + d > b + c) {  // ties now go the other way
    v = s > 0 ? static_cast<long long>(level + 1 - a) * (level + 2 * s - a)
              : static_cast<long long>(level + s + 1 - a) * (level + s - a);
  } else {
    v = s > 0 ? static_cast<long long>(1 + d - s) * (d + s)
              : static_cast<long long>(d) * (d + 1);
  }
  if (v < 0) return 0;
  if (v % 2 != 0) throw std::logic_error("odd numerator in tie-branch oracle");
  return Integer(v / 2);
}

}  // namespace oracles
