#include "cblocks/linalg.hpp"

#include <cassert>

#include "cblocks/errors.hpp"

namespace cblocks {

// Fraction-free (Bareiss) elimination on the augmented matrix [A | b].
// Every intermediate division is exact by construction, so the whole
// reduction stays in integers; the back-substitution produces rationals.
std::vector<Rational> solve_exact(const std::vector<std::vector<Integer>>& a,
                                  const std::vector<Integer>& b) {
  const std::size_t rows = a.size();
  if (rows == 0 || b.size() != rows) throw Error("solve_exact: shape mismatch");
  const std::size_t cols = a[0].size();
  if (cols == 0 || cols > rows) throw SingularBasis();

  std::vector<std::vector<Integer>> m(rows, std::vector<Integer>(cols + 1));
  for (std::size_t i = 0; i < rows; ++i) {
    if (a[i].size() != cols) throw Error("solve_exact: ragged matrix");
    for (std::size_t j = 0; j < cols; ++j) m[i][j] = a[i][j];
    m[i][cols] = b[i];
  }

  Integer prev_pivot = 1;
  std::size_t rank = 0;
  for (std::size_t col = 0; col < cols; ++col) {
    std::size_t pivot_row = rank;
    while (pivot_row < rows && m[pivot_row][col] == 0) ++pivot_row;
    if (pivot_row == rows) break;  // dependent column
    std::swap(m[rank], m[pivot_row]);
    const Integer pivot = m[rank][col];
    for (std::size_t i = rank + 1; i < rows; ++i) {
      for (std::size_t j = col + 1; j <= cols; ++j) {
        Integer num = pivot * m[i][j] - m[i][col] * m[rank][j];
        assert(num % prev_pivot == 0);
        m[i][j] = num / prev_pivot;
      }
      m[i][col] = 0;
    }
    prev_pivot = pivot;
    ++rank;
  }

  if (rank < cols) throw SingularBasis();
  for (std::size_t i = rank; i < rows; ++i) {
    if (m[i][cols] != 0) throw InconsistentSystem();
  }

  std::vector<Rational> x(cols);
  for (std::size_t i = cols; i-- > 0;) {
    Rational acc(m[i][cols]);
    for (std::size_t j = i + 1; j < cols; ++j) acc -= Rational(m[i][j]) * x[j];
    x[i] = acc / Rational(m[i][i]);
  }
  return x;
}

}  // namespace cblocks
