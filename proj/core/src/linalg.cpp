#include "asm3/linalg.hpp"

namespace asm3 {

std::vector<std::vector<Rat>> nullspace(IntMatrix m, std::size_t cols) {
  const std::size_t rows = m.size();
  for (const auto& row : m) {
    if (row.size() != cols) {
      throw std::invalid_argument("nullspace: ragged matrix");
    }
  }
  // Bareiss forward elimination with row pivoting: every intermediate entry
  // is a minor of the original matrix, so the division below is exact.
  std::vector<std::size_t> pivot_cols;
  Int prev = 1;
  std::size_t prow = 0;
  for (std::size_t col = 0; col < cols && prow < rows; ++col) {
    std::size_t sel = prow;
    while (sel < rows && m[sel][col] == 0) ++sel;
    if (sel == rows) continue;  // free column
    std::swap(m[sel], m[prow]);
    for (std::size_t r = prow + 1; r < rows; ++r) {
      for (std::size_t c = col + 1; c < cols; ++c) {
        Int num = m[r][c] * m[prow][col] - m[r][col] * m[prow][c];
        if (num % prev != 0) {
          throw std::logic_error("nullspace: inexact Bareiss division");
        }
        m[r][c] = num / prev;
      }
      m[r][col] = 0;
    }
    prev = m[prow][col];
    pivot_cols.push_back(col);
    ++prow;
  }

  std::vector<bool> is_pivot(cols, false);
  for (std::size_t c : pivot_cols) is_pivot[c] = true;

  std::vector<std::vector<Rat>> basis;
  for (std::size_t fc = 0; fc < cols; ++fc) {
    if (is_pivot[fc]) continue;
    std::vector<Rat> x(cols, Rat(0));
    x[fc] = 1;
    for (std::size_t r = pivot_cols.size(); r-- > 0;) {
      const std::size_t pc = pivot_cols[r];
      Rat acc = 0;
      for (std::size_t c = pc + 1; c < cols; ++c) {
        if (m[r][c] != 0 && x[c] != 0) acc += Rat(m[r][c]) * x[c];
      }
      x[pc] = -acc / Rat(m[r][pc]);
    }
    basis.push_back(std::move(x));
  }
  return basis;
}

}  // namespace asm3
