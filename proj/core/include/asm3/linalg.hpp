#pragma once

#include <stdexcept>
#include <vector>

#include "asm3/numbers.hpp"

namespace asm3 {

using IntMatrix = std::vector<std::vector<Int>>;

// Basis of the right kernel of an integer matrix, one vector per free
// column. Forward elimination is fraction-free (Bareiss), so intermediate
// entries stay integers; back substitution produces rational vectors.
std::vector<std::vector<Rat>> nullspace(IntMatrix m, std::size_t cols);

// Unique solution of a consistent, full-column-rank system a * x = rhs over
// a field. F needs +, -, *, /, default construction to zero and ==.
// Throws std::logic_error when the system is rank deficient or inconsistent.
template <class F>
std::vector<F> solve_unique(std::vector<std::vector<F>> a, std::vector<F> rhs) {
  const std::size_t rows = a.size();
  if (rhs.size() != rows) {
    throw std::invalid_argument("solve_unique: rhs size mismatch");
  }
  const std::size_t cols = rows == 0 ? 0 : a[0].size();
  const F zero{};
  std::size_t pivot_row = 0;
  std::vector<std::size_t> pivot_of_col(cols);
  for (std::size_t col = 0; col < cols && pivot_row < rows; ++col) {
    std::size_t sel = pivot_row;
    while (sel < rows && a[sel][col] == zero) ++sel;
    if (sel == rows) {
      throw std::logic_error("solve_unique: rank-deficient system");
    }
    std::swap(a[sel], a[pivot_row]);
    std::swap(rhs[sel], rhs[pivot_row]);
    const F inv_piv = a[pivot_row][col];
    for (std::size_t r = pivot_row + 1; r < rows; ++r) {
      if (a[r][col] == zero) continue;
      const F factor = a[r][col] / inv_piv;
      for (std::size_t c = col; c < cols; ++c) {
        a[r][c] = a[r][c] - factor * a[pivot_row][c];
      }
      rhs[r] = rhs[r] - factor * rhs[pivot_row];
    }
    pivot_of_col[col] = pivot_row;
    ++pivot_row;
  }
  if (pivot_row < cols) {
    throw std::logic_error("solve_unique: rank-deficient system");
  }
  for (std::size_t r = pivot_row; r < rows; ++r) {
    if (!(rhs[r] == zero)) {
      throw std::logic_error("solve_unique: inconsistent system");
    }
  }
  std::vector<F> x(cols, zero);
  for (std::size_t col = cols; col-- > 0;) {
    const std::size_t r = pivot_of_col[col];
    F acc = rhs[r];
    for (std::size_t c = col + 1; c < cols; ++c) {
      acc = acc - a[r][c] * x[c];
    }
    x[col] = acc / a[r][col];
  }
  return x;
}

}  // namespace asm3
