#include "asm3/oracle.hpp"

#include <cstdint>
#include <stdexcept>
#include <string>

#include "asm3/errors.hpp"

namespace asm3::oracle {

namespace {

// Recursive prefix walk over one row: at each column the entry may be 0;
// +1 needs column sum 0 and row prefix sum 0; -1 needs column sum 1 and
// row prefix sum 1. A finished row must end with prefix sum 1. Dead ends
// are pruned at the first violated partial-sum constraint.
struct BruteForce {
  unsigned n;
  Int x;
  std::vector<std::uint8_t> col;  // partial column sums, each 0 or 1
  std::vector<Int>* counts = nullptr;
  unsigned first_col = 0;

  void run(std::vector<Int>& out) {
    counts = &out;
    col.assign(n, 0);
    row_walk(0, 0, 0, 1);
  }

  void next_row(unsigned row, const Int& weight) {
    if (row + 1 == n) {
      (*counts)[first_col] += weight;
      return;
    }
    row_walk(row + 1, 0, 0, weight);
  }

  void row_walk(unsigned row, unsigned pos, unsigned prefix, const Int& weight) {
    if (pos == n) {
      if (prefix == 1) next_row(row, weight);
      return;
    }
    // entry 0
    row_walk(row, pos + 1, prefix, weight);
    if (col[pos] == 0 && prefix == 0) {
      // entry +1
      if (row == 0) first_col = pos;
      col[pos] = 1;
      row_walk(row, pos + 1, 1, weight);
      col[pos] = 0;
    } else if (col[pos] == 1 && prefix == 1) {
      // entry -1, charged one factor of x
      col[pos] = 0;
      row_walk(row, pos + 1, 0, weight * x);
      col[pos] = 1;
    }
  }
};

// Cell-by-cell transfer over states (column-sum bitmask, row prefix sum).
// Runs once per first-row column r.
Int dp_count(unsigned n, const Int& x, unsigned r) {
  const std::size_t states = std::size_t(1) << n;
  // index = mask * 2 + prefix
  std::vector<Int> cur(states * 2, Int(0));
  std::vector<Int> next(states * 2, Int(0));
  cur[(std::size_t(1) << (r - 1)) * 2] = 1;  // first row done, prefix reset
  for (unsigned row = 1; row < n; ++row) {
    for (unsigned pos = 0; pos < n; ++pos) {
      for (Int& v : next) v = 0;
      const std::size_t bit = std::size_t(1) << pos;
      for (std::size_t mask = 0; mask < states; ++mask) {
        for (unsigned prefix = 0; prefix < 2; ++prefix) {
          const Int& w = cur[mask * 2 + prefix];
          if (w == 0) continue;
          next[mask * 2 + prefix] += w;  // entry 0
          if (prefix == 0 && (mask & bit) == 0) {
            next[(mask | bit) * 2 + 1] += w;  // entry +1
          } else if (prefix == 1 && (mask & bit) != 0) {
            next[(mask & ~bit) * 2] += w * x;  // entry -1
          }
        }
      }
      cur.swap(next);
    }
    // row must close with prefix sum 1; reset the prefix for the next row
    for (std::size_t mask = 0; mask < states; ++mask) {
      cur[mask * 2] = cur[mask * 2 + 1];
      cur[mask * 2 + 1] = 0;
    }
  }
  return cur[(states - 1) * 2];
}

}  // namespace

RefinedRow enumerate(unsigned n, unsigned x, Mode mode) {
  if (n == 0) throw std::invalid_argument("enumerate: order must be >= 1");
  if (x == 0) throw std::invalid_argument("enumerate: weight must be >= 1");
  RefinedRow row;
  row.n = n;
  row.counts.assign(n, Int(0));
  if (mode == Mode::bruteforce) {
    if (n > kBruteForceMaxOrder) {
      throw OrderTooLarge("brute force supports orders up to " +
                          std::to_string(kBruteForceMaxOrder));
    }
    BruteForce bf{n, Int(x), {}, nullptr, 0};
    bf.run(row.counts);
  } else {
    if (n > kDpMaxOrder) {
      throw OrderTooLarge("dp oracle supports orders up to " +
                          std::to_string(kDpMaxOrder));
    }
    for (unsigned r = 1; r <= n; ++r) {
      row.counts[r - 1] = dp_count(n, Int(x), r);
    }
  }
  for (const Int& c : row.counts) row.total += c;
  return row;
}

unsigned count_minus_ones(const std::vector<std::vector<int>>& grid) {
  const std::size_t n = grid.size();
  if (n == 0) throw NotAnASM("empty grid");
  for (const auto& row : grid) {
    if (row.size() != n) throw NotAnASM("grid is not square");
  }
  unsigned minus = 0;
  for (std::size_t i = 0; i < n; ++i) {
    int row_sum = 0;
    int col_sum = 0;
    for (std::size_t j = 0; j < n; ++j) {
      const int e = grid[i][j];
      if (e < -1 || e > 1) throw NotAnASM("entry outside {-1, 0, 1}");
      if (e == -1) ++minus;
      row_sum += e;
      if (row_sum < 0 || row_sum > 1) throw NotAnASM("row partial sums leave {0, 1}");
      col_sum += grid[j][i];
      if (col_sum < 0 || col_sum > 1) throw NotAnASM("column partial sums leave {0, 1}");
    }
    if (row_sum != 1) throw NotAnASM("row sum is not 1");
    if (col_sum != 1) throw NotAnASM("column sum is not 1");
  }
  return minus;
}

}  // namespace asm3::oracle
