#pragma once

#include <vector>

#include "asm3/refined_row.hpp"

// Ground truth by enumeration: weighted counts of actual alternating sign
// matrices, refined by the column of the first row's 1, with weight
// x^(number of -1 entries). Validates every formula route at small orders.
namespace asm3::oracle {

enum class Mode { bruteforce, dp };

inline constexpr unsigned kBruteForceMaxOrder = 7;
inline constexpr unsigned kDpMaxOrder = 16;

// counts[r-1] = sum over ASMs with first-row 1 in column r of x^(#(-1)).
// bruteforce walks complete matrices; dp folds rows over partial column
// sums, once per r. Throws OrderTooLarge beyond the mode's limit.
RefinedRow enumerate(unsigned n, unsigned x, Mode mode);

// Number of -1 entries; throws NotAnASM unless the grid is a square
// alternating sign matrix.
unsigned count_minus_ones(const std::vector<std::vector<int>>& grid);

}  // namespace asm3::oracle
