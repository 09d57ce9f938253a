#pragma once

#include <vector>

#include "asm3/numbers.hpp"

namespace asm3 {

// One row of the refined weighted enumeration: counts[r-1] is the total
// weight of order-n alternating sign matrices whose first-row 1 sits in
// column r. total is the sum over r.
struct RefinedRow {
  unsigned n = 0;
  std::vector<Int> counts;
  Int total = 0;

  bool operator==(const RefinedRow&) const = default;

  // counts[r-1] == counts[n-r]: mirroring an ASM left-right fixes the
  // number of -1 entries and reflects the first-row position.
  bool palindromic() const {
    for (std::size_t i = 0, j = counts.size(); i < j; ++i, --j) {
      if (counts[i] != counts[j - 1]) return false;
    }
    return true;
  }
};

}  // namespace asm3
