#pragma once

#include <string>
#include <vector>

// Self-check suites over all modules: every library invariant expressed as
// an executable check with a stable case id. The CLI exposes these; tests
// and the acceptance runner drive the same code.
namespace asm3::checks {

struct CheckResult {
  std::string suite;
  std::string case_id;
  bool passed = false;
  std::string detail;  // empty when passed; expected vs actual otherwise
};

// Size knobs. nu_max bounds the recurrence index nu (and derived orders);
// oracle_n_max bounds enumeration orders.
struct Bounds {
  unsigned nu_max = 10;
  unsigned oracle_n_max = 6;
};

// Suites, in canonical order (excluding the umbrella "all").
const std::vector<std::string>& suite_names();

// Runs one named suite, or every suite for "all". Results come back in a
// deterministic order. Throws std::invalid_argument for unknown names.
std::vector<CheckResult> run_suite(const std::string& suite, const Bounds& bounds);

}  // namespace asm3::checks
