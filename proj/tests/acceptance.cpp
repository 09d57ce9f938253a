// End-to-end gate: every cross-route identity the library promises, checked
// exactly, one verdict line per criterion. Exits nonzero when any fails.

#include <chrono>
#include <cstdio>
#include <exception>
#include <string>

#include "asm3/genfun.hpp"
#include "asm3/kernel.hpp"
#include "asm3/oracle.hpp"
#include "asm3/polynomial.hpp"
#include "asm3/recurrences.hpp"
#include "asm3/trig.hpp"

namespace {

using asm3::Int;
using asm3::OddTrigPoly;
using asm3::Poly;
using asm3::Rat;
using asm3::RefinedRow;
using Clock = std::chrono::steady_clock;

int failures = 0;

void report(const char* name, bool ok, const std::string& detail = "") {
  std::printf("%s %s%s%s\n", ok ? "PASS" : "FAIL", name,
              detail.empty() ? "" : ": ", detail.c_str());
  std::fflush(stdout);
  if (!ok) ++failures;
}

double seconds_since(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

std::string timing(double elapsed) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.1fs", elapsed);
  return buf;
}

// n = 1..7: closed route, constraint-solve route, and walked enumeration
// agree entry by entry at weight 3.
void three_route_agreement() {
  const auto start = Clock::now();
  bool ok = true;
  std::string detail;
  for (unsigned n = 1; n <= 7 && ok; ++n) {
    const RefinedRow formula = asm3::genfun::row(n);
    const RefinedRow walked =
        asm3::oracle::enumerate(n, 3, asm3::oracle::Mode::bruteforce);
    if (!(formula == walked)) {
      ok = false;
      detail = "formula vs enumeration mismatch at n=" + std::to_string(n);
      break;
    }
    if (n >= 2 && !(asm3::kernel::reconstruct_row(n) == formula)) {
      ok = false;
      detail = "constraint route mismatch at n=" + std::to_string(n);
    }
  }
  const double elapsed = seconds_since(start);
  if (ok && elapsed >= 120.0) {
    ok = false;
    detail = "exceeded 120s budget, took " + timing(elapsed);
  }
  if (ok) detail = timing(elapsed);
  report("three-route-rows-n1-7", ok, detail);
}

// n = 8..12: closed route equals the transfer-style enumeration.
void formula_vs_dp() {
  const auto start = Clock::now();
  bool ok = true;
  std::string detail;
  for (unsigned n = 8; n <= 12; ++n) {
    if (!(asm3::genfun::row(n) ==
          asm3::oracle::enumerate(n, 3, asm3::oracle::Mode::dp))) {
      ok = false;
      detail = "mismatch at n=" + std::to_string(n);
      break;
    }
  }
  const double elapsed = seconds_since(start);
  if (ok && elapsed >= 300.0) {
    ok = false;
    detail = "exceeded 300s budget, took " + timing(elapsed);
  }
  if (ok) detail = timing(elapsed);
  report("formula-vs-dp-rows-n8-12", ok, detail);
}

// Totals 1..6 frozen; consecutive ratios follow the two parity product
// formulas up to n = 40; odd neighbors determine the even square.
void totals_and_ratios() {
  bool ok = true;
  std::string detail;
  const Int frozen[] = {1, 2, 9, 90, 2025, 102060};
  for (unsigned n = 1; n <= 6; ++n) {
    if (asm3::recur::total_weight(n) != frozen[n - 1]) {
      ok = false;
      detail = "frozen total mismatch at n=" + std::to_string(n);
    }
  }
  for (unsigned n = 2; n <= 40 && ok; ++n) {
    Int num;
    Int den;
    if (n % 2 == 0) {
      const unsigned nu = (n - 2) / 2;
      num = asm3::int_pow(Int(3), nu) * asm3::factorial(nu) *
            asm3::factorial(3 * nu + 2);
      den = asm3::factorial(2 * nu + 1) * asm3::factorial(2 * nu + 1);
    } else {
      const unsigned nu = (n - 1) / 2;
      num = asm3::int_pow(Int(3), nu) * asm3::factorial(nu) *
            asm3::factorial(3 * nu);
      den = asm3::factorial(2 * nu) * asm3::factorial(2 * nu);
    }
    if (asm3::recur::total_weight(n) * den !=
        asm3::recur::total_weight(n - 1) * num) {
      ok = false;
      detail = "ratio mismatch at n=" + std::to_string(n);
    }
  }
  for (unsigned nu = 1; 2 * nu + 1 <= 40 && ok; ++nu) {
    const Int even = asm3::recur::total_weight(2 * nu);
    if (4 * asm3::recur::total_weight(2 * nu + 1) *
            asm3::recur::total_weight(2 * nu - 1) !=
        9 * even * even) {
      ok = false;
      detail = "odd-product identity fails at nu=" + std::to_string(nu);
    }
  }
  report("totals-and-consecutive-ratios-n40", ok, detail);
}

// 9(t+1) A(2v) G_{2v+1} == 2(1+2t)(2+t) A(2v+1) G_{2v} for v = 1..25.
void odd_even_transfer() {
  bool ok = true;
  std::string detail;
  const Poly t1({Rat(1), Rat(1)}, 't');
  const Poly transfer =
      Poly({Rat(1), Rat(2)}, 't') * Poly({Rat(2), Rat(1)}, 't');
  for (unsigned nu = 1; nu <= 25 && ok; ++nu) {
    const Poly lhs = Rat(9) * Rat(asm3::recur::total_weight(2 * nu)) * t1 *
                     asm3::genfun::gen_poly(2 * nu + 1);
    const Poly rhs = Rat(2) * Rat(asm3::recur::total_weight(2 * nu + 1)) *
                     transfer * asm3::genfun::gen_poly(2 * nu);
    if (!(lhs == rhs)) {
      ok = false;
      detail = "transfer identity fails at nu=" + std::to_string(nu);
    }
  }
  report("odd-even-transfer-nu25", ok, detail);
}

// Both construction routes for the g blocks agree through nu = 30.
void g_route_agreement() {
  bool ok = true;
  std::string detail;
  for (int j = 1; j <= 2 && ok; ++j) {
    for (unsigned nu = 0; nu <= 30; ++nu) {
      if (!(asm3::recur::g_poly(j, nu, asm3::recur::GRoute::recurrence) ==
            asm3::recur::g_poly(j, nu, asm3::recur::GRoute::substitution))) {
        ok = false;
        detail = "routes differ at j=" + std::to_string(j) +
                 " nu=" + std::to_string(nu);
        break;
      }
    }
  }
  report("g-block-route-agreement-nu30", ok, detail);
}

// Expanding sin(2u)^(2nu+1) Phi(cos 2u) reproduces the binomial sine sum
// through nu = 20.
void quotient_expansion() {
  bool ok = true;
  std::string detail;
  for (int j = 1; j <= 2 && ok; ++j) {
    for (unsigned nu = 0; nu <= 20; ++nu) {
      if (!(asm3::expand_w_poly(asm3::recur::phi(j, nu), 2 * nu + 1) ==
            asm3::recur::f_trig(j, nu))) {
        ok = false;
        detail = "expansion differs at j=" + std::to_string(j) +
                 " nu=" + std::to_string(nu);
        break;
      }
    }
  }
  report("quotient-expansion-nu20", ok, detail);
}

// For n = 2..12 the constraint system has a one-dimensional kernel spanning
// the closed form, with the right top frequency and both structural checks.
void kernel_structure() {
  bool ok = true;
  std::string detail;
  for (unsigned n = 2; n <= 12 && ok; ++n) {
    try {
      const OddTrigPoly f = asm3::kernel::solve(n);
      const OddTrigPoly closed = n % 2 == 0
                                     ? asm3::kernel::f_even((n - 2) / 2)
                                     : asm3::kernel::f_odd((n - 1) / 2);
      if (!(f == closed)) {
        ok = false;
        detail = "kernel vector differs from closed form at n=" +
                 std::to_string(n);
      } else if (f.max_frequency() != 3 * static_cast<long long>(n) - 2) {
        ok = false;
        detail = "top frequency wrong at n=" + std::to_string(n);
      } else if (!asm3::kernel::satisfies_shift_sum(f)) {
        ok = false;
        detail = "shift sum fails at n=" + std::to_string(n);
      } else if (!asm3::kernel::has_root_multiplicity(f, n)) {
        ok = false;
        detail = "root multiplicity fails at n=" + std::to_string(n);
      }
    } catch (const std::exception& e) {
      ok = false;
      detail = std::string("n=") + std::to_string(n) + ": " + e.what();
    }
  }
  report("kernel-solve-structure-n2-12", ok, detail);
}

// The alternating binomial-power ratio simplifies to (3nu+1)/(3nu+2)
// through nu = 50.
void ratio_identity_sweep() {
  const auto start = Clock::now();
  bool ok = true;
  std::string detail;
  for (unsigned nu = 0; nu <= 50; ++nu) {
    if (asm3::kernel::ratio_identity(nu) != Rat(3 * nu + 1, 3 * nu + 2)) {
      ok = false;
      detail = "ratio differs at nu=" + std::to_string(nu);
      break;
    }
  }
  const double elapsed = seconds_since(start);
  if (ok && elapsed >= 60.0) {
    ok = false;
    detail = "exceeded 60s budget, took " + timing(elapsed);
  }
  if (ok) detail = timing(elapsed);
  report("binomial-ratio-nu50", ok, detail);
}

// Evaluations at w = -1/2 and w = -1 match their closed forms for nu <= 30,
// and the one-step reductions at both points hold.
void special_points() {
  bool ok = true;
  std::string detail;
  using SP = asm3::recur::SpecialPoint;
  for (int j = 1; j <= 2 && ok; ++j) {
    for (unsigned nu = 0; nu <= 30; ++nu) {
      const Poly p = asm3::recur::phi(j, nu);
      if (p.eval(Rat(-1, 2)) !=
              asm3::recur::phi_special(j, nu, SP::minus_half) ||
          p.eval(Rat(-1)) != asm3::recur::phi_special(j, nu, SP::minus_one)) {
        ok = false;
        detail = "closed value differs at j=" + std::to_string(j) +
                 " nu=" + std::to_string(nu);
        break;
      }
    }
  }
  for (int j = 1; j <= 2 && ok; ++j) {
    for (unsigned nu = 0; nu + 1 <= 30; ++nu) {
      const Rat lhs = Rat(3 * (nu + 1)) *
                      asm3::recur::phi_special(j, nu + 1, SP::minus_half);
      const Rat rhs = Rat(8 * (2 * nu + 1)) *
                      asm3::recur::phi_special(j, nu, SP::minus_half);
      if (lhs != rhs) {
        ok = false;
        detail = "half-point step fails at j=" + std::to_string(j) +
                 " nu=" + std::to_string(nu);
        break;
      }
    }
    for (unsigned nu = 1; nu <= 30 && ok; ++nu) {
      const Rat lhs = Rat(nu * (2 * nu + 1)) *
                      asm3::recur::phi_special(j, nu, SP::minus_one);
      const Rat rhs = Rat(2 * (9 * nu * nu - j * j)) *
                      asm3::recur::phi_special(j, nu - 1, SP::minus_one);
      if (lhs != rhs) {
        ok = false;
        detail = "end-point step fails at j=" + std::to_string(j) +
                 " nu=" + std::to_string(nu);
      }
    }
  }
  report("special-point-values-nu30", ok, detail);
}

// Every row through n = 40 is palindromic, sums to the total, and opens
// with the previous total.
void row_structure() {
  bool ok = true;
  std::string detail;
  for (unsigned n = 1; n <= 40 && ok; ++n) {
    const RefinedRow row = asm3::genfun::row(n);
    Int sum = 0;
    for (const Int& c : row.counts) sum += c;
    if (!row.palindromic()) {
      ok = false;
      detail = "not palindromic at n=" + std::to_string(n);
    } else if (sum != asm3::recur::total_weight(n) || sum != row.total) {
      ok = false;
      detail = "total mismatch at n=" + std::to_string(n);
    } else if (n >= 2 &&
               row.counts.front() != asm3::recur::total_weight(n - 1)) {
      ok = false;
      detail = "first entry mismatch at n=" + std::to_string(n);
    }
  }
  report("row-structure-n40", ok, detail);
}

}  // namespace

int main() {
  three_route_agreement();
  formula_vs_dp();
  totals_and_ratios();
  odd_even_transfer();
  g_route_agreement();
  quotient_expansion();
  kernel_structure();
  ratio_identity_sweep();
  special_points();
  row_structure();
  std::printf("%s: %d of 10 criteria failed\n",
              failures == 0 ? "OK" : "FAILED", failures);
  return failures == 0 ? 0 : 1;
}
