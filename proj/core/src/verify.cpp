#include "asm3/verify.hpp"

#include <algorithm>
#include <cstdio>
#include <stdexcept>

#include "asm3/genfun.hpp"
#include "asm3/kernel.hpp"
#include "asm3/oracle.hpp"
#include "asm3/recurrences.hpp"

namespace asm3::checks {

namespace {

std::string pad(unsigned value, int width = 3) {
  char buf[16];
  std::snprintf(buf, sizeof(buf), "%0*u", width, value);
  return buf;
}

struct Recorder {
  std::string suite;
  std::vector<CheckResult>* out;

  void pass(std::string case_id) {
    out->push_back({suite, std::move(case_id), true, ""});
  }
  void fail(std::string case_id, std::string detail) {
    out->push_back({suite, std::move(case_id), false, std::move(detail)});
  }
  void record(std::string case_id, bool ok, std::string detail_on_fail) {
    if (ok) {
      pass(std::move(case_id));
    } else {
      fail(std::move(case_id), std::move(detail_on_fail));
    }
  }

  // Guards a single check against unexpected exceptions, reporting them as
  // failures instead of aborting the whole suite.
  template <class Fn>
  void guarded(std::string case_id, Fn&& fn) {
    try {
      fn(case_id);
    } catch (const std::exception& e) {
      fail(std::move(case_id), std::string("exception: ") + e.what());
    }
  }
};

std::string row_str(const RefinedRow& row) {
  std::string s = "[";
  for (std::size_t i = 0; i < row.counts.size(); ++i) {
    if (i) s += ", ";
    s += row.counts[i].str();
  }
  return s + "]";
}

std::string poly_diff(const Poly& got, const Poly& want) {
  return "expected " + want.str() + ", got " + got.str();
}

void oracle_suite(std::vector<CheckResult>& out, const Bounds& b) {
  using oracle::Mode;
  Recorder rec{"oracle", &out};
  const unsigned n_max = b.oracle_n_max;

  const unsigned bf_limit = std::min(n_max, oracle::kBruteForceMaxOrder);
  for (unsigned n = 1; n <= std::min(bf_limit, 6u); ++n) {
    for (unsigned x = 1; x <= 3; ++x) {
      rec.guarded("mode-agreement n=" + pad(n) + " x=" + std::to_string(x),
                  [&](const std::string& id) {
                    const RefinedRow bf = oracle::enumerate(n, x, Mode::bruteforce);
                    const RefinedRow dp = oracle::enumerate(n, x, Mode::dp);
                    rec.record(id, bf == dp,
                               "bruteforce " + row_str(bf) + " vs dp " + row_str(dp));
                  });
    }
  }

  static const long long classical[] = {1, 2, 7, 42, 429, 7436, 218348};
  for (unsigned n = 1; n <= bf_limit; ++n) {
    rec.guarded("classical-total n=" + pad(n), [&](const std::string& id) {
      const Int got = oracle::enumerate(n, 1, Mode::bruteforce).total;
      const Int want(classical[n - 1]);
      rec.record(id, got == want,
                 "expected " + want.str() + ", got " + got.str());
    });
  }

  const unsigned dp_limit = std::min(n_max, oracle::kDpMaxOrder);
  for (unsigned n = 2; n <= dp_limit; ++n) {
    for (unsigned x = 1; x <= 3; ++x) {
      rec.guarded("first-column n=" + pad(n) + " x=" + std::to_string(x),
                  [&](const std::string& id) {
                    const Int got = oracle::enumerate(n, x, Mode::dp).counts[0];
                    const Int want = oracle::enumerate(n - 1, x, Mode::dp).total;
                    rec.record(id, got == want,
                               "expected " + want.str() + ", got " + got.str());
                  });
    }
  }

  for (unsigned n = 1; n <= dp_limit; ++n) {
    for (unsigned x = 1; x <= 3; ++x) {
      rec.guarded("palindrome n=" + pad(n) + " x=" + std::to_string(x),
                  [&](const std::string& id) {
                    const RefinedRow row = oracle::enumerate(n, x, Mode::dp);
                    rec.record(id, row.palindromic(), "row " + row_str(row));
                  });
    }
  }

  for (unsigned n = 1; n <= dp_limit; ++n) {
    rec.guarded("refined-match n=" + pad(n), [&](const std::string& id) {
      const RefinedRow got = oracle::enumerate(n, 3, Mode::dp);
      const RefinedRow want = genfun::row(n);
      rec.record(id, got == want,
                 "oracle " + row_str(got) + " vs formula " + row_str(want));
    });
  }
}

void recurrence_suite(std::vector<CheckResult>& out, const Bounds& b) {
  Recorder rec{"recurrence", &out};

  for (int j = 1; j <= 2; ++j) {
    for (unsigned nu = 0; nu <= b.nu_max; ++nu) {
      rec.guarded("g-route-agreement j=" + std::to_string(j) + " nu=" + pad(nu),
                  [&](const std::string& id) {
                    const Poly a = recur::g_poly(j, nu, recur::GRoute::recurrence);
                    const Poly s = recur::g_poly(j, nu, recur::GRoute::substitution);
                    rec.record(id, a == s, poly_diff(s, a));
                  });
    }
  }

  for (int j = 1; j <= 2; ++j) {
    for (unsigned nu = 0; nu <= b.nu_max; ++nu) {
      rec.guarded("quotient-expansion j=" + std::to_string(j) + " nu=" + pad(nu),
                  [&](const std::string& id) {
                    const OddTrigPoly lhs =
                        expand_w_poly(recur::phi(j, nu), 2 * nu + 1);
                    const OddTrigPoly rhs = recur::f_trig(j, nu);
                    rec.record(id, lhs == rhs,
                               "expansion " + lhs.str() + " vs direct " + rhs.str());
                  });
    }
  }

  // 9 nu (nu+1) F_{nu+1} - 18 nu (2nu+1) cos6u F_nu
  //   - 4 (9nu^2 - j^2) sin^2(6u) F_{nu-1} == 0,
  // with sin^2(6u) g = (g - g cos12u) / 2.
  for (int j = 1; j <= 2; ++j) {
    for (unsigned nu = 1; nu + 1 <= b.nu_max; ++nu) {
      rec.guarded("frequency-recurrence j=" + std::to_string(j) + " nu=" + pad(nu),
                  [&](const std::string& id) {
                    const OddTrigPoly prev = recur::f_trig(j, nu - 1);
                    const OddTrigPoly curr = recur::f_trig(j, nu);
                    const OddTrigPoly next = recur::f_trig(j, nu + 1);
                    const Rat c1(9LL * nu * (nu + 1));
                    const Rat c2(18LL * nu * (2 * nu + 1));
                    const Rat c3(4 * (9LL * nu * nu - j * j));
                    const OddTrigPoly sin2_prev =
                        Rat(1, 2) * (prev - prev.mul_cos(12));
                    const OddTrigPoly residue =
                        c1 * next - c2 * curr.mul_cos(6) - c3 * sin2_prev;
                    rec.record(id, residue.is_zero(), "residue " + residue.str());
                  });
    }
  }

  for (unsigned nu = 1; nu <= b.nu_max; ++nu) {
    rec.guarded("totals-cross nu=" + pad(nu), [&](const std::string& id) {
      const Int lhs = 4 * recur::total_weight(2 * nu + 1) *
                      recur::total_weight(2 * nu - 1);
      const Int rhs = 9 * int_pow(recur::total_weight(2 * nu), 2);
      rec.record(id, lhs == rhs, lhs.str() + " != " + rhs.str());
    });
  }

  static const long long known_totals[] = {1, 2, 9, 90, 2025, 102060};
  for (unsigned n = 1; n <= 6; ++n) {
    rec.guarded("known-total n=" + pad(n), [&](const std::string& id) {
      const Int got = recur::total_weight(n);
      const Int want(known_totals[n - 1]);
      rec.record(id, got == want, "expected " + want.str() + ", got " + got.str());
    });
  }

  for (unsigned nu = 0; nu <= b.nu_max; ++nu) {
    rec.guarded("multiplier-c-pure-root3 nu=" + pad(nu),
                [&](const std::string& id) {
                  const Sqrt3Scalar c = recur::multiplier_c(nu);
                  rec.record(id, c.a == 0 && c.b != 0, "value " + c.str());
                });
  }
  for (unsigned nu = 1; nu <= b.nu_max; ++nu) {
    rec.guarded("multiplier-r-negative nu=" + pad(nu),
                [&](const std::string& id) {
                  const Rat r = recur::multiplier_r(nu);
                  rec.record(id, r < 0, "value " + rat_str(r));
                });
  }
}

void genfun_suite(std::vector<CheckResult>& out, const Bounds& b) {
  Recorder rec{"genfun", &out};
  const unsigned n_max = 2 * b.nu_max + 2;

  for (unsigned n = 1; n <= n_max; ++n) {
    rec.guarded("palindrome n=" + pad(n), [&](const std::string& id) {
      const RefinedRow row = genfun::row(n);
      rec.record(id, row.palindromic(), "row " + row_str(row));
    });
    rec.guarded("total n=" + pad(n), [&](const std::string& id) {
      const RefinedRow row = genfun::row(n);
      const Int want = recur::total_weight(n);
      rec.record(id, row.total == want,
                 "expected " + want.str() + ", got " + row.total.str());
    });
    if (n >= 2) {
      rec.guarded("first-entry n=" + pad(n), [&](const std::string& id) {
        const Int got = genfun::row(n).counts[0];
        const Int want = recur::total_weight(n - 1);
        rec.record(id, got == want,
                   "expected " + want.str() + ", got " + got.str());
      });
    }
    rec.guarded("normalized-sum n=" + pad(n), [&](const std::string& id) {
      Rat sum = 0;
      for (const Rat& c : genfun::normalized_coeffs(n)) sum += c;
      rec.record(id, sum == 1, "sum " + rat_str(sum));
    });
  }

  // 9 (t+1) A(2nu;3) G_{2nu+1} == 2 (1+2t)(2+t) A(2nu+1;3) G_{2nu}
  for (unsigned nu = 1; nu <= b.nu_max; ++nu) {
    rec.guarded("odd-even-transfer nu=" + pad(nu), [&](const std::string& id) {
      const Poly lhs = Rat(9 * recur::total_weight(2 * nu)) *
                       (Poly({1, 1}, 't') * genfun::gen_poly(2 * nu + 1));
      const Poly rhs = Rat(2 * recur::total_weight(2 * nu + 1)) *
                       (Poly({1, 2}, 't') * Poly({2, 1}, 't') *
                        genfun::gen_poly(2 * nu));
      rec.record(id, lhs == rhs, poly_diff(lhs, rhs));
    });
  }
}

void kernel_suite(std::vector<CheckResult>& out, const Bounds& b) {
  Recorder rec{"kernel", &out};
  const unsigned n_max = std::min(2 * b.nu_max + 2, 12u);

  for (unsigned n = 2; n <= n_max; ++n) {
    const OddTrigPoly closed =
        n % 2 == 0 ? kernel::f_even((n - 2) / 2) : kernel::f_odd((n - 1) / 2);

    rec.guarded("solve-matches-closed n=" + pad(n, 2), [&](const std::string& id) {
      const OddTrigPoly solved = kernel::solve(n);
      rec.record(id, solved == closed,
                 "solved " + solved.str() + " vs closed " + closed.str());
    });
    rec.guarded("top-frequency n=" + pad(n, 2), [&](const std::string& id) {
      rec.record(id, closed.max_frequency() == 3LL * n - 2,
                 "max frequency " + std::to_string(closed.max_frequency()));
    });
    rec.guarded("shift-sum n=" + pad(n, 2), [&](const std::string& id) {
      rec.record(id, kernel::satisfies_shift_sum(closed), "f " + closed.str());
    });
    rec.guarded("root-multiplicity n=" + pad(n, 2), [&](const std::string& id) {
      rec.record(id, kernel::has_root_multiplicity(closed, n), "f " + closed.str());
    });
    rec.guarded("constraints-annihilate n=" + pad(n, 2),
                [&](const std::string& id) {
                  const auto problem = kernel::KernelProblem::for_order(n);
                  const IntMatrix m = problem.constraint_matrix();
                  bool ok = true;
                  for (const auto& row : m) {
                    Rat acc = 0;
                    for (unsigned k = 0; k < problem.frequencies.size(); ++k) {
                      acc += Rat(row[k]) * closed.coeff(problem.frequencies[k]);
                    }
                    if (acc != 0) {
                      ok = false;
                      break;
                    }
                  }
                  rec.record(id, ok, "a constraint row does not annihilate f");
                });
    rec.guarded("reconstruct-match n=" + pad(n, 2), [&](const std::string& id) {
      const RefinedRow got = kernel::reconstruct_row(n);
      const RefinedRow want = genfun::row(n);
      rec.record(id, got == want,
                 "kernel " + row_str(got) + " vs formula " + row_str(want));
    });
    // For even n = 2nu+2 the kernel components split into two binomial
    // profiles: beta_{2a} tracks C(nu+1/3,a) C(nu-1/3,nu-a) and
    // beta_{2a+1} tracks C(nu-2/3,a) C(nu+2/3,nu-a), with the relative
    // constant between the two given by the alternating-power ratio.
    if (n % 2 == 0) {
      rec.guarded("beta-profiles n=" + pad(n, 2), [&](const std::string& id) {
        const unsigned nu = (n - 2) / 2;
        std::vector<Rat> beta(n);
        for (unsigned k = 0; k < n; ++k) {
          beta[k] = closed.coeff(4LL - 3LL * n + 6LL * k);
        }
        std::vector<Rat> even_profile(nu + 1);
        std::vector<Rat> odd_profile(nu + 1);
        for (unsigned a = 0; a <= nu; ++a) {
          even_profile[a] = binomial(Rat(3 * nu + 1, 3), a) *
                            binomial(Rat(3 * nu - 1, 3), nu - a);
          odd_profile[a] = binomial(Rat(3 * nu - 2, 3), a) *
                           binomial(Rat(3 * nu + 2, 3), nu - a);
        }
        bool ok = true;
        for (unsigned a = 0; a <= nu && ok; ++a) {
          ok = beta[2 * a] * even_profile[0] == beta[0] * even_profile[a] &&
               beta[2 * a + 1] * odd_profile[0] == beta[1] * odd_profile[a];
        }
        if (ok) {
          ok = beta[1] * even_profile[0] ==
               kernel::ratio_identity(nu) * beta[0] * odd_profile[0];
        }
        rec.record(id, ok, "kernel components leave the binomial profiles");
      });
    }
  }

  for (unsigned nu = 0; nu <= b.nu_max; ++nu) {
    rec.guarded("ladder nu=" + pad(nu), [&](const std::string& id) {
      const auto ratio = proportionality(kernel::f_even(nu).mul_cos3(),
                                         kernel::f_odd(nu + 1));
      rec.record(id, ratio.has_value() && *ratio != 0,
                 "cos3u ladder between consecutive closed forms broken");
    });
  }
}

void special_points_suite(std::vector<CheckResult>& out, const Bounds& b) {
  using recur::SpecialPoint;
  Recorder rec{"special-points", &out};
  const Rat minus_half(-1, 2);
  const Rat minus_one(-1);

  for (int j = 1; j <= 2; ++j) {
    for (unsigned nu = 0; nu <= b.nu_max; ++nu) {
      rec.guarded("closed-form@-1/2 j=" + std::to_string(j) + " nu=" + pad(nu),
                  [&](const std::string& id) {
                    const Rat got = recur::phi(j, nu).eval(minus_half);
                    const Rat want =
                        recur::phi_special(j, nu, SpecialPoint::minus_half);
                    rec.record(id, got == want,
                               "expected " + rat_str(want) + ", got " + rat_str(got));
                  });
      rec.guarded("closed-form@-1 j=" + std::to_string(j) + " nu=" + pad(nu),
                  [&](const std::string& id) {
                    const Rat got = recur::phi(j, nu).eval(minus_one);
                    const Rat want =
                        recur::phi_special(j, nu, SpecialPoint::minus_one);
                    rec.record(id, got == want,
                               "expected " + rat_str(want) + ", got " + rat_str(got));
                  });
    }
  }

  // 3 (nu+1) Phi_{nu+1}(-1/2) == 8 (2nu+1) Phi_nu(-1/2)
  for (int j = 1; j <= 2; ++j) {
    for (unsigned nu = 0; nu + 1 <= b.nu_max; ++nu) {
      rec.guarded("step@-1/2 j=" + std::to_string(j) + " nu=" + pad(nu),
                  [&](const std::string& id) {
                    const Rat lhs =
                        Rat(3 * (nu + 1)) * recur::phi(j, nu + 1).eval(minus_half);
                    const Rat rhs =
                        Rat(8 * (2 * nu + 1)) * recur::phi(j, nu).eval(minus_half);
                    rec.record(id, lhs == rhs,
                               rat_str(lhs) + " != " + rat_str(rhs));
                  });
    }
  }

  // nu (2nu+1) Phi_nu(-1) == 2 (9nu^2 - j^2) Phi_{nu-1}(-1)
  for (int j = 1; j <= 2; ++j) {
    for (unsigned nu = 1; nu <= b.nu_max; ++nu) {
      rec.guarded("step@-1 j=" + std::to_string(j) + " nu=" + pad(nu),
                  [&](const std::string& id) {
                    const Rat lhs =
                        Rat(nu * (2LL * nu + 1)) * recur::phi(j, nu).eval(minus_one);
                    const Rat rhs = Rat(2 * (9LL * nu * nu - j * j)) *
                                    recur::phi(j, nu - 1).eval(minus_one);
                    rec.record(id, lhs == rhs,
                               rat_str(lhs) + " != " + rat_str(rhs));
                  });
    }
  }
}

void ratio_identity_suite(std::vector<CheckResult>& out, const Bounds& b) {
  Recorder rec{"ratio-identity", &out};
  for (unsigned nu = 0; nu <= b.nu_max; ++nu) {
    rec.guarded("nu=" + pad(nu), [&](const std::string& id) {
      const Rat got = kernel::ratio_identity(nu);
      const Rat want(3 * nu + 1, 3 * nu + 2);
      rec.record(id, got == want,
                 "expected " + rat_str(want) + ", got " + rat_str(got));
    });
  }
}

}  // namespace

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names = {
      "oracle",         "recurrence", "genfun",
      "kernel",         "special-points", "ratio-identity"};
  return names;
}

std::vector<CheckResult> run_suite(const std::string& suite, const Bounds& bounds) {
  std::vector<CheckResult> out;
  const bool all = suite == "all";
  bool matched = false;
  auto want = [&](const char* name) {
    const bool m = all || suite == name;
    matched = matched || m;
    return m;
  };
  if (want("oracle")) oracle_suite(out, bounds);
  if (want("recurrence")) recurrence_suite(out, bounds);
  if (want("genfun")) genfun_suite(out, bounds);
  if (want("kernel")) kernel_suite(out, bounds);
  if (want("special-points")) special_points_suite(out, bounds);
  if (want("ratio-identity")) ratio_identity_suite(out, bounds);
  if (!matched) {
    throw std::invalid_argument("unknown suite: " + suite);
  }
  return out;
}

}  // namespace asm3::checks
