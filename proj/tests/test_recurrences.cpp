#include <doctest.h>

#include "asm3/recurrences.hpp"

using asm3::Int;
using asm3::OddTrigPoly;
using asm3::Poly;
using asm3::Rat;
using asm3::Sqrt3Scalar;
namespace recur = asm3::recur;

TEST_CASE("quotient family initial polynomials") {
  CHECK(recur::phi(1, 0) == Poly({Rat(1)}));
  CHECK(recur::phi(1, 1) == Poly({Rat(0), Rat(-16, 3)}));
  CHECK(recur::phi(2, 0) == Poly({Rat(0), Rat(2)}));
  CHECK(recur::phi(2, 1) == Poly({Rat(-4, 3), Rat(0), Rat(-16, 3)}));
  CHECK(recur::phi(1, 2) == Poly({Rat(16, 9), Rat(0), Rat(320, 9)}));
}

TEST_CASE("quotient family satisfies its three-term recurrence") {
  const Poly one_minus_w2({Rat(1), Rat(0), Rat(-1)}, 'w');
  const Poly w_cubic({Rat(0), Rat(3), Rat(0), Rat(-4)}, 'w');
  const Poly quartic = Poly({Rat(1), Rat(0), Rat(-4)}, 'w').pow(2);
  for (int j = 1; j <= 2; ++j) {
    for (unsigned nu = 1; nu <= 8; ++nu) {
      const Poly residue =
          Rat(9 * nu * (nu + 1)) * one_minus_w2 * recur::phi(j, nu + 1) +
          Rat(18 * nu * (2 * nu + 1)) * w_cubic * recur::phi(j, nu) -
          Rat(4 * (9 * nu * nu - j * j)) * quartic * recur::phi(j, nu - 1);
      CHECK(residue.is_zero());
    }
  }
}

TEST_CASE("binomial sine sums at small index") {
  CHECK(recur::f_trig(1, 0) == OddTrigPoly({{2, Rat(1)}}));
  CHECK(recur::f_trig(2, 0) == OddTrigPoly({{4, Rat(1)}}));
  const OddTrigPoly f11({{4, Rat(-4, 3)}, {8, Rat(2, 3)}});
  CHECK(recur::f_trig(1, 1) == f11);
  const OddTrigPoly f21({{2, Rat(-5, 3)}, {10, Rat(1, 3)}});
  CHECK(recur::f_trig(2, 1) == f21);
}

TEST_CASE("sine sums match the expanded quotient") {
  for (int j = 1; j <= 2; ++j) {
    for (unsigned nu = 0; nu <= 4; ++nu) {
      CHECK(asm3::expand_w_poly(recur::phi(j, nu), 2 * nu + 1) ==
            recur::f_trig(j, nu));
    }
  }
}

TEST_CASE("sine sums satisfy the frequency-shift recurrence") {
  for (int j = 1; j <= 2; ++j) {
    for (unsigned nu = 1; nu <= 15; ++nu) {
      const OddTrigPoly prev = recur::f_trig(j, nu - 1);
      const OddTrigPoly curr = recur::f_trig(j, nu);
      const OddTrigPoly next = recur::f_trig(j, nu + 1);
      // sin^2(6u) g = (g - g cos 12u) / 2
      const OddTrigPoly sin2_prev = Rat(1, 2) * (prev - prev.mul_cos(12));
      const OddTrigPoly residue = Rat(9LL * nu * (nu + 1)) * next -
                                  Rat(18LL * nu * (2 * nu + 1)) * curr.mul_cos(6) -
                                  Rat(4 * (9LL * nu * nu - j * j)) * sin2_prev;
      CHECK(residue.is_zero());
    }
  }
}

TEST_CASE("generating blocks initial polynomials") {
  const auto route = recur::GRoute::recurrence;
  CHECK(recur::g_poly(1, 0, route) == Poly({Rat(1, 3), Rat(1, 3), Rat(1, 3)}));
  CHECK(recur::g_poly(2, 0, route) ==
        Poly({Rat(-1, 3), Rat(-4, 3), Rat(-1, 3)}));
  CHECK(recur::g_poly(1, 1, route) ==
        Poly({Rat(2, 9), Rat(10, 9), Rat(4, 3), Rat(10, 9), Rat(2, 9)}));
}

TEST_CASE("both block routes agree") {
  for (int j = 1; j <= 2; ++j) {
    for (unsigned nu = 0; nu <= 6; ++nu) {
      CHECK(recur::g_poly(j, nu, recur::GRoute::recurrence) ==
            recur::g_poly(j, nu, recur::GRoute::substitution));
    }
  }
}

TEST_CASE("total weighted counts") {
  const Int expected[] = {1, 2, 9, 90, 2025, 102060};
  for (unsigned n = 1; n <= 6; ++n) {
    CHECK(recur::total_weight(n) == expected[n - 1]);
  }
}

TEST_CASE("consecutive total ratios follow the two parity formulas") {
  for (unsigned nu = 1; nu <= 8; ++nu) {
    const Int even_num = asm3::int_pow(Int(3), nu) * asm3::factorial(nu) *
                         asm3::factorial(3 * nu + 2);
    const Int even_den =
        asm3::factorial(2 * nu + 1) * asm3::factorial(2 * nu + 1);
    CHECK(recur::total_weight(2 * nu + 2) * even_den ==
          recur::total_weight(2 * nu + 1) * even_num);
    const Int odd_num = asm3::int_pow(Int(3), nu) * asm3::factorial(nu) *
                        asm3::factorial(3 * nu);
    const Int odd_den = asm3::factorial(2 * nu) * asm3::factorial(2 * nu);
    CHECK(recur::total_weight(2 * nu + 1) * odd_den ==
          recur::total_weight(2 * nu) * odd_num);
  }
}

TEST_CASE("odd squares against even neighbors") {
  for (unsigned nu = 1; nu <= 20; ++nu) {
    const Int sq = recur::total_weight(2 * nu) * recur::total_weight(2 * nu);
    CHECK(4 * recur::total_weight(2 * nu + 1) *
              recur::total_weight(2 * nu - 1) ==
          9 * sq);
  }
}

TEST_CASE("closed evaluations at the two special points") {
  CHECK(recur::phi_special(1, 2, recur::SpecialPoint::minus_half) ==
        Rat(32, 3));
  CHECK(recur::phi_special(2, 2, recur::SpecialPoint::minus_half) ==
        -Rat(32, 3));
  CHECK(recur::phi_special(1, 2, recur::SpecialPoint::minus_one) ==
        Rat(112, 3));
  CHECK(recur::phi_special(2, 2, recur::SpecialPoint::minus_one) ==
        -Rat(128, 3));
  for (int j = 1; j <= 2; ++j) {
    for (unsigned nu = 0; nu <= 8; ++nu) {
      const Poly p = recur::phi(j, nu);
      CHECK(p.eval(Rat(-1, 2)) ==
            recur::phi_special(j, nu, recur::SpecialPoint::minus_half));
      CHECK(p.eval(Rat(-1)) ==
            recur::phi_special(j, nu, recur::SpecialPoint::minus_one));
    }
  }
}

TEST_CASE("scale multipliers") {
  CHECK(recur::multiplier_c(0) == Sqrt3Scalar(Rat(0), Rat(1, 4)));
  CHECK(recur::multiplier_c(1) == Sqrt3Scalar(Rat(0), Rat(27, 128)));
  CHECK(recur::multiplier_r(1) == Rat(-3, 2));
  CHECK(recur::multiplier_r(2) == Rat(-15, 2));
  CHECK_THROWS_AS(recur::multiplier_r(0), std::invalid_argument);
  for (unsigned nu = 0; nu <= 10; ++nu) {
    const Sqrt3Scalar c = recur::multiplier_c(nu);
    CHECK(c.a == 0);
    CHECK(c.b != 0);
  }
  for (unsigned nu = 1; nu <= 10; ++nu) CHECK(recur::multiplier_r(nu) < 0);
}

TEST_CASE("family index is validated") {
  CHECK_THROWS_AS(recur::phi(0, 1), std::invalid_argument);
  CHECK_THROWS_AS(recur::phi(3, 1), std::invalid_argument);
  CHECK_THROWS_AS(recur::f_trig(0, 1), std::invalid_argument);
  CHECK_THROWS_AS(recur::g_poly(3, 1, recur::GRoute::recurrence),
                  std::invalid_argument);
}
