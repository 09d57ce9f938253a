#pragma once

#include <vector>

#include "asm3/linalg.hpp"
#include "asm3/refined_row.hpp"
#include "asm3/trig.hpp"

// The constraint route to the partition function: the odd trig polynomial
// f_n of degree 3n-2 with no frequency divisible by 3, whose derivatives of
// orders 0..n-1 vanish at u=0 and orders 0..n-2 vanish at u=pi/2. That
// space is one-dimensional; this module builds it by closed binomial
// formulas and independently by an exact nullspace computation, and turns
// it back into refined counts.
namespace asm3::kernel {

// The linear-constraint description for order n.
struct KernelProblem {
  unsigned n = 0;
  std::vector<long long> frequencies;  // 4 - 3n + 6k, k = 0..n-1
  unsigned orders_at_zero = 0;         // derivative orders 0..n-1
  unsigned orders_at_half_pi = 0;      // derivative orders 0..n-2

  static KernelProblem for_order(unsigned n);

  // (2n-1) x n integer matrix; row (point, order m), column k holds the
  // exact m-th derivative of sin(frequency_k * u) at the point.
  IntMatrix constraint_matrix() const;
};

// Closed form of f_{2nu+2} (even order n = 2nu+2), bracket constant 1:
// (3nu+2) F1_nu - (3nu+1) F2_nu in the binomial-sum normalization.
OddTrigPoly f_even(unsigned nu);

// Closed form of f_{2nu+1} up to scale (odd order n = 2nu+1, nu >= 1).
OddTrigPoly f_odd(unsigned nu);

// Kernel vector of the constraint system for n >= 2, computed by exact
// nullspace extraction and scale-normalized against the closed form at the
// top frequency 3n-2. Throws KernelDimensionError unless the nullspace is
// exactly one-dimensional.
OddTrigPoly solve(unsigned n);

// True iff f(u) + f(u + 2pi/3) + f(u + 4pi/3) == 0, which for a pure sine
// series holds exactly when no stored frequency is divisible by 3.
bool satisfies_shift_sum(const OddTrigPoly& f);

// True iff sin^n u cos^(n-1) u divides f: derivatives of orders 0..n-1
// vanish at u=0 and orders 0..n-2 vanish at u=pi/2.
bool has_root_multiplicity(const OddTrigPoly& f, unsigned n);

// Exact value of -[sum_a C(nu+1/3,a) C(nu-1/3,nu-a) (6a-1-3nu)^(2nu+1)]
//               / [sum_a C(nu-2/3,a) C(nu+2/3,nu-a) (6a+2-3nu)^(2nu+1)],
// which equals (3nu+1)/(3nu+2). Throws ZeroDenominator if the denominator
// sum vanishes (never expected).
Rat ratio_identity(unsigned nu);

// Third route to the refined counts: expand the weight basis
// sqrt(3) a(u)^(r-1) b(u)^(n-r) sin^n u cos^(n-1) u, solve for the
// coordinates of f_n in it, and scale by the multipliers. n >= 2.
RefinedRow reconstruct_row(unsigned n);

}  // namespace asm3::kernel
