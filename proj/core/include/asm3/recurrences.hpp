#pragma once

#include "asm3/numbers.hpp"
#include "asm3/polynomial.hpp"
#include "asm3/trig.hpp"

// The recurrence engine: the polynomial families Phi and F, the generating
// building blocks g, the total weighted counts, the closed forms at the two
// special points, and the scale multipliers tying them together.
// Everything is exact; all sequences are memoized behind a mutex.
namespace asm3::recur {

// Route selector for g_poly: its own second-order recurrence in t, or
// substitution of the rational function of t into the Phi polynomial.
enum class GRoute { recurrence, substitution };

// w values with closed-form evaluations: -1/2 and -1.
enum class SpecialPoint { minus_half, minus_one };

// Phi_nu^(j)(w), j in {1, 2}: the quotient family in w = cos 2u.
// Satisfies 9 nu (nu+1) (1-w^2) Phi_{nu+1}
//           + 18 nu (2nu+1) w (3-4w^2) Phi_nu
//           - 4 (9nu^2 - j^2) (1-4w^2)^2 Phi_{nu-1} = 0.
Poly phi(int j, unsigned nu);

// F_nu^(j)(u) = sum_a C(nu-j/3, a) C(nu+j/3, nu-a) sin(2(j-3nu+6a)u),
// the direct binomial sum; equals sin(2u)^(2nu+1) * phi(j,nu)(cos 2u).
OddTrigPoly f_trig(int j, unsigned nu);

// g_nu^(j)(t), by either route; the two must agree coefficientwise.
Poly g_poly(int j, unsigned nu, GRoute route);

// Total weighted count A(n;3) of order-n alternating sign matrices with
// weight 3 per -1 entry; built by chaining the exact consecutive ratios
// from A(1;3) = 1.
Int total_weight(unsigned n);

// Closed form of phi(j, nu) at w = -1/2 or w = -1.
Rat phi_special(int j, unsigned nu, SpecialPoint point);

// Scale multiplier c_nu linking the even kernel polynomial f_{2nu+2} to the
// partition function; always a pure sqrt(3) multiple.
Sqrt3Scalar multiplier_c(unsigned nu);

// Scale multiplier r_nu with f_{2nu+1} = r_nu cos(3u) f_{2nu}; nu >= 1.
// Always a negative rational.
Rat multiplier_r(unsigned nu);

}  // namespace asm3::recur
