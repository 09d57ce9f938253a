#pragma once

#include <vector>

#include "asm3/polynomial.hpp"
#include "asm3/refined_row.hpp"

// Refined counts A(n,r;3) and generating functions G_n(t) from the closed
// recurrence route: even orders from the g building blocks, odd orders from
// the even ones via the (1+2t)(2+t)/(t+1) transfer factor.
namespace asm3::genfun {

// Row for n = 2 nu + 2.
RefinedRow even_row(unsigned nu);

// Row for n = 2 nu + 1; nu = 0 is the single 1x1 matrix.
RefinedRow odd_row(unsigned nu);

// Row for any n >= 1.
RefinedRow row(unsigned n);

// A(n,r;3); throws std::out_of_range unless 1 <= r <= n.
Int refined(unsigned n, unsigned r);

// G_n(t) = sum_r A(n,r;3) t^(r-1), with integer coefficients.
Poly gen_poly(unsigned n);

// Coefficients of the normalized generating function G_n(t)/A(n;3);
// they sum to 1.
std::vector<Rat> normalized_coeffs(unsigned n);

}  // namespace asm3::genfun
