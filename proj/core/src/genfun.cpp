#include "asm3/genfun.hpp"

#include <stdexcept>
#include <string>

#include "asm3/recurrences.hpp"

namespace asm3::genfun {

namespace {

// Reads the scaled generating polynomial into a RefinedRow, insisting on
// nonneg integer coefficients.
RefinedRow row_from_poly(unsigned n, const Poly& g) {
  RefinedRow row;
  row.n = n;
  row.counts.reserve(n);
  if (g.degree() + 1 > static_cast<int>(n)) {
    throw NonIntegerCoefficient("generating polynomial for n = " +
                                std::to_string(n) + " has degree " +
                                std::to_string(g.degree()));
  }
  for (unsigned r = 1; r <= n; ++r) {
    const Rat& c = g[r - 1];
    if (!is_integer(c) || c < 0) {
      throw NonIntegerCoefficient("count A(" + std::to_string(n) + "," +
                                  std::to_string(r) + ";3) = " + rat_str(c));
    }
    row.counts.push_back(boost::multiprecision::numerator(c));
    row.total += row.counts.back();
  }
  return row;
}

}  // namespace

RefinedRow even_row(unsigned nu) {
  const unsigned n = 2 * nu + 2;
  const Poly bracket =
      Rat(3 * nu + 2) * recur::g_poly(1, nu, recur::GRoute::recurrence) -
      Rat(3 * nu + 1) * recur::g_poly(2, nu, recur::GRoute::recurrence);
  const Poly quotient = exact_div(bracket, Poly({1, 1}, 't'));
  const Rat scale = Rat(recur::total_weight(n)) *
                    Rat(factorial(2 * nu + 1)) / Rat(factorial(3 * nu + 2));
  return row_from_poly(n, scale * quotient);
}

RefinedRow odd_row(unsigned nu) {
  if (nu == 0) return {1, {Int(1)}, Int(1)};
  const unsigned n = 2 * nu + 1;
  const Poly even = gen_poly(n - 1);
  const Poly transfer = Poly({1, 2}, 't') * Poly({2, 1}, 't');  // (1+2t)(2+t)
  const Poly quotient = exact_div(2 * (even * transfer), 9 * Poly({1, 1}, 't'));
  const Rat scale = Rat(recur::total_weight(n)) / Rat(recur::total_weight(n - 1));
  return row_from_poly(n, scale * quotient);
}

RefinedRow row(unsigned n) {
  if (n == 0) throw std::invalid_argument("row: order must be >= 1");
  return n % 2 == 0 ? even_row((n - 2) / 2) : odd_row((n - 1) / 2);
}

Int refined(unsigned n, unsigned r) {
  if (r < 1 || r > n) {
    throw std::out_of_range("refined: column " + std::to_string(r) +
                            " outside 1.." + std::to_string(n));
  }
  return row(n).counts[r - 1];
}

Poly gen_poly(unsigned n) {
  const RefinedRow rr = row(n);
  std::vector<Rat> coeffs;
  coeffs.reserve(rr.counts.size());
  for (const Int& c : rr.counts) coeffs.emplace_back(c);
  return Poly(std::move(coeffs), 't');
}

std::vector<Rat> normalized_coeffs(unsigned n) {
  const RefinedRow rr = row(n);
  std::vector<Rat> out;
  out.reserve(rr.counts.size());
  for (const Int& c : rr.counts) out.push_back(Rat(c) / Rat(rr.total));
  return out;
}

}  // namespace asm3::genfun
