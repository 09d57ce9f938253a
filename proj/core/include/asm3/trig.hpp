#pragma once

#include <initializer_list>
#include <map>
#include <optional>
#include <utility>

#include "asm3/polynomial.hpp"

namespace asm3 {

// Evaluation points for exact derivatives of odd trig polynomials.
enum class EvalPoint { zero, half_pi };

// Finite sum  sum_m b_m sin(m u)  with m >= 1 and every stored b_m nonzero.
// Oddness in u is structural: a term pushed at negative frequency folds back
// through sin(-m u) = -sin(m u), and frequency 0 contributes nothing.
class OddTrigPoly {
 public:
  OddTrigPoly() = default;
  OddTrigPoly(std::initializer_list<std::pair<long long, Rat>> terms);

  // Adds coeff * sin(freq * u), folding negative frequencies.
  void add_term(long long freq, const Rat& coeff);

  // Coefficient of sin(freq * u); zero when absent. freq may be negative.
  Rat coeff(long long freq) const;

  bool is_zero() const { return terms_.empty(); }
  // Largest frequency present; 0 for the zero polynomial.
  long long max_frequency() const;
  std::size_t term_count() const { return terms_.size(); }
  const std::map<long long, Rat>& terms() const { return terms_; }

  bool operator==(const OddTrigPoly&) const = default;

  OddTrigPoly operator-() const;
  friend OddTrigPoly operator+(const OddTrigPoly& f, const OddTrigPoly& g);
  friend OddTrigPoly operator-(const OddTrigPoly& f, const OddTrigPoly& g);
  friend OddTrigPoly operator*(const Rat& c, const OddTrigPoly& f);
  friend OddTrigPoly operator*(const OddTrigPoly& f, const Rat& c) {
    return c * f;
  }
  OddTrigPoly& operator+=(const OddTrigPoly& g);
  OddTrigPoly& operator-=(const OddTrigPoly& g);

  // f(u) * cos(c u), via sin(m u) cos(c u) = (sin((m+c)u) + sin((m-c)u)) / 2.
  OddTrigPoly mul_cos(long long c) const;
  OddTrigPoly mul_cos3() const { return mul_cos(3); }

  // Exact value of the order-th derivative at u = 0 or u = pi/2.
  // The result of differentiating sin(q u) m times is q^m sin(q u + m pi/2),
  // which at both points reduces to an integer multiple of the coefficient.
  Rat derivative_at(unsigned order, EvalPoint point) const;

  std::string str() const;

 private:
  std::map<long long, Rat> terms_;
};

// sin(2u)^sine_power * p(cos 2u) expanded into pure sine form.
// sine_power must be odd so the product is an odd function of u.
OddTrigPoly expand_w_poly(const Poly& p, unsigned sine_power);

// The scalar s with f == s * g, when one exists: 1 when both are zero,
// 0 when only f is, nullopt when f and g are not proportional.
std::optional<Rat> proportionality(const OddTrigPoly& f, const OddTrigPoly& g);

}  // namespace asm3
