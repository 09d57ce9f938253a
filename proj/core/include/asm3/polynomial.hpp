#pragma once

#include <cstddef>
#include <initializer_list>
#include <vector>

#include "asm3/numbers.hpp"

namespace asm3 {

// Dense univariate polynomial over the rationals, indexed by degree.
// Invariant: the coefficient vector never ends in a zero, so the zero
// polynomial is the empty vector and degree() == -1 for it.
// The variable tag is cosmetic (error messages); it does not take part
// in equality or arithmetic.
class Poly {
 public:
  Poly() = default;
  explicit Poly(char var) : var_(var) {}
  Poly(std::initializer_list<Rat> coeffs, char var = 'x');
  Poly(std::vector<Rat> coeffs, char var = 'x');

  static Poly constant(const Rat& c, char var = 'x');
  // c * var^degree
  static Poly monomial(unsigned degree, const Rat& c, char var = 'x');

  int degree() const { return static_cast<int>(c_.size()) - 1; }
  bool is_zero() const { return c_.empty(); }
  char var() const { return var_; }

  // Coefficient of var^k; zero beyond the degree.
  const Rat& operator[](std::size_t k) const;
  const std::vector<Rat>& coeffs() const { return c_; }

  Rat eval(const Rat& x) const;
  Poly pow(unsigned e) const;
  Rat coeff_sum() const;  // eval at 1, without the Horner detour

  bool operator==(const Poly& o) const { return c_ == o.c_; }

  Poly operator-() const;
  friend Poly operator+(const Poly& p, const Poly& q);
  friend Poly operator-(const Poly& p, const Poly& q);
  friend Poly operator*(const Poly& p, const Poly& q);
  friend Poly operator*(const Rat& c, const Poly& p);
  friend Poly operator*(const Poly& p, const Rat& c) { return c * p; }

  Poly& operator+=(const Poly& q) { return *this = *this + q; }
  Poly& operator-=(const Poly& q) { return *this = *this - q; }
  Poly& operator*=(const Poly& q) { return *this = *this * q; }

  std::string str() const;

 private:
  void trim();

  std::vector<Rat> c_;
  char var_ = 'x';
};

// Exact quotient p / d. Throws NonZeroRemainder when d does not divide p
// and std::invalid_argument when d is zero.
Poly exact_div(const Poly& p, const Poly& d);

}  // namespace asm3
