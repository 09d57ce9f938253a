#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <string>

#include "asm3/errors.hpp"

namespace asm3 {

using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

Int factorial(unsigned n);

// base^exp for exact scalars; 0^0 == 1.
Int int_pow(const Int& base, unsigned exp);
Rat rat_pow(const Rat& base, unsigned exp);

// Generalized binomial coefficient x(x-1)...(x-k+1) / k! for rational x.
Rat binomial(const Rat& x, unsigned k);

bool is_integer(const Rat& q);

// Throws NonIntegerCoefficient unless q has denominator 1.
Int to_integer(const Rat& q);

// "p" for integers, "p/q" otherwise; denominator always positive.
std::string rat_str(const Rat& q);

// Element a + b*sqrt(3) of the real quadratic field Q(sqrt 3).
// 3 is not a rational square, so (a, b) is unique and the type is a field.
struct Sqrt3Scalar {
  Rat a;  // rational part
  Rat b;  // coefficient of sqrt(3)

  Sqrt3Scalar() = default;
  Sqrt3Scalar(Rat rational, Rat root3) : a(std::move(rational)), b(std::move(root3)) {}
  explicit Sqrt3Scalar(const Rat& rational) : a(rational) {}

  static Sqrt3Scalar sqrt3() { return {Rat(0), Rat(1)}; }

  bool is_zero() const { return a == 0 && b == 0; }
  bool is_rational() const { return b == 0; }

  bool operator==(const Sqrt3Scalar&) const = default;

  Sqrt3Scalar operator-() const { return {-a, -b}; }

  friend Sqrt3Scalar operator+(const Sqrt3Scalar& x, const Sqrt3Scalar& y) {
    return {x.a + y.a, x.b + y.b};
  }
  friend Sqrt3Scalar operator-(const Sqrt3Scalar& x, const Sqrt3Scalar& y) {
    return {x.a - y.a, x.b - y.b};
  }
  friend Sqrt3Scalar operator*(const Sqrt3Scalar& x, const Sqrt3Scalar& y) {
    return {x.a * y.a + 3 * x.b * y.b, x.a * y.b + x.b * y.a};
  }
  friend Sqrt3Scalar operator*(const Rat& c, const Sqrt3Scalar& x) {
    return {c * x.a, c * x.b};
  }
  friend Sqrt3Scalar operator*(const Sqrt3Scalar& x, const Rat& c) {
    return c * x;
  }

  Sqrt3Scalar& operator+=(const Sqrt3Scalar& y) {
    a += y.a;
    b += y.b;
    return *this;
  }
  Sqrt3Scalar& operator-=(const Sqrt3Scalar& y) {
    a -= y.a;
    b -= y.b;
    return *this;
  }
  Sqrt3Scalar& operator*=(const Sqrt3Scalar& y) { return *this = *this * y; }

  // (a + b√3)^-1 = (a - b√3) / (a² - 3b²); the norm a² - 3b² is nonzero
  // for every nonzero element.
  Sqrt3Scalar inverse() const;

  friend Sqrt3Scalar operator/(const Sqrt3Scalar& x, const Sqrt3Scalar& y) {
    return x * y.inverse();
  }

  std::string str() const;
};

}  // namespace asm3
