#include "asm3/numbers.hpp"

#include <boost/multiprecision/cpp_int.hpp>

namespace asm3 {

Int factorial(unsigned n) {
  Int r = 1;
  for (unsigned k = 2; k <= n; ++k) r *= k;
  return r;
}

Int int_pow(const Int& base, unsigned exp) {
  Int r = 1;
  Int b = base;
  for (unsigned e = exp; e != 0; e >>= 1) {
    if (e & 1u) r *= b;
    if (e > 1) b *= b;
  }
  return r;
}

Rat rat_pow(const Rat& base, unsigned exp) {
  Rat r = 1;
  Rat b = base;
  for (unsigned e = exp; e != 0; e >>= 1) {
    if (e & 1u) r *= b;
    if (e > 1) b *= b;
  }
  return r;
}

Rat binomial(const Rat& x, unsigned k) {
  Rat num = 1;
  for (unsigned i = 0; i < k; ++i) num *= x - i;
  return num / Rat(factorial(k));
}

bool is_integer(const Rat& q) { return boost::multiprecision::denominator(q) == 1; }

Int to_integer(const Rat& q) {
  if (!is_integer(q)) {
    throw NonIntegerCoefficient("expected an integer, got " + rat_str(q));
  }
  return boost::multiprecision::numerator(q);
}

std::string rat_str(const Rat& q) {
  const Int num = boost::multiprecision::numerator(q);
  const Int den = boost::multiprecision::denominator(q);
  if (den == 1) return num.str();
  return num.str() + "/" + den.str();
}

Sqrt3Scalar Sqrt3Scalar::inverse() const {
  const Rat norm = a * a - 3 * b * b;
  if (norm == 0) {
    // norm == 0 with rational a, b forces a == b == 0.
    throw ZeroDenominator("inverse of zero in Q(sqrt 3)");
  }
  return {a / norm, -b / norm};
}

std::string Sqrt3Scalar::str() const {
  if (b == 0) return rat_str(a);
  std::string s;
  if (a != 0) s = rat_str(a) + " + ";
  s += "(" + rat_str(b) + ")*sqrt(3)";
  return s;
}

}  // namespace asm3
