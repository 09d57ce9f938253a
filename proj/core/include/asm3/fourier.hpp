#pragma once

#include <map>

#include "asm3/numbers.hpp"
#include "asm3/trig.hpp"

namespace asm3 {

// Real trig polynomial  c0 + sum_m a_m cos(m u) + b_m sin(m u)  with
// coefficients in Q(sqrt 3). Closed under products, so weight factors like
// sin u + sqrt(3) cos u can be expanded exactly. The constant term is the
// cosine coefficient at frequency 0; stored coefficients are nonzero.
class FourierPoly {
 public:
  FourierPoly() = default;

  static FourierPoly constant(const Sqrt3Scalar& c);
  static FourierPoly harmonic_cos(long long freq, const Sqrt3Scalar& c);
  static FourierPoly harmonic_sin(long long freq, const Sqrt3Scalar& c);
  static FourierPoly from_odd(const OddTrigPoly& f);

  // cos(-m u) = cos(m u); sin(-m u) = -sin(m u); sin(0 u) drops.
  void add_cos(long long freq, const Sqrt3Scalar& c);
  void add_sin(long long freq, const Sqrt3Scalar& c);

  Sqrt3Scalar cos_coeff(long long freq) const;
  Sqrt3Scalar sin_coeff(long long freq) const;
  const std::map<long long, Sqrt3Scalar>& cos_terms() const { return cos_; }
  const std::map<long long, Sqrt3Scalar>& sin_terms() const { return sin_; }

  bool is_zero() const { return cos_.empty() && sin_.empty(); }
  // A pure sine series is an odd function of u.
  bool is_odd() const { return cos_.empty(); }
  long long max_frequency() const;

  bool operator==(const FourierPoly&) const = default;

  friend FourierPoly operator+(const FourierPoly& f, const FourierPoly& g);
  friend FourierPoly operator-(const FourierPoly& f, const FourierPoly& g);
  friend FourierPoly operator*(const FourierPoly& f, const FourierPoly& g);
  friend FourierPoly operator*(const Sqrt3Scalar& c, const FourierPoly& f);
  FourierPoly& operator+=(const FourierPoly& g);
  FourierPoly& operator-=(const FourierPoly& g);

  FourierPoly pow(unsigned e) const;

 private:
  std::map<long long, Sqrt3Scalar> cos_;  // key 0 holds the constant term
  std::map<long long, Sqrt3Scalar> sin_;  // keys >= 1
};

}  // namespace asm3
