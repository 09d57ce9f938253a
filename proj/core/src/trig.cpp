#include "asm3/trig.hpp"

#include <cstdlib>

namespace asm3 {

OddTrigPoly::OddTrigPoly(
    std::initializer_list<std::pair<long long, Rat>> terms) {
  for (const auto& [freq, coeff] : terms) add_term(freq, coeff);
}

void OddTrigPoly::add_term(long long freq, const Rat& coeff) {
  if (freq == 0 || coeff == 0) return;
  const long long key = freq < 0 ? -freq : freq;
  const Rat add = freq < 0 ? Rat(-coeff) : coeff;
  auto [it, inserted] = terms_.try_emplace(key, add);
  if (!inserted) {
    it->second += add;
    if (it->second == 0) terms_.erase(it);
  }
}

Rat OddTrigPoly::coeff(long long freq) const {
  if (freq == 0) return 0;
  const long long key = freq < 0 ? -freq : freq;
  auto it = terms_.find(key);
  if (it == terms_.end()) return 0;
  return freq < 0 ? Rat(-it->second) : it->second;
}

long long OddTrigPoly::max_frequency() const {
  return terms_.empty() ? 0 : terms_.rbegin()->first;
}

OddTrigPoly OddTrigPoly::operator-() const {
  OddTrigPoly r;
  for (const auto& [m, b] : terms_) r.terms_.emplace(m, -b);
  return r;
}

OddTrigPoly operator+(const OddTrigPoly& f, const OddTrigPoly& g) {
  OddTrigPoly r = f;
  r += g;
  return r;
}

OddTrigPoly operator-(const OddTrigPoly& f, const OddTrigPoly& g) {
  OddTrigPoly r = f;
  r -= g;
  return r;
}

OddTrigPoly& OddTrigPoly::operator+=(const OddTrigPoly& g) {
  for (const auto& [m, b] : g.terms_) add_term(m, b);
  return *this;
}

OddTrigPoly& OddTrigPoly::operator-=(const OddTrigPoly& g) {
  for (const auto& [m, b] : g.terms_) add_term(m, -b);
  return *this;
}

OddTrigPoly operator*(const Rat& c, const OddTrigPoly& f) {
  OddTrigPoly r;
  if (c == 0) return r;
  for (const auto& [m, b] : f.terms_) r.terms_.emplace(m, c * b);
  return r;
}

OddTrigPoly OddTrigPoly::mul_cos(long long c) const {
  OddTrigPoly r;
  const Rat half(1, 2);
  for (const auto& [m, b] : terms_) {
    const Rat h = half * b;
    r.add_term(m + c, h);
    r.add_term(m - c, h);
  }
  return r;
}

Rat OddTrigPoly::derivative_at(unsigned order, EvalPoint point) const {
  if (order > 1000) {
    throw OrderTooLarge("derivative order " + std::to_string(order) +
                        " exceeds the supported range");
  }
  // sign of sin(k pi/2) for k mod 4 = 0, 1, 2, 3
  static constexpr int kSinQuarter[4] = {0, 1, 0, -1};
  Rat acc = 0;
  for (const auto& [m, b] : terms_) {
    const unsigned phase =
        point == EvalPoint::zero
            ? static_cast<unsigned>(order % 4)
            : static_cast<unsigned>((static_cast<unsigned long long>(m) + order) % 4);
    const int s = kSinQuarter[phase];
    if (s == 0) continue;
    acc += Rat(s * int_pow(Int(m), order)) * b;
  }
  return acc;
}

std::string OddTrigPoly::str() const {
  if (terms_.empty()) return "0";
  std::string s;
  for (const auto& [m, b] : terms_) {
    if (!s.empty()) s += " + ";
    s += "(" + rat_str(b) + ")*sin(" + std::to_string(m) + "u)";
  }
  return s;
}

OddTrigPoly expand_w_poly(const Poly& p, unsigned sine_power) {
  if (sine_power % 2 == 0) {
    throw std::invalid_argument("expand_w_poly: sine power must be odd");
  }
  // sin(2u)^k for odd k, built up through sin^2(2u) = (1 - cos 4u) / 2.
  OddTrigPoly base;
  base.add_term(2, 1);
  const Rat half(1, 2);
  for (unsigned k = 1; k < sine_power; k += 2) {
    base = half * (base - base.mul_cos(4));
  }
  if (p.is_zero()) return {};
  // Horner in w = cos 2u, each step multiplying the accumulator by cos 2u.
  const auto& c = p.coeffs();
  OddTrigPoly acc = c.back() * base;
  for (std::size_t k = c.size() - 1; k-- > 0;) {
    acc = acc.mul_cos(2) + c[k] * base;
  }
  return acc;
}

std::optional<Rat> proportionality(const OddTrigPoly& f, const OddTrigPoly& g) {
  if (g.is_zero()) {
    if (f.is_zero()) return Rat(1);
    return std::nullopt;
  }
  if (f.is_zero()) return Rat(0);
  if (f.term_count() != g.term_count()) return std::nullopt;
  std::optional<Rat> ratio;
  auto it = f.terms().begin();
  auto jt = g.terms().begin();
  for (; it != f.terms().end(); ++it, ++jt) {
    if (it->first != jt->first) return std::nullopt;
    Rat r = it->second / jt->second;
    if (!ratio) {
      ratio = r;
    } else if (*ratio != r) {
      return std::nullopt;
    }
  }
  return ratio;
}

}  // namespace asm3
