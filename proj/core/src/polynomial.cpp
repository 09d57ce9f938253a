#include "asm3/polynomial.hpp"

#include <utility>

namespace asm3 {

namespace {
const Rat kZero = 0;
}

Poly::Poly(std::initializer_list<Rat> coeffs, char var)
    : c_(coeffs), var_(var) {
  trim();
}

Poly::Poly(std::vector<Rat> coeffs, char var)
    : c_(std::move(coeffs)), var_(var) {
  trim();
}

Poly Poly::constant(const Rat& c, char var) {
  Poly p(var);
  if (c != 0) p.c_ = {c};
  return p;
}

Poly Poly::monomial(unsigned degree, const Rat& c, char var) {
  Poly p(var);
  if (c != 0) {
    p.c_.assign(degree + 1, kZero);
    p.c_[degree] = c;
  }
  return p;
}

void Poly::trim() {
  while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

const Rat& Poly::operator[](std::size_t k) const {
  return k < c_.size() ? c_[k] : kZero;
}

Rat Poly::eval(const Rat& x) const {
  Rat acc = 0;
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + *it;
  return acc;
}

Rat Poly::coeff_sum() const {
  Rat acc = 0;
  for (const Rat& c : c_) acc += c;
  return acc;
}

Poly Poly::pow(unsigned e) const {
  Poly r = Poly::constant(1, var_);
  Poly b = *this;
  for (; e != 0; e >>= 1) {
    if (e & 1u) r *= b;
    if (e > 1) b *= b;
  }
  return r;
}

Poly Poly::operator-() const {
  Poly r = *this;
  for (Rat& c : r.c_) c = -c;
  return r;
}

Poly operator+(const Poly& p, const Poly& q) {
  Poly r(p.var_);
  r.c_.resize(std::max(p.c_.size(), q.c_.size()), kZero);
  for (std::size_t i = 0; i < p.c_.size(); ++i) r.c_[i] = p.c_[i];
  for (std::size_t i = 0; i < q.c_.size(); ++i) r.c_[i] += q.c_[i];
  r.trim();
  return r;
}

Poly operator-(const Poly& p, const Poly& q) { return p + (-q); }

Poly operator*(const Poly& p, const Poly& q) {
  Poly r(p.var_);
  if (p.is_zero() || q.is_zero()) return r;
  r.c_.assign(p.c_.size() + q.c_.size() - 1, kZero);
  for (std::size_t i = 0; i < p.c_.size(); ++i) {
    if (p.c_[i] == 0) continue;
    for (std::size_t j = 0; j < q.c_.size(); ++j) {
      r.c_[i + j] += p.c_[i] * q.c_[j];
    }
  }
  r.trim();
  return r;
}

Poly operator*(const Rat& c, const Poly& p) {
  Poly r(p.var_);
  if (c == 0) return r;
  r.c_ = p.c_;
  for (Rat& x : r.c_) x *= c;
  return r;
}

std::string Poly::str() const {
  if (is_zero()) return "0";
  std::string s;
  for (std::size_t k = c_.size(); k-- > 0;) {
    if (c_[k] == 0) continue;
    if (!s.empty()) s += " + ";
    s += "(" + rat_str(c_[k]) + ")";
    if (k > 0) {
      s += "*";
      s += var_;
      if (k > 1) s += "^" + std::to_string(k);
    }
  }
  return s;
}

Poly exact_div(const Poly& p, const Poly& d) {
  if (d.is_zero()) {
    throw std::invalid_argument("polynomial division by zero");
  }
  if (p.is_zero()) return Poly(p.var());
  if (p.degree() < d.degree()) {
    throw NonZeroRemainder("exact_div: degree of dividend in " +
                           std::string(1, p.var()) +
                           " is below the divisor degree");
  }
  std::vector<Rat> rem(p.coeffs());
  const std::vector<Rat>& dc = d.coeffs();
  const std::size_t dn = dc.size();
  std::vector<Rat> quot(rem.size() - dn + 1, Rat(0));
  for (std::size_t k = quot.size(); k-- > 0;) {
    Rat q = rem[k + dn - 1] / dc[dn - 1];
    quot[k] = q;
    if (q == 0) continue;
    for (std::size_t i = 0; i < dn; ++i) rem[k + i] -= q * dc[i];
  }
  for (const Rat& c : rem) {
    if (c != 0) {
      throw NonZeroRemainder("exact_div: nonzero remainder in variable " +
                             std::string(1, p.var()));
    }
  }
  return Poly(std::move(quot), p.var());
}

}  // namespace asm3
