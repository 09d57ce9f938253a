#include "asm3/fourier.hpp"

namespace asm3 {

namespace {

void fold_into(std::map<long long, Sqrt3Scalar>& terms, long long key,
               const Sqrt3Scalar& c) {
  if (c.is_zero()) return;
  auto [it, inserted] = terms.try_emplace(key, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms.erase(it);
  }
}

}  // namespace

FourierPoly FourierPoly::constant(const Sqrt3Scalar& c) {
  FourierPoly f;
  f.add_cos(0, c);
  return f;
}

FourierPoly FourierPoly::harmonic_cos(long long freq, const Sqrt3Scalar& c) {
  FourierPoly f;
  f.add_cos(freq, c);
  return f;
}

FourierPoly FourierPoly::harmonic_sin(long long freq, const Sqrt3Scalar& c) {
  FourierPoly f;
  f.add_sin(freq, c);
  return f;
}

FourierPoly FourierPoly::from_odd(const OddTrigPoly& f) {
  FourierPoly r;
  for (const auto& [m, b] : f.terms()) r.add_sin(m, Sqrt3Scalar(b));
  return r;
}

void FourierPoly::add_cos(long long freq, const Sqrt3Scalar& c) {
  fold_into(cos_, freq < 0 ? -freq : freq, c);
}

void FourierPoly::add_sin(long long freq, const Sqrt3Scalar& c) {
  if (freq == 0) return;
  fold_into(sin_, freq < 0 ? -freq : freq, freq < 0 ? -c : c);
}

Sqrt3Scalar FourierPoly::cos_coeff(long long freq) const {
  auto it = cos_.find(freq < 0 ? -freq : freq);
  return it == cos_.end() ? Sqrt3Scalar{} : it->second;
}

Sqrt3Scalar FourierPoly::sin_coeff(long long freq) const {
  if (freq == 0) return {};
  auto it = sin_.find(freq < 0 ? -freq : freq);
  if (it == sin_.end()) return {};
  return freq < 0 ? -it->second : it->second;
}

long long FourierPoly::max_frequency() const {
  long long m = 0;
  if (!cos_.empty()) m = cos_.rbegin()->first;
  if (!sin_.empty() && sin_.rbegin()->first > m) m = sin_.rbegin()->first;
  return m;
}

FourierPoly operator+(const FourierPoly& f, const FourierPoly& g) {
  FourierPoly r = f;
  r += g;
  return r;
}

FourierPoly operator-(const FourierPoly& f, const FourierPoly& g) {
  FourierPoly r = f;
  r -= g;
  return r;
}

FourierPoly& FourierPoly::operator+=(const FourierPoly& g) {
  for (const auto& [m, c] : g.cos_) fold_into(cos_, m, c);
  for (const auto& [m, c] : g.sin_) fold_into(sin_, m, c);
  return *this;
}

FourierPoly& FourierPoly::operator-=(const FourierPoly& g) {
  for (const auto& [m, c] : g.cos_) fold_into(cos_, m, -c);
  for (const auto& [m, c] : g.sin_) fold_into(sin_, m, -c);
  return *this;
}

FourierPoly operator*(const Sqrt3Scalar& c, const FourierPoly& f) {
  FourierPoly r;
  if (c.is_zero()) return r;
  for (const auto& [m, x] : f.cos_) r.cos_.emplace(m, c * x);
  for (const auto& [m, x] : f.sin_) r.sin_.emplace(m, c * x);
  return r;
}

FourierPoly operator*(const FourierPoly& f, const FourierPoly& g) {
  // cos a cos b = (cos(a+b) + cos(a-b)) / 2
  // sin a sin b = (cos(a-b) - cos(a+b)) / 2
  // sin a cos b = (sin(a+b) + sin(a-b)) / 2
  const Sqrt3Scalar half{Rat(1, 2), Rat(0)};
  FourierPoly r;
  for (const auto& [m, x] : f.cos_) {
    for (const auto& [c, y] : g.cos_) {
      const Sqrt3Scalar h = half * x * y;
      r.add_cos(m + c, h);
      r.add_cos(m - c, h);
    }
    for (const auto& [s, y] : g.sin_) {
      const Sqrt3Scalar h = half * x * y;
      r.add_sin(s + m, h);
      r.add_sin(s - m, h);
    }
  }
  for (const auto& [m, x] : f.sin_) {
    for (const auto& [c, y] : g.cos_) {
      const Sqrt3Scalar h = half * x * y;
      r.add_sin(m + c, h);
      r.add_sin(m - c, h);
    }
    for (const auto& [s, y] : g.sin_) {
      const Sqrt3Scalar h = half * x * y;
      r.add_cos(m - s, h);
      r.add_cos(m + s, -h);
    }
  }
  return r;
}

FourierPoly FourierPoly::pow(unsigned e) const {
  FourierPoly r = constant(Sqrt3Scalar(Rat(1)));
  FourierPoly b = *this;
  for (; e != 0; e >>= 1) {
    if (e & 1u) r = r * b;
    if (e > 1) b = b * b;
  }
  return r;
}

}  // namespace asm3
