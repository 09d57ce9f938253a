#include "asm3/recurrences.hpp"

#include <mutex>
#include <stdexcept>
#include <vector>

namespace asm3::recur {

namespace {

std::mutex cache_mutex;

void require_j(int j) {
  if (j != 1 && j != 2) {
    throw std::invalid_argument("family index j must be 1 or 2");
  }
}

// Phi recurrence, solved for Phi_{nu+1}:
//   Phi_{nu+1} = [ -18 nu (2nu+1) w (3-4w^2) Phi_nu
//                  + 4 (9nu^2 - j^2) (1-4w^2)^2 Phi_{nu-1} ]
//                / ( 9 nu (nu+1) (1-w^2) )
std::vector<Poly>& phi_cache(int j) {
  static std::vector<Poly> cache[2];
  auto& tab = cache[j - 1];
  if (tab.empty()) {
    if (j == 1) {
      tab.push_back(Poly({1}, 'w'));
      tab.push_back(Poly({0, Rat(-16, 3)}, 'w'));
    } else {
      tab.push_back(Poly({0, 2}, 'w'));
      tab.push_back(Poly({Rat(-4, 3), 0, Rat(-16, 3)}, 'w'));
    }
  }
  return tab;
}

void grow_phi(int j, unsigned nu) {
  auto& tab = phi_cache(j);
  const Poly w_term({0, 3, 0, -4}, 'w');         // w(3 - 4w^2)
  const Poly sq = Poly({1, 0, -4}, 'w').pow(2);  // (1 - 4w^2)^2
  const Poly den({1, 0, -1}, 'w');               // 1 - w^2
  while (tab.size() <= nu) {
    const unsigned k = static_cast<unsigned>(tab.size()) - 1;  // recurrence at nu = k
    const Rat a(-18LL * k * (2LL * k + 1));
    const Rat b(4 * (9LL * k * k - static_cast<long long>(j) * j));
    const Rat d(9LL * k * (k + 1));
    Poly num = a * (w_term * tab[k]) + b * (sq * tab[k - 1]);
    tab.push_back(exact_div((Rat(1) / d) * num, den));
  }
}

// g recurrence (n even route), solved for g_{nu+1}:
//   3 (1-t^2)^2 g_{nu+1} = (2nu+1)(1+4t+t^2)[3(1+t+t^2)^2 - (1+4t+t^2)^2] g_nu
//                          + (9nu^2 - j^2) t^2 (1+2t)^2 (2+t)^2 g_{nu-1}
std::vector<Poly>& g_cache(int j) {
  static std::vector<Poly> cache[2];
  auto& tab = cache[j - 1];
  if (tab.empty()) {
    const Poly q({1, 4, 1}, 't');                          // 1 + 4t + t^2
    const Poly prod = Poly({1, 2}, 't') * Poly({2, 1}, 't');  // (1+2t)(2+t)
    const Poly t2 = Poly::monomial(2, 1, 't');
    if (j == 1) {
      tab.push_back(Rat(1, 3) * Poly({1, 1, 1}, 't'));
      tab.push_back(Rat(1, 18) * (prod * prod - 9 * t2));
    } else {
      tab.push_back(Rat(-1, 3) * q);
      tab.push_back(Rat(-1, 18) * (prod * prod + 9 * t2));
    }
  }
  return tab;
}

void grow_g(int j, unsigned nu) {
  auto& tab = g_cache(j);
  const Poly p({1, 1, 1}, 't');   // 1 + t + t^2
  const Poly q({1, 4, 1}, 't');   // 1 + 4t + t^2
  const Poly mid = q * (3 * (p * p) - q * q);
  const Poly tail =
      Poly::monomial(2, 1, 't') * (Poly({1, 2}, 't') * Poly({2, 1}, 't')).pow(2);
  const Poly den = 3 * Poly({1, 0, -1}, 't').pow(2);  // 3 (1-t^2)^2
  while (tab.size() <= nu) {
    const unsigned k = static_cast<unsigned>(tab.size()) - 1;
    const Rat a(2LL * k + 1);
    const Rat b(9LL * k * k - static_cast<long long>(j) * j);
    Poly num = a * (mid * tab[k]) + b * (tail * tab[k - 1]);
    tab.push_back(exact_div(num, den));
  }
}

Poly g_substitution(int j, unsigned nu) {
  const Poly p({1, 1, 1}, 't');  // 1 + t + t^2
  // w = -(1+4t+t^2) / (2(1+t+t^2)) = num/den, homogenized over the actual
  // degree of Phi.
  const Poly num = Rat(-1) * Poly({1, 4, 1}, 't');
  const Poly den = 2 * p;
  const Poly ph = phi(j, nu);
  const int deg = ph.degree();  // >= 0: no Phi is the zero polynomial
  Poly homog('t');
  for (int k = 0; k <= deg; ++k) {
    if (ph[k] == 0) continue;
    homog += ph[k] * num.pow(k) * den.pow(deg - k);
  }
  // g = nu!/(3*4^nu) * (1+t+t^2)^(nu+1) * Phi(num/den)
  //   = nu!/(3*4^nu) * (1+t+t^2)^(nu+1) * homog / den^deg
  const Rat scale = Rat(factorial(nu)) / Rat(3 * int_pow(4, nu));
  const Poly numerator = scale * (p.pow(nu + 1) * homog);
  return exact_div(numerator, den.pow(static_cast<unsigned>(deg)));
}

std::vector<Int>& totals_cache() {
  static std::vector<Int> totals = {1};  // totals[k] = A(k+1;3)
  return totals;
}

void grow_totals(unsigned n) {
  auto& totals = totals_cache();
  while (totals.size() < n) {
    const unsigned m = static_cast<unsigned>(totals.size()) + 1;  // next order
    Rat ratio;  // A(m;3) / A(m-1;3)
    if (m % 2 == 0) {
      const unsigned nu = (m - 2) / 2;
      ratio = Rat(int_pow(3, nu) * factorial(nu) * factorial(3 * nu + 2)) /
              Rat(int_pow(factorial(2 * nu + 1), 2));
    } else {
      const unsigned nu = (m - 1) / 2;
      ratio = Rat(int_pow(3, nu) * factorial(nu) * factorial(3 * nu)) /
              Rat(int_pow(factorial(2 * nu), 2));
    }
    const Rat next = Rat(totals.back()) * ratio;
    if (!is_integer(next)) {
      throw NonZeroRemainder("total weight ratio chain left a fraction at n = " +
                             std::to_string(m));
    }
    totals.push_back(boost::multiprecision::numerator(next));
  }
}

}  // namespace

Poly phi(int j, unsigned nu) {
  require_j(j);
  std::lock_guard<std::mutex> lock(cache_mutex);
  grow_phi(j, nu);
  return phi_cache(j)[nu];
}

OddTrigPoly f_trig(int j, unsigned nu) {
  require_j(j);
  OddTrigPoly f;
  const Rat top(3LL * nu - j, 3);     // nu - j/3
  const Rat bottom(3LL * nu + j, 3);  // nu + j/3
  for (unsigned a = 0; a <= nu; ++a) {
    const Rat c = binomial(top, a) * binomial(bottom, nu - a);
    const long long freq =
        2 * (j - 3LL * nu + 6LL * a);
    f.add_term(freq, c);
  }
  return f;
}

Poly g_poly(int j, unsigned nu, GRoute route) {
  require_j(j);
  if (route == GRoute::substitution) return g_substitution(j, nu);
  std::lock_guard<std::mutex> lock(cache_mutex);
  grow_g(j, nu);
  return g_cache(j)[nu];
}

Int total_weight(unsigned n) {
  if (n == 0) throw std::invalid_argument("total_weight: order must be >= 1");
  std::lock_guard<std::mutex> lock(cache_mutex);
  grow_totals(n);
  return totals_cache()[n - 1];
}

Rat phi_special(int j, unsigned nu, SpecialPoint point) {
  require_j(j);
  if (point == SpecialPoint::minus_half) {
    // (-1)^(j+1) (4/3)^nu (2 nu)! / (nu!)^2
    const Rat mag = rat_pow(Rat(4, 3), nu) * Rat(factorial(2 * nu)) /
                    Rat(int_pow(factorial(nu), 2));
    return j == 1 ? mag : -mag;
  }
  const Rat base = rat_pow(Rat(4, 3), nu) / Rat(factorial(nu) * factorial(2 * nu + 1));
  if (j == 1) return base * Rat(factorial(3 * nu + 1));
  return -base * Rat((3 * nu + 2) * factorial(3 * nu));
}

Sqrt3Scalar multiplier_c(unsigned nu) {
  const Rat root3_part = Rat(total_weight(2 * nu + 2)) *
                         Rat(factorial(nu) * factorial(2 * nu + 1)) *
                         rat_pow(Rat(3, 16), nu) /
                         Rat(4 * factorial(3 * nu + 2));
  return {Rat(0), root3_part};
}

Rat multiplier_r(unsigned nu) {
  if (nu == 0) throw std::invalid_argument("multiplier_r: nu must be >= 1");
  return -Rat(total_weight(2 * nu + 1)) / Rat(3 * total_weight(2 * nu));
}

}  // namespace asm3::recur
