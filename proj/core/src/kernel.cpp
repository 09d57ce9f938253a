#include "asm3/kernel.hpp"

#include <set>
#include <stdexcept>
#include <string>
#include <utility>

#include "asm3/fourier.hpp"
#include "asm3/recurrences.hpp"

namespace asm3::kernel {

namespace {

// sign of sin(k pi/2) for k mod 4 = 0..3
constexpr int kSinQuarter[4] = {0, 1, 0, -1};

long long top_frequency(unsigned n) { return 3LL * n - 2; }

// Closed-form coefficient at the top frequency 3n-2, used to put the
// nullspace vector on the same scale as f_even / f_odd.
Rat closed_top_coeff(unsigned n) {
  if (n % 2 == 0) {
    const unsigned nu = (n - 2) / 2;
    // highest frequency comes from the subtracted sum at a = nu
    return -Rat(3 * nu + 1) * binomial(Rat(3LL * nu - 2, 3), nu);
  }
  const unsigned nu = (n - 1) / 2;
  return binomial(Rat(3LL * nu - 2, 3), nu);
}

}  // namespace

KernelProblem KernelProblem::for_order(unsigned n) {
  if (n < 2) {
    throw std::invalid_argument("KernelProblem: order must be >= 2");
  }
  KernelProblem p;
  p.n = n;
  p.frequencies.reserve(n);
  for (unsigned k = 0; k < n; ++k) {
    p.frequencies.push_back(4 - 3LL * n + 6LL * k);
  }
  p.orders_at_zero = n;         // m = 0..n-1
  p.orders_at_half_pi = n - 1;  // m = 0..n-2
  return p;
}

IntMatrix KernelProblem::constraint_matrix() const {
  IntMatrix m;
  m.reserve(orders_at_zero + orders_at_half_pi);
  // d^m/du^m sin(q u) = q^m sin(q u + m pi/2)
  for (unsigned order = 0; order < orders_at_zero; ++order) {
    std::vector<Int> row;
    row.reserve(frequencies.size());
    const int s = kSinQuarter[order % 4];
    for (long long q : frequencies) {
      row.push_back(s == 0 ? Int(0) : Int(s) * int_pow(Int(q), order));
    }
    m.push_back(std::move(row));
  }
  for (unsigned order = 0; order < orders_at_half_pi; ++order) {
    std::vector<Int> row;
    row.reserve(frequencies.size());
    for (long long q : frequencies) {
      const long long phase = ((q + order) % 4 + 4) % 4;
      const int s = kSinQuarter[phase];
      row.push_back(s == 0 ? Int(0) : Int(s) * int_pow(Int(q), order));
    }
    m.push_back(std::move(row));
  }
  return m;
}

OddTrigPoly f_even(unsigned nu) {
  OddTrigPoly f;
  for (unsigned a = 0; a <= nu; ++a) {
    const Rat c1 = Rat(3 * nu + 2) * binomial(Rat(3LL * nu - 1, 3), a) *
                   binomial(Rat(3LL * nu + 1, 3), nu - a);
    f.add_term(2 - 6LL * nu + 12LL * a, c1);
    const Rat c2 = Rat(3 * nu + 1) * binomial(Rat(3LL * nu - 2, 3), a) *
                   binomial(Rat(3LL * nu + 2, 3), nu - a);
    f.add_term(4 - 6LL * nu + 12LL * a, -c2);
  }
  return f;
}

OddTrigPoly f_odd(unsigned nu) {
  if (nu == 0) {
    throw std::invalid_argument("f_odd: nu must be >= 1");
  }
  OddTrigPoly f;
  for (unsigned a = 0; a <= nu; ++a) {
    const Rat c = binomial(Rat(3LL * nu - 2, 3), a) *
                  binomial(Rat(3LL * nu - 1, 3), nu - a);
    f.add_term(1 - 6LL * nu + 12LL * a, c);
  }
  for (unsigned a = 0; a + 1 <= nu; ++a) {
    const Rat c = binomial(Rat(3LL * nu - 1, 3), a) *
                  binomial(Rat(3LL * nu - 2, 3), nu - a - 1);
    f.add_term(5 - 6LL * nu + 12LL * a, -c);
  }
  return f;
}

OddTrigPoly solve(unsigned n) {
  const KernelProblem problem = KernelProblem::for_order(n);
  const auto basis = nullspace(problem.constraint_matrix(), n);
  if (basis.size() != 1) {
    throw KernelDimensionError("constraint system for n = " +
                               std::to_string(n) + " has nullity " +
                               std::to_string(basis.size()));
  }
  OddTrigPoly f;
  for (unsigned k = 0; k < n; ++k) {
    f.add_term(problem.frequencies[k], basis[0][k]);
  }
  const Rat top = f.coeff(top_frequency(n));
  if (top == 0) {
    throw KernelDimensionError(
        "kernel vector for n = " + std::to_string(n) +
        " is missing the top frequency " + std::to_string(top_frequency(n)));
  }
  return (closed_top_coeff(n) / top) * f;
}

bool satisfies_shift_sum(const OddTrigPoly& f) {
  for (const auto& [m, b] : f.terms()) {
    if (m % 3 == 0) return false;
  }
  return true;
}

bool has_root_multiplicity(const OddTrigPoly& f, unsigned n) {
  for (unsigned order = 0; order < n; ++order) {
    if (f.derivative_at(order, EvalPoint::zero) != 0) return false;
  }
  for (unsigned order = 0; order + 1 < n; ++order) {
    if (f.derivative_at(order, EvalPoint::half_pi) != 0) return false;
  }
  return true;
}

Rat ratio_identity(unsigned nu) {
  Rat num = 0;
  Rat den = 0;
  for (unsigned a = 0; a <= nu; ++a) {
    num += binomial(Rat(3LL * nu + 1, 3), a) *
           binomial(Rat(3LL * nu - 1, 3), nu - a) *
           rat_pow(Rat(6LL * a - 1 - 3LL * nu), 2 * nu + 1);
    den += binomial(Rat(3LL * nu - 2, 3), a) *
           binomial(Rat(3LL * nu + 2, 3), nu - a) *
           rat_pow(Rat(6LL * a + 2 - 3LL * nu), 2 * nu + 1);
  }
  if (den == 0) {
    throw ZeroDenominator("ratio_identity: denominator sum vanished at nu = " +
                          std::to_string(nu));
  }
  return -num / den;
}

RefinedRow reconstruct_row(unsigned n) {
  if (n < 2) {
    throw std::invalid_argument("reconstruct_row: order must be >= 2");
  }
  OddTrigPoly fhat;
  Sqrt3Scalar scale;
  if (n % 2 == 0) {
    fhat = solve(n);
    scale = recur::multiplier_c((n - 2) / 2);
  } else {
    const unsigned nu = (n - 1) / 2;
    fhat = solve(n - 1).mul_cos3();
    scale = Sqrt3Scalar(recur::multiplier_r(nu)) * recur::multiplier_c(nu - 1);
  }

  // Basis functions e_r = sqrt(3) a^(r-1) b^(n-r) sin^n u cos^(n-1) u with
  // a = sin u + sqrt(3) cos u and b = sin u - sqrt(3) cos u; the refined
  // counts are the coordinates of f_n = scale * fhat in this basis.
  const Sqrt3Scalar one(Rat(1));
  const Sqrt3Scalar root3 = Sqrt3Scalar::sqrt3();
  FourierPoly a_form;
  a_form.add_sin(1, one);
  a_form.add_cos(1, root3);
  FourierPoly b_form;
  b_form.add_sin(1, one);
  b_form.add_cos(1, -root3);
  const FourierPoly monomial = FourierPoly::harmonic_sin(1, one).pow(n) *
                               FourierPoly::harmonic_cos(1, one).pow(n - 1);

  std::vector<FourierPoly> basis;
  basis.reserve(n);
  for (unsigned r = 1; r <= n; ++r) {
    basis.push_back(FourierPoly::constant(root3) * a_form.pow(r - 1) *
                    b_form.pow(n - r) * monomial);
  }
  const FourierPoly target = FourierPoly::from_odd(fhat);

  std::set<long long> cos_freqs;
  std::set<long long> sin_freqs;
  auto collect = [&](const FourierPoly& p) {
    for (const auto& [m, c] : p.cos_terms()) cos_freqs.insert(m);
    for (const auto& [m, c] : p.sin_terms()) sin_freqs.insert(m);
  };
  for (const FourierPoly& e : basis) collect(e);
  collect(target);

  std::vector<std::vector<Sqrt3Scalar>> rows;
  std::vector<Sqrt3Scalar> rhs;
  rows.reserve(cos_freqs.size() + sin_freqs.size());
  for (long long m : cos_freqs) {
    std::vector<Sqrt3Scalar> row;
    row.reserve(n);
    for (const FourierPoly& e : basis) row.push_back(e.cos_coeff(m));
    rows.push_back(std::move(row));
    rhs.push_back(target.cos_coeff(m));
  }
  for (long long m : sin_freqs) {
    std::vector<Sqrt3Scalar> row;
    row.reserve(n);
    for (const FourierPoly& e : basis) row.push_back(e.sin_coeff(m));
    rows.push_back(std::move(row));
    rhs.push_back(target.sin_coeff(m));
  }
  const std::vector<Sqrt3Scalar> y = solve_unique(std::move(rows), std::move(rhs));

  RefinedRow out;
  out.n = n;
  out.counts.reserve(n);
  for (unsigned r = 1; r <= n; ++r) {
    const Sqrt3Scalar value = scale * y[r - 1];
    if (!value.is_rational() || !is_integer(value.a) || value.a < 0) {
      throw NonIntegerCoefficient("reconstructed count at (n = " +
                                  std::to_string(n) + ", r = " +
                                  std::to_string(r) + ") is " + value.str());
    }
    out.counts.push_back(boost::multiprecision::numerator(value.a));
    out.total += out.counts.back();
  }
  return out;
}

}  // namespace asm3::kernel
