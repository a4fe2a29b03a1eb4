#pragma once

// Brute-force reference zeros of theta_n(z; a): Aberth-Ehrlich simultaneous
// iteration on the monomial coefficients in multiprecision arithmetic. The
// monomial basis is badly conditioned (condition numbers near 1e80 at n = 200),
// so the working precision grows with n.

#include <boost/multiprecision/cpp_bin_float.hpp>

#include <algorithm>
#include <cmath>
#include <complex>
#include <numbers>
#include <string>
#include <vector>

#include "error.hpp"
#include "params.hpp"

namespace rgbp {

namespace oracle_detail {

template <unsigned Digits>
using mp_real = boost::multiprecision::number<boost::multiprecision::cpp_bin_float<Digits>,
                                              boost::multiprecision::et_off>;

template <typename R>
struct MC {
  R re = 0, im = 0;

  MC() = default;
  MC(R r, R i = 0) : re(std::move(r)), im(std::move(i)) {}

  friend MC operator+(const MC& a, const MC& b) { return {a.re + b.re, a.im + b.im}; }
  friend MC operator-(const MC& a, const MC& b) { return {a.re - b.re, a.im - b.im}; }
  friend MC operator*(const MC& a, const MC& b) {
    return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
  }
  friend MC operator/(const MC& a, const MC& b) {
    const R d = b.re * b.re + b.im * b.im;
    return {(a.re * b.re + a.im * b.im) / d, (a.im * b.re - a.re * b.im) / d};
  }
  R norm() const { return re * re + im * im; }
  R abs() const { return sqrt(norm()); }
  cplx to_cplx() const { return {static_cast<double>(re), static_cast<double>(im)}; }
};

template <typename R>
struct Eval {
  MC<R> p, dp;
  R abs_sum;
};

template <typename R>
Eval<R> horner(const std::vector<R>& c, const MC<R>& z) {
  MC<R> p(c[0]), dp(R(0));
  R s = abs(c[0]);
  const R az = z.abs();
  for (std::size_t k = 1; k < c.size(); ++k) {
    dp = dp * z + p;
    p = p * z + MC<R>(c[k]);
    s = s * az + abs(c[k]);
  }
  return {p, dp, s};
}

template <unsigned Digits>
std::vector<cplx> aberth(int n, double a_in) {
  using R = mp_real<Digits>;
  using C = MC<R>;
  const R a(a_in);
  std::vector<R> c(n + 1);
  c[0] = 1;
  for (int k = 0; k < n; ++k) {
    c[k + 1] = c[k] * R(n - k) * (R(n) + a - 1 + k) / (2 * (k + 1));
  }
  if (n == 1) return {cplx(static_cast<double>(-c[1]), 0.0)};

  // Starts on a circle about the centroid, radius the geometric mean of the
  // zero moduli, rotated off the real axis.
  const R center = -c[1] / n;
  const R radius = exp(log(abs(c[n])) / n);
  const double pi = std::numbers::pi;
  std::vector<C> z(n);
  for (int k = 0; k < n; ++k) {
    const double ang = 2.0 * pi * k / n + 0.4;
    z[k] = C(center + radius * R(std::cos(ang)), radius * R(std::sin(ang)));
  }

  const R tol = pow(R(10), -int(Digits) + 8);
  const R floor = pow(R(10), -int(Digits) + 2) * n;
  std::vector<bool> done(n, false);
  const int max_iter = 500;
  for (int it = 0; it < max_iter; ++it) {
    int active = 0;
    for (int i = 0; i < n; ++i) {
      if (done[i]) continue;
      const Eval<R> e = horner(c, z[i]);
      // At the rounding floor further steps only shuffle noise.
      if (e.p.abs() <= floor * e.abs_sum) {
        done[i] = true;
        continue;
      }
      const C ratio = e.p / e.dp;
      C s(R(0));
      for (int j = 0; j < n; ++j) {
        if (j != i) s = s + C(R(1)) / (z[i] - z[j]);
      }
      const C delta = ratio / (C(R(1)) - ratio * s);
      z[i] = z[i] - delta;
      if (delta.abs() <= tol * (1 + z[i].abs())) done[i] = true;
      ++active;
    }
    if (active == 0) break;
  }

  std::vector<int> bad;
  std::vector<cplx> out(n);
  for (int i = 0; i < n; ++i) {
    const Eval<R> e = horner(c, z[i]);
    const R rel = e.p.abs() / e.abs_sum;
    if (!(rel <= R(1e-12))) bad.push_back(i);
    out[i] = z[i].to_cplx();
  }
  if (!bad.empty()) {
    throw OracleNoConvergence("oracle_zeros: no convergence for n = " + std::to_string(n), bad);
  }
  return out;
}

}  // namespace oracle_detail

// Zeros that differ from their conjugate by at most this (relative) are real.
inline constexpr double kOracleRealTol = 1e-20;

// All n zeros, made exactly closed under conjugation, sorted by decreasing
// imaginary part (ties by increasing real part).
inline std::vector<cplx> oracle_zeros(int n, double a) {
  if (n < 1) throw InvalidDegree("oracle_zeros: degree must be >= 1");
  if (n > 200) throw std::invalid_argument("oracle_zeros: degree above 200 is not supported");
  std::vector<cplx> raw;
  if (n <= 15) {
    raw = oracle_detail::aberth<40>(n, a);
  } else if (n <= 50) {
    raw = oracle_detail::aberth<60>(n, a);
  } else if (n <= 100) {
    raw = oracle_detail::aberth<100>(n, a);
  } else {
    raw = oracle_detail::aberth<140>(n, a);
  }
  std::vector<cplx> upper, real;
  for (const cplx& z : raw) {
    if (std::abs(z.imag()) <= kOracleRealTol * std::abs(z)) {
      real.emplace_back(z.real(), 0.0);
    } else if (z.imag() > 0) {
      upper.push_back(z);
    }
  }
  std::vector<cplx> out;
  if (2 * upper.size() + real.size() == raw.size()) {
    for (const cplx& z : upper) {
      out.push_back(z);
      out.push_back(std::conj(z));
    }
    out.insert(out.end(), real.begin(), real.end());
  } else {
    out = raw;
  }
  std::sort(out.begin(), out.end(), [](cplx x, cplx y) {
    if (x.imag() != y.imag()) return x.imag() > y.imag();
    return x.real() < y.real();
  });
  return out;
}

// Zeros with nonnegative imaginary part, largest imaginary part first.
inline std::vector<cplx> oracle_upper_zeros(int n, double a) {
  std::vector<cplx> all = oracle_zeros(n, a);
  std::vector<cplx> up;
  for (const cplx& z : all) {
    if (z.imag() >= 0.0) up.push_back(z);
  }
  return up;
}

}  // namespace rgbp
