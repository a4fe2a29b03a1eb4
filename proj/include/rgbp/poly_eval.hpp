#pragma once

// Direct evaluation of theta_n(z; a) = sum_k binom(n,k) (n+a-1)_k z^(n-k) / 2^k
// and of the recessive solution w0, with values carried as mantissa * 2^exp so
// that degrees in the thousands neither overflow nor underflow.

#include <algorithm>
#include <cmath>
#include <limits>
#include <complex>
#include <numbers>
#include <vector>

#include "error.hpp"
#include "params.hpp"

namespace rgbp {

struct ScaledComplex {
  cplx mantissa{0.0, 0.0};
  long exp2 = 0;

  ScaledComplex() = default;
  ScaledComplex(cplx m, long e = 0) : mantissa(m), exp2(e) { normalize(); }

  void normalize() {
    const double mag = std::max(std::abs(mantissa.real()), std::abs(mantissa.imag()));
    if (mag == 0.0 || !std::isfinite(mag)) {
      if (mag == 0.0) exp2 = 0;
      return;
    }
    int e = 0;
    std::frexp(mag, &e);
    mantissa = cplx(std::ldexp(mantissa.real(), -e), std::ldexp(mantissa.imag(), -e));
    exp2 += e;
  }

  bool is_zero() const { return mantissa == 0.0; }

  // log2 |x|; -infinity for zero.
  double log2_abs() const {
    if (is_zero()) return -std::numeric_limits<double>::infinity();
    return std::log2(std::abs(mantissa)) + double(exp2);
  }

  // Plain complex value; overflows to inf or underflows to 0 when out of range.
  cplx value() const {
    return cplx(std::ldexp(mantissa.real(), int(exp2)), std::ldexp(mantissa.imag(), int(exp2)));
  }

  friend ScaledComplex operator*(const ScaledComplex& x, const ScaledComplex& y) {
    return ScaledComplex(x.mantissa * y.mantissa, x.exp2 + y.exp2);
  }
  friend ScaledComplex operator*(const ScaledComplex& x, cplx y) {
    return ScaledComplex(x.mantissa * y, x.exp2);
  }
  friend ScaledComplex operator/(const ScaledComplex& x, const ScaledComplex& y) {
    return ScaledComplex(x.mantissa / y.mantissa, x.exp2 - y.exp2);
  }
  friend ScaledComplex operator+(const ScaledComplex& x, const ScaledComplex& y) {
    if (x.is_zero()) return y;
    if (y.is_zero()) return x;
    const long e = std::max(x.exp2, y.exp2);
    auto shift = [e](const ScaledComplex& v) {
      const long d = v.exp2 - e;
      if (d < -1100) return cplx(0.0);
      return cplx(std::ldexp(v.mantissa.real(), int(d)), std::ldexp(v.mantissa.imag(), int(d)));
    };
    return ScaledComplex(shift(x) + shift(y), e);
  }
  friend ScaledComplex operator-(const ScaledComplex& x) { return ScaledComplex(-x.mantissa, x.exp2); }
  friend ScaledComplex operator-(const ScaledComplex& x, const ScaledComplex& y) { return x + (-y); }
};

// Ratio of consecutive coefficients, c_{k+1} / c_k.
inline double coeff_ratio(int n, double a, int k) {
  return double(n - k) * (double(n) + a - 1.0 + double(k)) / (2.0 * double(k + 1));
}

// Monomial coefficients c_0 = 1, ..., c_n of theta_n, highest power first,
// stored as long double mantissas times 2^scale_exp. The shared exponent puts
// the largest |c_k| near 1.
struct PolyCoeffs {
  int n = 0;
  double a = 0.0;
  long scale_exp = 0;
  std::vector<long double> mantissa;

  long double coefficient_ld(int k) const { return std::ldexp(mantissa.at(k), int(scale_exp)); }
};

inline PolyCoeffs make_coeffs(int n, double a) {
  if (n < 0) throw InvalidDegree("make_coeffs: degree must be >= 0");
  PolyCoeffs pc;
  pc.n = n;
  pc.a = a;
  std::vector<long double> m(n + 1);
  std::vector<long> e(n + 1, 0);
  m[0] = 1.0L;
  for (int k = 0; k < n; ++k) {
    int ex = 0;
    const long double next = std::frexp(m[k] * (long double)coeff_ratio(n, a, k), &ex);
    m[k + 1] = next;
    e[k + 1] = e[k] + ex;
  }
  long emax = e[0];
  for (int k = 0; k <= n; ++k) {
    if (m[k] != 0.0L) emax = std::max(emax, e[k]);
  }
  pc.scale_exp = emax;
  pc.mantissa.resize(n + 1);
  for (int k = 0; k <= n; ++k) pc.mantissa[k] = std::ldexp(m[k], int(e[k] - emax));
  return pc;
}

struct ThetaValue {
  ScaledComplex value;
  ScaledComplex abs_sum;  // sum |c_k| |z|^(n-k), the scale for backward errors
};

// Horner in scaled arithmetic.
inline ThetaValue theta_with_scale(int n, double a, cplx z) {
  if (n < 0) throw InvalidDegree("theta: degree must be >= 0");
  ScaledComplex b(cplx(1.0));
  ScaledComplex s(cplx(1.0));
  ScaledComplex c(cplx(1.0));
  const ScaledComplex zz(z);
  const ScaledComplex az(cplx(std::abs(z)));
  for (int k = 0; k < n; ++k) {
    c = c * cplx(coeff_ratio(n, a, k));
    b = b * zz + c;
    s = s * az + ScaledComplex(cplx(std::abs(c.mantissa)), c.exp2);
  }
  return {b, s};
}

inline ScaledComplex theta(int n, double a, cplx z) { return theta_with_scale(n, a, z).value; }

// |theta(z)| / sum |c_k| |z|^(n-k).
inline double relative_residual(int n, double a, cplx z) {
  const ThetaValue tv = theta_with_scale(n, a, z);
  if (tv.value.is_zero()) return 0.0;
  return std::exp2(tv.value.log2_abs() - tv.abs_sum.log2_abs());
}

namespace poly_detail {

struct LaguerreRaw {
  cplx L, dL;  // L_n^(b)(x) and d/dx, both times 2^-exp2
  long exp2 = 0;
};

inline LaguerreRaw laguerre(int n, double b, cplx x) {
  cplx Lm1 = 0.0, L = 1.0, dLm1 = 0.0, dL = 0.0;
  long e = 0;
  for (int k = 0; k < n; ++k) {
    const cplx c = (2.0 * k + 1.0 + b) - x;
    const double kb = k + b;
    const cplx Lp = (c * L - kb * Lm1) / double(k + 1);
    const cplx dLp = (c * dL - L - kb * dLm1) / double(k + 1);
    Lm1 = L;
    L = Lp;
    dLm1 = dL;
    dL = dLp;
    const double mag = std::max({std::abs(L), std::abs(dL), std::abs(Lm1), std::abs(dLm1)});
    if (mag > 0x1p200 || (mag < 0x1p-200 && mag > 0.0)) {
      const int ex = std::ilogb(mag);
      const double s = std::ldexp(1.0, -ex);
      L *= s;
      dL *= s;
      Lm1 *= s;
      dLm1 *= s;
      e += ex;
    }
  }
  return {L, dL, e};
}

}  // namespace poly_detail

struct LaguerreValue {
  ScaledComplex theta;   // theta_n(z; a)
  ScaledComplex dtheta;  // d theta_n / dz
};

// theta via (-1/2)^n n! L_n^(1-2n-a)(2z), three-term recurrence in the degree.
inline LaguerreValue theta_laguerre(int n, double a, cplx z) {
  if (n < 0) throw InvalidDegree("theta_laguerre: degree must be >= 0");
  const auto r = poly_detail::laguerre(n, 1.0 - 2.0 * n - a, 2.0 * z);
  ScaledComplex pref(cplx(1.0));
  for (int k = 1; k <= n; ++k) pref = pref * cplx(-0.5 * k);
  return {pref * ScaledComplex(r.L, r.exp2), pref * ScaledComplex(2.0 * r.dL, r.exp2)};
}

// w / w' for w = z^(1-n-a/2) e^(-z) theta_n, from the Laguerre route.
inline cplx w_over_dw(int n, double a, cplx z) {
  if (z == 0.0) throw ZeroArgument("w_over_dw: z = 0");
  const auto r = poly_detail::laguerre(n, 1.0 - 2.0 * n - a, 2.0 * z);
  return r.L / (((1.0 - n - 0.5 * a) / z - 1.0) * r.L + 2.0 * r.dL);
}

// w0 = 2^(1-n-a) z^(1-n-a/2) e^(-z) theta_n(z; a), principal power.
inline ScaledComplex w0_scaled(int n, double a, cplx z) {
  if (z == 0.0) throw ZeroArgument("w0: z = 0");
  const ScaledComplex th = theta(n, a, z);
  const cplx lg = (1.0 - n - 0.5 * a) * std::log(z) - z;
  const double l2 = lg.real() / std::numbers::ln2 + (1.0 - n - a);
  const long e = static_cast<long>(std::floor(l2));
  const cplx f = std::exp2(l2 - double(e)) * std::exp(cplx(0.0, lg.imag()));
  return th * ScaledComplex(f, e);
}

inline cplx w0(int n, double a, cplx z) { return w0_scaled(n, a, z).value(); }

}  // namespace rgbp
