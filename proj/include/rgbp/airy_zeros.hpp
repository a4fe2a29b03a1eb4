#pragma once

// Negative zeros a_m of Ai, ordered by increasing absolute value.

#include <boost/math/constants/constants.hpp>
#include <boost/math/special_functions/gamma.hpp>
#include <boost/multiprecision/cpp_bin_float.hpp>

#include <cmath>
#include <limits>
#include <map>
#include <mutex>
#include <numbers>
#include <shared_mutex>

#include "error.hpp"

namespace rgbp {

namespace airy_detail {

using mpf = boost::multiprecision::cpp_bin_float_50;

// -T(3 pi (4m - 1) / 8)
inline double seed(int m) {
  const double t = 3.0 * std::numbers::pi * (4.0 * m - 1.0) / 8.0;
  const double r = 1.0 / (t * t);
  const double poly =
      1.0 + r * (5.0 / 48.0 +
                 r * (-5.0 / 36.0 +
                      r * (77125.0 / 82944.0 +
                           r * (-108056875.0 / 6967296.0 + r * (162375596875.0 / 334430208.0)))));
  return -std::pow(t, 2.0 / 3.0) * poly;
}

struct AiPair {
  mpf ai, dai;
};

// Maclaurin series; x must be nonzero.
inline AiPair ai_series(const mpf& x) {
  using boost::multiprecision::pow;
  const mpf c1 = 1 / (pow(mpf(3), mpf(2) / 3) * boost::math::tgamma(mpf(2) / 3));
  const mpf c2 = 1 / (pow(mpf(3), mpf(1) / 3) * boost::math::tgamma(mpf(1) / 3));
  const mpf x3 = x * x * x;
  const mpf tiny = std::numeric_limits<mpf>::epsilon() * 1e-5;
  mpf f = 1, df = 0, g = x, dg = 1;
  mpf tf = 1, tg = x;
  for (int k = 1; k < 2000; ++k) {
    tf *= x3 / ((3 * k) * (3 * k - 1));
    tg *= x3 / ((3 * k + 1) * (3 * k));
    f += tf;
    g += tg;
    df += tf * (3 * k) / x;
    dg += tg * (3 * k + 1) / x;
    if (abs(tf) < tiny && abs(tg) < tiny) break;
  }
  return {c1 * f - c2 * g, c1 * df - c2 * dg};
}

// Asymptotic expansion of Ai(-z), Ai'(-z) for large z > 0, returned as
// values at x = -z.
inline AiPair ai_asymptotic(const mpf& x) {
  using boost::multiprecision::cos;
  using boost::multiprecision::pow;
  using boost::multiprecision::sin;
  using boost::multiprecision::sqrt;
  const mpf z = -x;
  const mpf zeta = 2 * pow(z, mpf(3) / 2) / 3;
  const mpf pi = boost::math::constants::pi<mpf>();
  // u_k, v_k and the four alternating sums, truncated at the smallest term
  mpf uk = 1, vk = 1;
  mpf su_even = 0, su_odd = 0, sv_even = 0, sv_odd = 0;
  mpf zp = 1, prev = std::numeric_limits<mpf>::max();
  for (int k = 0; k < 200; ++k) {
    if (k > 0) {
      uk = uk * (6 * k - 5) * (6 * k - 3) * (6 * k - 1) / ((2 * k - 1) * 216 * k);
      vk = -mpf(6 * k + 1) / (6 * k - 1) * uk;
      zp *= zeta;
    }
    const mpf term = abs(uk / zp);
    if (term > prev) break;
    prev = term;
    const int sgn = ((k / 2) % 2 == 0) ? 1 : -1;
    if (k % 2 == 0) {
      su_even += sgn * uk / zp;
      sv_even += sgn * vk / zp;
    } else {
      su_odd += sgn * uk / zp;
      sv_odd += sgn * vk / zp;
    }
  }
  const mpf ph = zeta - pi / 4;
  const mpf z14 = pow(z, mpf(1) / 4);
  const mpf ai = (cos(ph) * su_even + sin(ph) * su_odd) / (sqrt(pi) * z14);
  const mpf daim = z14 * (sin(ph) * sv_even - cos(ph) * sv_odd) / sqrt(pi);
  return {ai, daim};
}

inline double refine(int m) {
  mpf x = seed(m);
  const mpf tol = mpf(1e-40);
  for (int it = 0; it < 50; ++it) {
    const AiPair v = (m < 10) ? ai_series(x) : ai_asymptotic(x);
    const mpf dx = v.ai / v.dai;
    x -= dx;
    if (abs(dx) <= tol * abs(x)) break;
  }
  return static_cast<double>(x);
}

inline std::shared_mutex& cache_mutex() {
  static std::shared_mutex mu;
  return mu;
}

inline std::map<int, double>& cache() {
  static std::map<int, double> c;
  return c;
}

}  // namespace airy_detail

// Asymptotic seed alone, without refinement.
inline double airy_zero_seed(int m) {
  if (m < 1) throw NonpositiveIndex("airy_zero: index must be >= 1");
  return airy_detail::seed(m);
}

inline double airy_zero(int m) {
  if (m < 1) throw NonpositiveIndex("airy_zero: index must be >= 1");
  {
    std::shared_lock lock(airy_detail::cache_mutex());
    auto it = airy_detail::cache().find(m);
    if (it != airy_detail::cache().end()) return it->second;
  }
  const double v = airy_detail::refine(m);
  std::unique_lock lock(airy_detail::cache_mutex());
  airy_detail::cache().emplace(m, v);
  return v;
}

}  // namespace rgbp
