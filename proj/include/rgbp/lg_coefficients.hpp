#pragma once

// Liouville-Green coefficients E_s(alpha, phi), the constants a_s and
// atilde_s, and the d_{2s+1}(alpha) constants, for one fixed alpha.

#include <boost/multiprecision/cpp_int.hpp>

#include <cmath>
#include <complex>
#include <stdexcept>
#include <vector>

#include "params.hpp"
#include "trig_series.hpp"

namespace rgbp {

using rational = boost::multiprecision::cpp_rational;

inline PhiSeries coeff_G(const ProblemParams& p) {
  const double al = p.alpha;
  return PhiSeries::monomial(0, 2, 1, cplx(1.0 / (2.0 * p.sigma))) +
         PhiSeries::monomial(0, 3, 0, cplx(-al / (4.0 * (1.0 + al))));
}

namespace detail {

inline PhiSeries closed_E1(double al, double sigma) {
  using S = PhiSeries;
  const S c2 = S::cos_power(2);
  const S first = S::sin_power(1) * (c2 * cplx(5) - S::constant(2));
  const S second = S::cos_power(1) * (c2 * cplx(5) - S::constant(6)) + S::constant(1);
  return first * cplx(1.0 / (24.0 * sigma)) + second * cplx(al / (48.0 * (1.0 + al)));
}

inline PhiSeries closed_E2(double al) {
  using S = PhiSeries;
  const S c2 = S::cos_power(2);
  const S c4 = c2 * c2;
  const S first = S::monomial(0, 3, 1) * (S::constant(3) - c2 * cplx(5));
  const S bracket = c4 * cplx(5.0 * (4.0 - al * al + 4.0 * al)) +
                    c2 * cplx(7.0 * al * al - 16.0 * al - 16.0) + S::constant(-2.0 * al * al);
  return first * cplx(al / (16.0 * std::pow(1.0 + al, 1.5))) +
         S::sin_power(2) * bracket * cplx(1.0 / (64.0 * (1.0 + al) * (1.0 + al)));
}

}  // namespace detail

// E[0] is unused; E[1..s_max].
inline std::vector<PhiSeries> coeff_E(const ProblemParams& p, int s_max = 7) {
  if (s_max < 1) throw std::invalid_argument("coeff_E: s_max must be >= 1");
  std::vector<PhiSeries> E(s_max + 1), dE(s_max + 1);
  E[1] = detail::closed_E1(p.alpha, p.sigma);
  dE[1] = E[1].derivative();
  if (s_max >= 2) {
    E[2] = detail::closed_E2(p.alpha);
    dE[2] = E[2].derivative();
  }
  const PhiSeries G = coeff_G(p);
  for (int s = 2; s < s_max; ++s) {
    PhiSeries acc;
    for (int j = 1; j <= s - 1; ++j) acc += dE[j] * dE[s - j];
    E[s + 1] = G * dE[s] + (G * acc).antiderivative();
    dE[s + 1] = E[s + 1].derivative();
  }
  return E;
}

namespace detail {

inline std::vector<rational> a_sequence(rational first, int s) {
  std::vector<rational> a{rational(0), first, first};
  for (int k = 2; static_cast<int>(a.size()) <= s; ++k) {
    rational next = rational(k + 1) * a[k] / 2;
    for (int j = 1; j <= k - 1; ++j) next += a[j] * a[k - j] / 2;
    a.push_back(next);
  }
  return a;
}

}  // namespace detail

inline rational const_a(int s) {
  if (s < 1) throw std::invalid_argument("const_a: s must be >= 1");
  return detail::a_sequence(rational(5, 72), s)[s];
}

inline rational const_atilde(int s) {
  if (s < 1) throw std::invalid_argument("const_atilde: s must be >= 1");
  return detail::a_sequence(rational(-7, 72), s)[s];
}

// Generic in the real type so the constants can be checked in extended precision.
template <typename Real>
Real const_d_as(const Real& al, int s_odd) {
  using std::pow;
  const Real q = 1 + al;
  switch (s_odd) {
    case 1:
      return -al / (48 * q);
    case 3:
      return 7 * al * (3 + 3 * al + al * al) / (5760 * pow(q, 3));
    case 5:
      return -31 * al * (5 + al * (10 + al * (10 + al * (5 + al)))) / (80640 * pow(q, 5));
    case 7:
      return 127 * al * (7 + al * (21 + al * (35 + al * (35 + al * (21 + al * (7 + al)))))) /
             (430080 * pow(q, 7));
    default:
      throw std::invalid_argument("const_d: index must be 1, 3, 5 or 7");
  }
}

inline double const_d(double al, int s_odd) { return const_d_as<double>(al, s_odd); }

inline double const_d(const ProblemParams& p, int s_odd) { return const_d(p.alpha, s_odd); }

struct LgTable {
  double alpha = 0;
  std::vector<PhiSeries> E;  // E[1..7]
  PhiSeries G;
  std::vector<rational> a_const, atilde_const;  // index 1..7
  std::vector<double> d_const;                   // d_const[s] for s = 1, 3, 5, 7; zero otherwise

  int s_max() const { return static_cast<int>(E.size()) - 1; }
};

inline LgTable make_lg_table(const ProblemParams& p, int s_max = 7) {
  LgTable t;
  t.alpha = p.alpha;
  t.E = coeff_E(p, s_max);
  t.G = coeff_G(p);
  t.a_const = detail::a_sequence(rational(5, 72), s_max);
  t.atilde_const = detail::a_sequence(rational(-7, 72), s_max);
  t.a_const.resize(s_max + 1);
  t.atilde_const.resize(s_max + 1);
  t.d_const.assign(s_max + 1, 0.0);
  for (int s = 1; s <= s_max; s += 2) {
    if (s <= 7) t.d_const[s] = const_d(p.alpha, s);
  }
  return t;
}

// E_s + (-1)^s c_s / (s xi^s), with c = a or atilde.
inline cplx script_E(const LgTable& t, int s, cplx E_value, cplx xi, bool tilde = false) {
  const double c = static_cast<double>(tilde ? t.atilde_const.at(s) : t.a_const.at(s));
  const double sign = (s % 2 == 0) ? 1.0 : -1.0;
  return E_value + sign * c / (double(s) * std::pow(xi, s));
}

}  // namespace rgbp
