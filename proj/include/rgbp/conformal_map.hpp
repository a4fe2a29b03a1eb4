#pragma once

// The change of variables z -> (Z, phi, xi, zeta) in the upper half-plane.
//
// Z = +-sqrt((z + alpha/2)^2 + 1 + alpha) is positive for z > 0, negative for
// z < 0 and ~ z at infinity. Its cut runs from 0 to z1 along the curve on which
// Im xi = 0. The elementary function Z_seg(z) = w sqrt(1 + sigma^2/w^2),
// w = z + alpha/2, has the same asymptotics but its cut is the vertical segment
// from z2 to z1; the two agree everywhere except in the lens bounded by that
// segment, the real axis and the curved cut, where Z = -Z_seg.

#include <boost/math/quadrature/gauss_kronrod.hpp>

#include <array>
#include <cmath>
#include <complex>
#include <numbers>
#include <optional>
#include <stdexcept>

#include "error.hpp"
#include "jet.hpp"
#include "params.hpp"

namespace rgbp {

inline constexpr std::size_t kMapOrder = 5;  // values and four derivatives
using MapJet = Jet<cplx, kMapOrder>;

struct MapState {
  cplx z, Z, phi, xi, zeta, rho;
  cplx sin_phi, cos_phi;
  cplx d_xi, d_phi;
  std::array<cplx, 4> d_zeta{};  // zeta', zeta'', zeta''', zeta''''

  // Taylor jets at z of the quantities above; jet[k] = f^(k)(z)/k!.
  MapJet z_jet, Z_jet, sin_jet, cos_jet, phi_jet, xi_jet, zeta_jet;
};

struct MapOptions {
  double turning_point_tol = 1e-3;  // relative to 1 + |z1|
  double cut_tol = 1e-9;
};

namespace map_detail {

inline constexpr cplx I{0.0, 1.0};

inline cplx Z_seg(const ProblemParams& p, cplx z) {
  const cplx w = z + 0.5 * p.alpha;
  if (w == 0.0) return cplx(p.sigma);
  return w * std::sqrt(1.0 + p.sigma * p.sigma / (w * w));
}

// Integral of Z_seg(t)/t from z1 to z along the segment, parametrized by
// t = z1 + (z - z1) s^2 so the square-root endpoint behaviour is smoothed out.
inline cplx xi_seg(const ProblemParams& p, cplx z) {
  const cplx dz = z - p.z1;
  auto f = [&](double s) {
    const cplx t = p.z1 + dz * (s * s);
    if (s == 0.0) return cplx(0.0);
    return Z_seg(p, t) / t * (2.0 * s) * dz;
  };
  return boost::math::quadrature::gauss_kronrod<double, 31>::integrate(f, 0.0, 1.0, 12, 1e-13);
}

// Strip of the upper half-plane between Re z = 0 and Re z = -alpha/2, below z1.
inline bool in_strip(const ProblemParams& p, cplx z) {
  if (p.alpha == 0.0) return false;
  const double lo = std::min(0.0, -0.5 * p.alpha);
  const double hi = std::max(0.0, -0.5 * p.alpha);
  return z.real() > lo && z.real() < hi && z.imag() >= 0.0 && z.imag() < p.sigma;
}

// Abscissa of the curved cut at height y (0 <= y < sigma), found by bisection
// of Im xi_seg across the strip.
inline std::optional<double> cut_abscissa(const ProblemParams& p, double y) {
  const double x_axis = 0.0, x_seg = -0.5 * p.alpha;
  const double width = std::abs(x_seg - x_axis);
  double a = x_axis + (x_seg - x_axis) * 1e-12;
  double b = x_seg - (x_seg - x_axis) * 1e-12;
  if (y == 0.0) return 0.0;
  double ga = xi_seg(p, cplx(a, y)).imag();
  const double gb = xi_seg(p, cplx(b, y)).imag();
  if ((ga > 0) == (gb > 0)) return std::nullopt;
  for (int it = 0; it < 200 && std::abs(b - a) > 1e-15 * width; ++it) {
    const double m = 0.5 * (a + b);
    const double gm = xi_seg(p, cplx(m, y)).imag();
    if ((gm > 0) == (ga > 0)) {
      a = m;
      ga = gm;
    } else {
      b = m;
    }
  }
  return 0.5 * (a + b);
}

}  // namespace map_detail

inline cplx big_Z(const ProblemParams& p, cplx z, const MapOptions& opt = {}) {
  using namespace map_detail;
  if (z == 0.0) throw ZeroArgument("big_Z: z = 0");
  if (z.imag() < 0.0) throw std::invalid_argument("big_Z: z must lie in the closed upper half-plane");
  const double xv = -0.5 * p.alpha;
  // On the vertical segment Z is real; take the limit from outside the lens.
  if (p.alpha != 0.0 && z.real() == xv && z.imag() > 0.0 && z.imag() < p.sigma) {
    const double mag = std::sqrt(p.sigma * p.sigma - z.imag() * z.imag());
    return cplx(p.alpha > 0.0 ? -mag : mag, 0.0);
  }
  const cplx zs = Z_seg(p, z);
  if (!in_strip(p, z)) return zs;
  const auto xs = cut_abscissa(p, z.imag());
  if (!xs) return zs;
  if (std::abs(z.real() - *xs) <= opt.cut_tol * (1.0 + std::abs(z))) {
    throw OnBranchCut("big_Z: z is on the cut from 0 to the turning point");
  }
  const bool lens = std::min(*xs, xv) < z.real() && z.real() < std::max(*xs, xv);
  return lens ? -zs : zs;
}

// xi in closed form, principal logarithms throughout.
inline cplx xi_closed_form(const ProblemParams& p, cplx z, cplx Z) {
  const double al = p.alpha;
  const double pi = std::numbers::pi;
  return Z - (1.0 + 0.5 * al) * std::log((4.0 * Z + 2.0 * al * (Z + z + 2.0) + 4.0 + al * al) / z) +
         0.5 * al * std::log(2.0 * Z + 2.0 * z + al) + 0.5 * std::log(1.0 + al) +
         (2.0 + 0.5 * al) * std::log(2.0) - map_detail::I * (0.5 * (1.0 + al) * pi);
}

namespace map_detail {

// Left of the curve x = B(y) the principal 2/3 power of 3 xi/2 lands on the
// wrong sheet wherever Im xi < 0.
inline bool left_of_boundary(const ProblemParams& p, cplx z) {
  const double xv = -0.5 * p.alpha;
  if (p.alpha > 0.0) {
    if (z.real() <= xv) return true;
  } else if (z.real() <= 0.0) {
    return true;
  }
  if (!in_strip(p, z)) return false;
  const auto xs = cut_abscissa(p, z.imag());
  if (!xs) return false;
  return z.real() < *xs;
}

inline cplx zeta_from_xi(const ProblemParams& p, cplx z, cplx xi) {
  if (xi.imag() < 0.0 && left_of_boundary(p, z)) {
    return -std::pow(1.5 * I * xi, 2.0 / 3.0);
  }
  return std::pow(1.5 * xi, 2.0 / 3.0);
}

// Fill a MapState at z from given Z, xi and zeta values; everything else,
// including all derivatives, follows by jet arithmetic.
inline MapState build_state(const ProblemParams& p, cplx z, cplx Z0, cplx xi0, cplx zeta0) {
  MapState st;
  st.z = z;
  st.Z = Z0;
  st.xi = xi0;
  st.zeta = zeta0;
  st.rho = 1.0 / zeta0;

  const MapJet zj = MapJet::variable(z);
  const MapJet w = zj + 0.5 * p.alpha;
  const MapJet P = w * w + (1.0 + p.alpha);
  const MapJet Zj = P.pow(0.5, Z0);
  const MapJet sj = p.sigma / Zj;
  const MapJet cj = w / Zj;
  st.sin_phi = sj.value();
  st.cos_phi = cj.value();
  st.phi = -I * std::log(st.cos_phi + I * st.sin_phi);
  const MapJet dphi = -(sj * sj) / p.sigma;
  const MapJet phij = dphi.integral(st.phi);
  const MapJet dxi = Zj / zj;
  const MapJet xij = dxi.integral(xi0);
  const MapJet zetaj = (xij / xi0).pow(2.0 / 3.0, cplx(1.0)) * zeta0;

  st.d_xi = dxi.value();
  st.d_phi = dphi.value();
  for (std::size_t k = 1; k <= 4; ++k) st.d_zeta[k - 1] = zetaj.derivative(k);
  st.z_jet = zj;
  st.Z_jet = Zj;
  st.sin_jet = sj;
  st.cos_jet = cj;
  st.phi_jet = phij;
  st.xi_jet = xij;
  st.zeta_jet = zetaj;
  return st;
}

}  // namespace map_detail

inline void check_map_point(const ProblemParams& p, cplx z, const MapOptions& opt) {
  if (z == 0.0) throw ZeroArgument("map_point: z = 0");
  if (std::abs(z - p.z1) < opt.turning_point_tol * (1.0 + std::abs(p.z1))) {
    throw TurningPointProximity("map_point: z is too close to the turning point");
  }
}

inline MapState map_point(const ProblemParams& p, cplx z, const MapOptions& opt = {}) {
  check_map_point(p, z, opt);
  const cplx Z = big_Z(p, z, opt);
  const cplx xi = xi_closed_form(p, z, Z);
  const cplx zeta = map_detail::zeta_from_xi(p, z, xi);
  return map_detail::build_state(p, z, Z, xi, zeta);
}

struct AiryPoint {
  cplx zeta, xi;
};

inline AiryPoint zeta_for_airy_zero(const ProblemParams& p, int m, double airy_m) {
  if (m < 1) throw NonpositiveIndex("zeta_for_airy_zero: index must be >= 1");
  if (!(airy_m < 0.0)) throw std::invalid_argument("zeta_for_airy_zero: Airy zero must be negative");
  const double am = std::abs(airy_m);
  return {cplx(airy_m * std::pow(p.u, -2.0 / 3.0), 0.0),
          cplx(0.0, -2.0 * std::pow(am, 1.5) / (3.0 * p.u))};
}

// State at a leading-order zero location, left of the cut, with Z taken as the
// negative square root and xi, zeta pinned to the Airy-zero values.
inline MapState map_point_pinned(const ProblemParams& p, cplx z, const AiryPoint& pin,
                                 const MapOptions& opt = {}) {
  check_map_point(p, z, opt);
  const cplx w = z + 0.5 * p.alpha;
  const cplx Z = -std::sqrt(w * w + (1.0 + p.alpha));
  return map_detail::build_state(p, z, Z, pin.xi, pin.zeta);
}

}  // namespace rgbp
