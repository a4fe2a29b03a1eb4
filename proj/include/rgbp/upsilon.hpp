#pragma once

// Coefficients Upsilon_1..Upsilon_4 of the zero-phase expansion and their
// z-derivatives, by jet arithmetic on a MapState.

#include <array>
#include <cmath>
#include <complex>

#include "conformal_map.hpp"
#include "error.hpp"
#include "lg_coefficients.hpp"
#include "params.hpp"

namespace rgbp {

// literal: E_s + d_s with the explicit rational constants.
// script:  E_s replaced by E_s + (-1)^s a_s / (s xi^s) before adding d_s.
enum class UpsilonReading { literal, script };

#ifdef RGBP_UPSILON_SCRIPT_E
inline constexpr UpsilonReading kDefaultUpsilonReading = UpsilonReading::script;
#else
inline constexpr UpsilonReading kDefaultUpsilonReading = UpsilonReading::literal;
#endif

struct UpsilonBundle {
  cplx U1, dU1, d2U1, d3U1;
  cplx U2, dU2, d2U2;
  cplx U3, dU3;
  cplx U4;

  MapJet U1_jet, U2_jet, U3_jet, U4_jet;
};

// Exact rational constants of the Upsilon recursions. tail[s-1] is the pure
// zeta-power term of Upsilon_s; inner holds the remaining numeric coefficients
// in the order 5/32, 25/128, 1105/2048, 175/768, 12155/8192, 414125/65536.
struct UpsilonRationals {
  std::array<rational, 4> tail;
  std::array<rational, 6> inner;
};

inline const UpsilonRationals& upsilon_rationals() {
  static const UpsilonRationals r = [] {
    auto q = [](long long num, long long den) { return rational(num) / den; };
    return UpsilonRationals{{q(5, 48), q(1105, 9216), q(82825, 98304), q(1282031525, 88080384)},
                            {q(5, 32), q(25, 128), q(1105, 2048), q(175, 768), q(12155, 8192),
                             q(414125, 65536)}};
  }();
  return r;
}

namespace upsilon_detail {

struct Constants {
  std::array<double, 4> tail;
  std::array<double, 6> inner;
};

inline const Constants& constants() {
  static const Constants c = [] {
    Constants out;
    const UpsilonRationals& r = upsilon_rationals();
    for (std::size_t i = 0; i < 4; ++i) out.tail[i] = static_cast<double>(r.tail[i]);
    for (std::size_t i = 0; i < 6; ++i) out.inner[i] = static_cast<double>(r.inner[i]);
    return out;
  }();
  return c;
}

}  // namespace upsilon_detail

struct UpsilonOptions {
  UpsilonReading reading = kDefaultUpsilonReading;
  double zeta_tol = 1e-12;
};

// Jet of E_s(phi(z)) at the state's point.
inline MapJet E_jet(const PhiSeries& E, const MapState& st) {
  std::array<cplx, kMapOrder> derivs{};
  PhiSeries d = E;
  for (std::size_t k = 0; k < kMapOrder; ++k) {
    derivs[k] = d.evaluate(st.phi, st.sin_phi, st.cos_phi);
    if (k + 1 < kMapOrder) d = d.derivative();
  }
  return compose(derivs, st.phi_jet);
}

inline UpsilonBundle upsilon_bundle(const ProblemParams& p, const LgTable& lg, const MapState& st,
                                    const UpsilonOptions& opt = {}) {
  (void)p;
  if (!(std::abs(st.zeta) > opt.zeta_tol)) {
    throw ZetaVanishes("upsilon_bundle: zeta is too small at this point");
  }
  const MapJet& zt = st.zeta_jet;
  const MapJet& xi = st.xi_jet;
  std::array<MapJet, 12> zp;  // zeta^k
  zp[0] = MapJet(cplx(1.0));
  for (std::size_t k = 1; k < zp.size(); ++k) zp[k] = zp[k - 1] * zt;

  auto W = [&](int s) {
    MapJet e = E_jet(lg.E.at(s), st);
    if (opt.reading == UpsilonReading::script) {
      const double c = static_cast<double>(lg.a_const.at(s));
      MapJet xis(cplx(1.0));
      for (int k = 0; k < s; ++k) xis = xis * xi;
      e = e + ((s % 2 == 0) ? 1.0 : -1.0) * c / double(s) / xis;
    }
    return 3.0 * xi * (e + lg.d_const.at(s)) / (2.0 * zp[2]);
  };

  const auto& [tail, k] = upsilon_detail::constants();
  const MapJet U1 = W(1) - tail[0] / zp[2];
  const MapJet U2 = -U1 * U1 / (4.0 * zp[1]) + k[0] * U1 / zp[3] + W(3) - tail[1] / zp[5];
  const MapJet U3 = -U1 * U2 / (2.0 * zp[1]) + U1 * U1 * U1 / (24.0 * zp[2]) - k[1] * U1 * U1 / zp[4] +
                    k[0] * U2 / zp[3] + k[2] * U1 / zp[6] + W(5) - tail[2] / zp[8];
  const MapJet U4 = -U1 * U1 * U1 * U1 / (64.0 * zp[3]) + U1 * U1 * U2 / (8.0 * zp[2]) +
                    k[3] * U1 * U1 * U1 / zp[5] - U1 * U3 / (2.0 * zp[1]) - 2.0 * k[1] * U1 * U2 / zp[4] -
                    U2 * U2 / (4.0 * zp[1]) - k[4] * U1 * U1 / zp[7] + k[0] * U3 / zp[3] +
                    k[2] * U2 / zp[6] + k[5] * U1 / zp[9] + W(7) - tail[3] / zp[11];

  UpsilonBundle b;
  b.U1 = U1.derivative(0);
  b.dU1 = U1.derivative(1);
  b.d2U1 = U1.derivative(2);
  b.d3U1 = U1.derivative(3);
  b.U2 = U2.derivative(0);
  b.dU2 = U2.derivative(1);
  b.d2U2 = U2.derivative(2);
  b.U3 = U3.derivative(0);
  b.dU3 = U3.derivative(1);
  b.U4 = U4.derivative(0);
  b.U1_jet = U1;
  b.U2_jet = U2;
  b.U3_jet = U3;
  b.U4_jet = U4;
  return b;
}

}  // namespace rgbp
