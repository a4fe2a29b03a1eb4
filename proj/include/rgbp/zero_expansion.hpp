#pragma once

// Asymptotic approximations t_m ~ u * sum_s tau_{m,s} / u^{2s} to the zeros in
// the upper half-plane, m = 1 .. floor((n+1)/2), m = 1 having the largest
// imaginary part.

#include <array>
#include <cmath>
#include <complex>
#include <numbers>
#include <optional>
#include <string>
#include <vector>

#include "airy_zeros.hpp"
#include "conformal_map.hpp"
#include "error.hpp"
#include "lg_coefficients.hpp"
#include "parallel.hpp"
#include "params.hpp"
#include "upsilon.hpp"

namespace rgbp {

struct ZeroApprox {
  int m = 0;
  std::array<cplx, 5> tau{};
  cplx t;
  int terms_used = 0;
  double newton_residual = 0.0;
  int newton_iters = 0;
  bool low_confidence = false;  // n < 10: far outside the asymptotic regime
};

struct Tau0Result {
  cplx tau0;
  double residual = 0.0;
  int iters = 0;
};

struct Tau0Options {
  int max_iters = 50;
  double tol = 1e-14;
};

namespace expansion_detail {

inline constexpr cplx I{0.0, 1.0};

// Right side minus left side of the implicit equation for tau0, and its
// derivative Z/tau.
inline std::pair<cplx, cplx> tau0_residual(const ProblemParams& p, cplx tau, double lhs_im) {
  const double al = p.alpha;
  const double pi = std::numbers::pi;
  const cplx w = tau + 0.5 * al;
  const cplx Z = -std::sqrt(w * w + (1.0 + al));
  const cplx rhs = Z + (1.0 + 0.5 * al) * std::log(tau / (4.0 * Z + 2.0 * al * (Z + tau + 2.0) + 4.0 + al * al)) +
                   0.5 * al * (std::log(-2.0 * Z - 2.0 * tau - al) + I * pi) + 0.5 * std::log(1.0 + al) +
                   (2.0 + 0.5 * al) * std::log(2.0) - I * (0.5 * (1.0 + al) * pi);
  return {rhs - I * lhs_im, Z / tau};
}

inline std::optional<Tau0Result> newton_from(const ProblemParams& p, double lhs_im, cplx w,
                                             const Tau0Options& opt) {
  for (int it = 1; it <= opt.max_iters; ++it) {
    const auto [F, dF] = tau0_residual(p, -0.5 + w, lhs_im);
    if (!std::isfinite(F.real()) || !std::isfinite(F.imag()) || dF == 0.0) return std::nullopt;
    const cplx dw = F / dF;
    w -= dw;
    if (std::abs(dw) <= opt.tol * (1.0 + std::abs(w))) {
      const cplx tau = -0.5 + w;
      // The real zero of an odd-degree polynomial may sit slightly below the axis.
      if (!(tau.imag() > -0.05 * (1.0 + std::abs(tau)))) return std::nullopt;
      return Tau0Result{tau, std::abs(tau0_residual(p, tau, lhs_im).first), it};
    }
  }
  return std::nullopt;
}

}  // namespace expansion_detail

inline Tau0Result solve_tau0(const ProblemParams& p, int m, const Tau0Options& opt = {}) {
  if (m < 1 || m > p.upper_count()) {
    throw NonpositiveIndex("solve_tau0: index " + std::to_string(m) + " outside 1.." +
                           std::to_string(p.upper_count()));
  }
  const double am = std::abs(airy_zero(m));
  const double lhs_im = -2.0 * std::pow(am, 1.5) / (3.0 * p.u);
  for (const cplx seed : {cplx(0.0), cplx(0.0, 0.1), cplx(0.0, 0.2)}) {
    if (auto r = expansion_detail::newton_from(p, lhs_im, seed, opt)) return *r;
  }
  throw NewtonDivergence("solve_tau0: no convergence for n = " + std::to_string(p.n) +
                         ", m = " + std::to_string(m));
}

inline ZeroApprox tau_cascade(const ProblemParams& p, const LgTable& lg, int m, const Tau0Result& t0,
                              int terms = 5, const UpsilonOptions& uopt = {}) {
  if (terms < 1 || terms > 5) throw std::invalid_argument("tau_cascade: terms must be in 1..5");
  const AiryPoint pin = zeta_for_airy_zero(p, m, airy_zero(m));
  ZeroApprox za;
  za.m = m;
  za.newton_residual = t0.residual;
  za.newton_iters = t0.iters;
  za.terms_used = terms;
  za.low_confidence = p.n < 10;
  za.tau[0] = t0.tau0;
  if (terms > 1) {
    const MapState st = map_point_pinned(p, t0.tau0, pin);
    const UpsilonBundle U = upsilon_bundle(p, lg, st, uopt);
    const cplx z1 = st.d_zeta[0], z2 = st.d_zeta[1], z3 = st.d_zeta[2], z4 = st.d_zeta[3];
    const cplx t1 = -U.U1 / z1;
    const cplx t2 = -(t1 * t1 * z2 + 2.0 * t1 * U.dU1 + 2.0 * U.U2) / (2.0 * z1);
    const cplx t3 = -(t1 * t1 * t1 * z3 + 6.0 * t1 * t2 * z2 + 3.0 * t1 * t1 * U.d2U1 +
                      6.0 * t2 * U.dU1 + 6.0 * t1 * U.dU2 + 6.0 * U.U3) /
                    (6.0 * z1);
    const cplx t4 = -(t1 * t1 * t1 * t1 * z4 + 12.0 * t1 * t1 * t2 * z3 + 24.0 * t1 * t3 * z2 +
                      12.0 * t2 * t2 * z2 + 4.0 * t1 * t1 * t1 * U.d3U1 + 24.0 * t1 * t2 * U.d2U1 +
                      12.0 * t1 * t1 * U.d2U2 + 24.0 * t3 * U.dU1 + 24.0 * t2 * U.dU2 +
                      24.0 * t1 * U.dU3 + 24.0 * U.U4) /
                    (24.0 * z1);
    za.tau = {t0.tau0, t1, t2, t3, t4};
  }
  cplx sum = 0.0;
  const double u2 = p.u * p.u;
  double scale = 1.0;
  for (int s = 0; s < terms; ++s) {
    sum += za.tau[s] / scale;
    scale *= u2;
  }
  za.t = p.u * sum;
  // An odd-degree polynomial's real zero may come out with a tiny negative
  // imaginary part; its conjugate is the upper-half representative.
  if (za.t.imag() < 0.0) za.t = std::conj(za.t);
  return za;
}

inline ZeroApprox approx_zero(const ProblemParams& p, const LgTable& lg, int m, int terms = 5,
                              const UpsilonOptions& uopt = {}) {
  return tau_cascade(p, lg, m, solve_tau0(p, m), terms, uopt);
}

inline ZeroApprox approx_zero(const ProblemParams& p, int m, int terms = 5) {
  return approx_zero(p, make_lg_table(p), m, terms);
}

inline std::vector<ZeroApprox> approx_all(const ProblemParams& p, int terms = 5, unsigned threads = 1,
                                          const UpsilonOptions& uopt = {}) {
  if (terms < 1 || terms > 5) throw std::invalid_argument("approx_all: terms must be in 1..5");
  const LgTable lg = make_lg_table(p);
  const int M = p.upper_count();
  std::vector<ZeroApprox> out(M);
  std::vector<std::string> errors(M);
  parallel_for(M, threads, [&](int i) {
    try {
      out[i] = approx_zero(p, lg, i + 1, terms, uopt);
    } catch (const std::exception& e) {
      errors[i] = e.what();
    }
  });
  std::vector<int> bad;
  std::vector<std::string> msgs;
  for (int i = 0; i < M; ++i) {
    if (!errors[i].empty()) {
      bad.push_back(i + 1);
      msgs.push_back(errors[i]);
    }
  }
  if (!bad.empty()) {
    throw ApproxFailure("approx_all: " + std::to_string(bad.size()) + " of " + std::to_string(M) +
                            " indices failed",
                        bad, msgs);
  }
  return out;
}

}  // namespace rgbp
