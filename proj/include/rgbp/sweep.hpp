#pragma once

// Zero-to-zero marching for w'' + Omega w = 0, whose solution
// w = z^(1-n-a/2) e^(-z) theta_n(z; a) vanishes exactly at the zeros of theta_n.
// From an accepted zero z_i the predictor H(z) = z + pi/sqrt(Omega) lands near
// the next zero, and the fixed-point map T(z) = z - atan(sqrt(Omega) w/w')/sqrt(Omega)
// refines it. Values of (w, w') are carried from point to point by Taylor
// series built from the ODE, so theta_n itself is never evaluated during the
// march.

#include <algorithm>
#include <array>
#include <cmath>
#include <complex>
#include <numbers>
#include <optional>
#include <string>
#include <vector>

#include "error.hpp"
#include "params.hpp"
#include "poly_eval.hpp"
#include "zero_expansion.hpp"

namespace rgbp {

inline constexpr int kTaylorOrder = 16;  // K: derivatives 0..K are tabulated

struct SweepOptions {
  double eps = 1e-12;        // T-iteration tolerance
  double step_tol = 1e-15;   // Taylor truncation tolerance per sub-step
  int taylor_terms = 15;     // N, at most K - 1
  int max_T_iters = 30;
  int max_substeps = 100000;
  double seed_move_limit = 0.5;
};

inline cplx omega(int n, double a, cplx z) {
  if (z == 0.0) throw ZeroArgument("omega: z = 0");
  const double c = (n + 0.5 * a) * (n + 0.5 * a - 1.0);
  return -1.0 + (2.0 - a) / z - c / (z * z);
}

// Q = z^2 Omega, P = z^2.
inline cplx q_coeff(int n, double a, cplx z) {
  const double c = (n + 0.5 * a) * (n + 0.5 * a - 1.0);
  return -(z * z) + (2.0 - a) * z - c;
}

using TaylorTable = std::array<cplx, kTaylorOrder + 1>;

// derivs[k] = w^(k)(z0) for k = 0..K, from w(z0) = w0 and w'(z0) = dw0.
inline TaylorTable taylor_table(int n, double a, cplx z0, cplx w0, cplx dw0, int K = kTaylorOrder) {
  if (z0 == 0.0) throw ZeroArgument("taylor_table: z0 = 0");
  if (K < 3 || K > kTaylorOrder) throw std::invalid_argument("taylor_table: K out of range");
  const double c = (n + 0.5 * a) * (n + 0.5 * a - 1.0);
  const cplx P = z0 * z0;
  const cplx Q = q_coeff(n, a, z0);
  TaylorTable d{};
  d[0] = w0;
  d[1] = dw0;
  d[2] = -(Q / P) * w0;
  d[3] = -(Q / P) * dw0 + ((2.0 - a) / P - 2.0 * c / (P * z0)) * w0;
  for (int k = 2; k + 2 <= K; ++k) {
    const double kk = k;
    d[k + 2] = -(2.0 * kk * z0 * d[k + 1] + (Q + kk * (kk - 1.0)) * d[k] -
                 kk * (2.0 * z0 + a - 2.0) * d[k - 1] - kk * (kk - 1.0) * d[k - 2]) /
               P;
  }
  return d;
}

struct StepResult {
  cplx w, dw;
  double error_estimate = 0.0;
};

// Both sums evaluated by Horner in h; the error estimate is the size of the
// last retained terms.
inline StepResult taylor_sum(const TaylorTable& d, cplx h, int N) {
  std::array<double, kTaylorOrder + 1> inv_fact{};
  inv_fact[0] = 1.0;
  for (int k = 1; k <= kTaylorOrder; ++k) inv_fact[k] = inv_fact[k - 1] / k;
  cplx w = d[N] * inv_fact[N];
  cplx dw = d[N + 1] * inv_fact[N];
  for (int k = N - 1; k >= 0; --k) {
    w = w * h + d[k] * inv_fact[k];
    dw = dw * h + d[k + 1] * inv_fact[k];
  }
  const double hN = std::pow(std::abs(h), N) * inv_fact[N];
  return {w, dw, (std::abs(d[N]) + std::abs(d[N + 1])) * hN};
}

inline std::optional<StepResult> try_taylor_step(const TaylorTable& d, cplx h, int N, double tol) {
  if (N < 1 || N > kTaylorOrder - 1) throw std::invalid_argument("taylor_step: N out of range");
  StepResult r = taylor_sum(d, h, N);
  const double scale = std::max({std::abs(r.w), std::abs(r.dw), 1.0});
  if (!(r.error_estimate <= tol * scale)) return std::nullopt;
  return r;
}

inline StepResult taylor_step(const TaylorTable& d, cplx h, int N = 15, double tol = 1e-15) {
  if (auto r = try_taylor_step(d, h, N, tol)) return *r;
  throw StepTooLarge("taylor_step: truncation estimate exceeds tolerance; halve the step");
}

struct Transported {
  cplx w, dw;
  int substeps = 0;
};

// Carry (w, w') from `from` to `to` by sub-stepped Taylor series.
inline Transported transport(int n, double a, cplx from, cplx w, cplx dw, cplx to,
                             const SweepOptions& opt = {}) {
  Transported out{w, dw, 0};
  cplx z = from;
  double h_try = std::abs(to - from);
  int guard = 0;
  while (z != to) {
    const cplx rem = to - z;
    const double rem_abs = std::abs(rem);
    double len = std::min(h_try, rem_abs);
    const TaylorTable d = taylor_table(n, a, z, out.w, out.dw);
    for (;;) {
      if (++guard > opt.max_substeps) {
        throw StepTooLarge("transport: sub-step budget exhausted");
      }
      const cplx h = (len >= rem_abs) ? rem : rem * (len / rem_abs);
      if (auto r = try_taylor_step(d, h, opt.taylor_terms, opt.step_tol)) {
        out.w = r->w;
        out.dw = r->dw;
        z = (len >= rem_abs) ? to : z + h;
        ++out.substeps;
        h_try = 2.0 * len;
        break;
      }
      len *= 0.5;
      if (len < 1e-14 * (1.0 + std::abs(z))) {
        throw StepTooLarge("transport: step underflow");
      }
    }
  }
  return out;
}

inline cplx sqrt_omega(int n, double a, cplx z) { return std::sqrt(omega(n, a, z)); }

// One application of T given the ratio q = w / w' at z.
inline cplx T_update(int n, double a, cplx z, cplx q) {
  const cplx s = sqrt_omega(n, a, z);
  return z - std::atan(s * q) / s;
}

struct TIterResult {
  cplx z;
  int iterations = 0;
  int substeps = 0;
};

// T-iteration starting at z with (w, w') known there; (w, w') is carried along
// from each iterate to the next.
inline TIterResult iterate_T(int n, double a, cplx z, cplx w, cplx dw, const SweepOptions& opt = {}) {
  TIterResult res{z, 0, 0};
  for (int it = 1; it <= opt.max_T_iters; ++it) {
    const cplx s = sqrt_omega(n, a, res.z);
    const cplx znew = res.z - std::atan(s * (w / dw)) / s;
    const cplx delta = znew - res.z;
    res.iterations = it;
    if (!std::isfinite(znew.real()) || !std::isfinite(znew.imag()) ||
        std::abs(delta) > 0.5 * std::numbers::pi / std::abs(s)) {
      throw IterationDivergence("iterate_T: update left the basin of the current zero");
    }
    if (std::abs(delta) <= opt.eps * (1.0 + std::abs(res.z))) {
      res.z = znew;
      return res;
    }
    const Transported t = transport(n, a, res.z, w, dw, znew, opt);
    res.substeps += t.substeps;
    w = t.w;
    dw = t.dw;
    res.z = znew;
  }
  throw IterationDivergence("iterate_T: no convergence within the iteration limit");
}

// T-iteration with w / w' evaluated directly from the polynomial.
inline TIterResult polish_direct(int n, double a, cplx z, const SweepOptions& opt = {}) {
  TIterResult res{z, 0, 0};
  for (int it = 1; it <= opt.max_T_iters; ++it) {
    const cplx znew = T_update(n, a, res.z, w_over_dw(n, a, res.z));
    res.iterations = it;
    if (!std::isfinite(znew.real()) || !std::isfinite(znew.imag())) {
      throw IterationDivergence("polish: non-finite iterate");
    }
    const cplx delta = znew - res.z;
    res.z = znew;
    if (std::abs(delta) <= opt.eps * (1.0 + std::abs(res.z))) return res;
  }
  throw IterationDivergence("polish: no convergence within the iteration limit");
}

struct SweepRecord {
  cplx z;
  int T_iterations = 0;
  int substeps = 0;
  std::string how;  // "seed", "seed-polished", "seed5-polished", "step", "half-step", ...
};

struct SweepReport {
  std::vector<SweepRecord> zeros;
  cplx seed;
};

namespace sweep_detail {

inline cplx snap_real(cplx z, double eps) {
  if (std::abs(z.imag()) <= 10.0 * eps * (1.0 + std::abs(z.real()))) return {z.real(), 0.0};
  return z;
}

inline std::vector<cplx> values(const std::vector<SweepRecord>& r) {
  std::vector<cplx> v;
  v.reserve(r.size());
  for (const auto& x : r) v.push_back(x.z);
  return v;
}

inline SweepRecord first_zero(const ProblemParams& p, const LgTable& lg, const SweepOptions& opt, cplx& seed_out) {
  const Tau0Result t0 = solve_tau0(p, 1);
  const ZeroApprox a3 = tau_cascade(p, lg, 1, t0, 3);
  const ZeroApprox a5 = tau_cascade(p, lg, 1, t0, 5);
  seed_out = a3.t;
  if (std::abs(a5.t - a3.t) <= opt.eps * std::abs(a3.t)) {
    return {a3.t, 0, 0, "seed"};
  }
  try {
    const TIterResult r = polish_direct(p.n, p.a, a3.t, opt);
    if (std::abs(r.z - a3.t) <= opt.seed_move_limit) return {r.z, r.iterations, 0, "seed-polished"};
  } catch (const IterationDivergence&) {
  }
  const TIterResult r = polish_direct(p.n, p.a, a5.t, opt);
  return {r.z, r.iterations, 0, "seed5-polished"};
}

}  // namespace sweep_detail

inline SweepReport sweep_detailed(const ProblemParams& p, const SweepOptions& opt = {}) {
  const int M = p.upper_count();
  const LgTable lg = make_lg_table(p, 7);
  SweepReport rep;
  SweepRecord first = sweep_detail::first_zero(p, lg, opt, rep.seed);
  first.z = sweep_detail::snap_real(first.z, opt.eps);
  rep.zeros.push_back(first);

  for (int m = 2; m <= M; ++m) {
    const cplx zi = rep.zeros.back().z;
    cplx step = std::numbers::pi / sqrt_omega(p.n, p.a, zi);
    if (step.imag() > 0.0) step = -step;
    std::optional<SweepRecord> rec;
    std::string last_error;
    for (const double frac : {1.0, 0.5, 0.75}) {
      try {
        const cplx trial = zi + frac * step;
        const Transported t = transport(p.n, p.a, zi, 0.0, 1.0, trial, opt);
        const TIterResult r = iterate_T(p.n, p.a, trial, t.w, t.dw, opt);
        if (std::abs(r.z - zi) < 0.25 * std::abs(step)) {
          last_error = "converged back to the previous zero";
          continue;
        }
        rec = SweepRecord{r.z, r.iterations, t.substeps + r.substeps,
                          frac == 1.0 ? "step" : (frac == 0.5 ? "half-step" : "three-quarter-step")};
        break;
      } catch (const Error& e) {
        last_error = e.what();
      }
    }
    if (!rec) {
      throw SweepStalled("sweep: zero " + std::to_string(m) + " not found (" + last_error + ")",
                         sweep_detail::values(rep.zeros));
    }
    rec->z = sweep_detail::snap_real(rec->z, opt.eps);
    if (rec->z.imag() < 0.0) rec->z = std::conj(rec->z);
    if (!(rec->z.imag() < zi.imag())) {
      throw SweepStalled("sweep: zero " + std::to_string(m) + " does not lie below its predecessor",
                         sweep_detail::values(rep.zeros));
    }
    rep.zeros.push_back(*rec);
  }
  return rep;
}

// Upper half-plane zeros, largest imaginary part first.
inline std::vector<cplx> sweep(const ProblemParams& p, const SweepOptions& opt = {}) {
  return sweep_detail::values(sweep_detailed(p, opt).zeros);
}

inline std::vector<cplx> sweep(int n, double a, double eps = 1e-12) {
  SweepOptions opt;
  opt.eps = eps;
  return sweep(make_params(n, a), opt);
}

// All n zeros: the upper-half zeros and their conjugates, real zeros once.
inline std::vector<cplx> full_spectrum(const std::vector<cplx>& upper) {
  std::vector<cplx> out;
  for (const cplx& z : upper) {
    out.push_back(z);
    if (z.imag() != 0.0) out.push_back(std::conj(z));
  }
  return out;
}

}  // namespace rgbp
