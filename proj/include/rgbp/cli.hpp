#pragma once

// Command-line front end: zeros, approx, validate, bench. Kept in a header so
// the tests can drive run() with captured streams.

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <charconv>
#include <chrono>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "error.hpp"
#include "oracle.hpp"
#include "params.hpp"
#include "parallel.hpp"
#include "poly_eval.hpp"
#include "sweep.hpp"
#include "zero_expansion.hpp"

namespace rgbp::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitFailure = 1;
inline constexpr int kExitPartial = 2;
inline constexpr int kExitUsage = 64;

struct RunConfig {
  std::string command;
  int n = 0;
  double a = 0.0;
  std::string method = "sweep";
  int terms = 5;
  double eps = 1e-12;
  std::string format = "csv";
  std::string output;  // empty: standard output
  double delta1 = 0.9;
  double delta2 = 10.0;
  double gate = 1e-10;              // validate
  std::vector<int> sizes{30, 200, 500, 1000, 2000};  // bench
  int runs = 5;                     // bench
};

// Shortest decimal string that reads back to the same double.
inline std::string format_number(double x) {
  char buf[64];
  const auto res = std::to_chars(buf, buf + sizeof buf, x);
  return std::string(buf, res.ptr);
}

struct ZeroRow {
  int m = 0;
  cplx z;
  double residual = 0.0;
  std::string method;
  int terms = 0;
  std::optional<std::array<cplx, 5>> tau;
};

struct ZeroTable {
  ProblemParams p;
  std::string method;
  int terms = 0;
  double eps = 0.0;
  bool partial = false;
  std::vector<ZeroRow> rows;
};

inline std::string render_csv(const ZeroTable& t) {
  std::ostringstream os;
  os << "# conjugates_implied: true\n";
  if (t.partial) os << "# partial: true\n";
  os << "m,re,im,residual,method,terms\n";
  for (const ZeroRow& r : t.rows) {
    os << r.m << ',' << format_number(r.z.real()) << ',' << format_number(r.z.imag()) << ','
       << format_number(r.residual) << ',' << r.method << ',' << r.terms << '\n';
  }
  return os.str();
}

inline nlohmann::json meta_json(const ProblemParams& p) {
  return {{"n", p.n}, {"a", p.a}, {"u", p.u}, {"alpha", p.alpha}};
}

inline std::string render_json(const ZeroTable& t) {
  nlohmann::json meta = meta_json(t.p);
  meta["method"] = t.method;
  meta["terms"] = t.terms;
  meta["eps"] = t.eps;
  meta["conjugates_implied"] = true;
  meta["partial"] = t.partial;
  nlohmann::json zs = nlohmann::json::array();
  for (const ZeroRow& r : t.rows) {
    nlohmann::json z = {{"m", r.m},           {"re", r.z.real()},     {"im", r.z.imag()},
                        {"residual", r.residual}, {"method", r.method}, {"terms", r.terms}};
    if (r.tau) {
      nlohmann::json tau = nlohmann::json::array();
      for (const cplx& c : *r.tau) tau.push_back({c.real(), c.imag()});
      z["tau"] = tau;
    }
    zs.push_back(z);
  }
  return nlohmann::json{{"meta", meta}, {"zeros", zs}}.dump(2) + "\n";
}

namespace detail {

inline void emit(const RunConfig& cfg, const std::string& text, std::ostream& out) {
  if (cfg.output.empty()) {
    out << text;
    return;
  }
  std::ofstream f(cfg.output);
  if (!f) throw std::runtime_error("cannot open " + cfg.output + " for writing");
  f << text;
}

inline ProblemParams params_of(const RunConfig& cfg) {
  return make_params(cfg.n, cfg.a, Admissibility{cfg.delta1, cfg.delta2});
}

inline ZeroTable asymptotic_table(const RunConfig& cfg, const ProblemParams& p) {
  ZeroTable t{p, "asymptotic", cfg.terms, cfg.eps, false, {}};
  for (const ZeroApprox& za : approx_all(p, cfg.terms, default_threads())) {
    ZeroRow r{za.m, za.t, relative_residual(p.n, p.a, za.t), "asymptotic", cfg.terms, std::nullopt};
    if (cfg.command == "approx") r.tau = za.tau;
    t.rows.push_back(r);
  }
  return t;
}

// Partial sweeps come back with partial = true and rows flagged "sweep-partial".
inline ZeroTable sweep_table(const RunConfig& cfg, const ProblemParams& p, std::string* diagnostic) {
  ZeroTable t{p, "sweep", 3, cfg.eps, false, {}};
  SweepOptions opt;
  opt.eps = cfg.eps;
  std::vector<cplx> zs;
  try {
    zs = sweep(p, opt);
  } catch (const SweepStalled& e) {
    zs = e.zeros();
    t.partial = true;
    if (diagnostic) *diagnostic = e.what();
  }
  const std::string tag = t.partial ? "sweep-partial" : "sweep";
  for (std::size_t i = 0; i < zs.size(); ++i) {
    t.rows.push_back({int(i) + 1, zs[i], relative_residual(p.n, p.a, zs[i]), tag, 3, std::nullopt});
  }
  return t;
}

inline std::string render(const RunConfig& cfg, const ZeroTable& t) {
  return cfg.format == "json" ? render_json(t) : render_csv(t);
}

inline int report_failure(const std::exception& e, std::ostream& err) {
  if (const auto* af = dynamic_cast<const ApproxFailure*>(&e)) {
    for (std::size_t i = 0; i < af->indices().size(); ++i) {
      err << "error: m = " << af->indices()[i] << ": " << af->messages()[i] << '\n';
    }
    return kExitFailure;
  }
  err << "error: " << e.what() << '\n';
  return kExitFailure;
}

inline double median(std::vector<double> v) {
  if (v.empty()) return 0.0;
  std::sort(v.begin(), v.end());
  const std::size_t k = v.size() / 2;
  return v.size() % 2 ? v[k] : 0.5 * (v[k - 1] + v[k]);
}

// Relative distance from z to the nearest entry of ref.
inline double nearest_relative(cplx z, const std::vector<cplx>& ref) {
  double best = std::numeric_limits<double>::infinity();
  for (const cplx& r : ref) best = std::min(best, std::abs(z - r) / std::abs(r));
  return best;
}

}  // namespace detail

inline int cmd_zeros(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  const ProblemParams p = detail::params_of(cfg);
  if (cfg.method == "asymptotic") {
    detail::emit(cfg, detail::render(cfg, detail::asymptotic_table(cfg, p)), out);
    return kExitOk;
  }
  std::string diag;
  const ZeroTable t = detail::sweep_table(cfg, p, &diag);
  detail::emit(cfg, detail::render(cfg, t), out);
  if (t.partial) {
    err << "error: " << diag << '\n';
    return kExitPartial;
  }
  return kExitOk;
}

inline int cmd_validate(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  const ProblemParams p = detail::params_of(cfg);
  const std::vector<cplx> ref = oracle_upper_zeros(p.n, p.a);
  const bool do_asym = cfg.method != "sweep";
  const bool do_sweep = cfg.method != "asymptotic";

  nlohmann::json rows = nlohmann::json::array();
  nlohmann::json failures = nlohmann::json::array();
  std::vector<double> asym_err, sweep_err;
  std::vector<std::optional<ZeroApprox>> approx(p.upper_count());
  if (do_asym) {
    const LgTable lg = make_lg_table(p);
    std::vector<std::string> msgs(p.upper_count());
    parallel_for(p.upper_count(), default_threads(), [&](int i) {
      try {
        approx[i] = approx_zero(p, lg, i + 1, cfg.terms);
      } catch (const std::exception& e) {
        msgs[i] = e.what();
      }
    });
    for (int i = 0; i < p.upper_count(); ++i) {
      if (!msgs[i].empty()) failures.push_back({{"m", i + 1}, {"method", "asymptotic"}, {"error", msgs[i]}});
    }
  }
  std::vector<cplx> sw;
  if (do_sweep) {
    std::string diag;
    const ZeroTable t = detail::sweep_table(cfg, p, &diag);
    for (const ZeroRow& r : t.rows) sw.push_back(r.z);
    if (t.partial) failures.push_back({{"method", "sweep"}, {"error", diag}});
  }

  for (int i = 0; i < p.upper_count(); ++i) {
    nlohmann::json row = {{"m", i + 1}};
    if (i < int(ref.size())) row["oracle"] = {ref[i].real(), ref[i].imag()};
    if (approx[i]) {
      const double e = detail::nearest_relative(approx[i]->t, ref);
      asym_err.push_back(e);
      row["asymptotic"] = {approx[i]->t.real(), approx[i]->t.imag()};
      row["asymptotic_rel_err"] = e;
    }
    if (i < int(sw.size())) {
      const double e = detail::nearest_relative(sw[i], ref);
      sweep_err.push_back(e);
      row["sweep"] = {sw[i].real(), sw[i].imag()};
      row["sweep_rel_err"] = e;
    }
    rows.push_back(row);
  }

  auto summary = [](const std::vector<double>& v) {
    if (v.empty()) return nlohmann::json(nullptr);
    return nlohmann::json{{"max", *std::max_element(v.begin(), v.end())}, {"median", detail::median(v)}};
  };
  bool pass = failures.empty();
  for (double e : asym_err) pass = pass && e <= cfg.gate;
  for (double e : sweep_err) pass = pass && e <= cfg.gate;

  nlohmann::json meta = meta_json(p);
  meta["terms"] = cfg.terms;
  meta["eps"] = cfg.eps;
  meta["gate"] = cfg.gate;
  meta["method"] = do_asym && do_sweep ? "both" : cfg.method;
  nlohmann::json report = {{"meta", meta},
                           {"zeros", rows},
                           {"asymptotic", summary(asym_err)},
                           {"sweep", summary(sweep_err)},
                           {"failures", failures},
                           {"pass", pass}};
  detail::emit(cfg, report.dump(2) + "\n", out);
  for (const auto& f : failures) err << "error: " << f["error"].get<std::string>() << '\n';
  if (!pass && failures.empty()) err << "error: relative error above gate " << cfg.gate << '\n';
  return pass ? kExitOk : kExitFailure;
}

inline int cmd_bench(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  using clock = std::chrono::steady_clock;
  std::ostringstream os;
  os << "n,a,seconds,zeros\n";
  for (int n : cfg.sizes) {
    const ProblemParams p = make_params(n, cfg.a, Admissibility{cfg.delta1, cfg.delta2});
    SweepOptions opt;
    opt.eps = cfg.eps;
    std::size_t count = sweep(p, opt).size();  // warm-up: Airy cache, page faults
    std::vector<double> times;
    for (int r = 0; r < cfg.runs; ++r) {
      const auto t0 = clock::now();
      count = sweep(p, opt).size();
      times.push_back(std::chrono::duration<double>(clock::now() - t0).count());
    }
    os << n << ',' << format_number(cfg.a) << ',' << format_number(detail::median(times)) << ',' << count
       << '\n';
  }
  (void)err;
  detail::emit(cfg, os.str(), out);
  return kExitOk;
}

inline int dispatch(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  try {
    if (cfg.command == "validate" && cfg.n > 200) {
      err << "error: validate requires n <= 200 (oracle bound)\n";
      return kExitUsage;
    }
    if (cfg.command == "zeros" || cfg.command == "approx") return cmd_zeros(cfg, out, err);
    if (cfg.command == "validate") return cmd_validate(cfg, out, err);
    if (cfg.command == "bench") return cmd_bench(cfg, out, err);
    err << "error: unknown command '" << cfg.command << "'\n";
    return kExitUsage;
  } catch (const ParameterOutOfRange& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const InvalidDegree& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::exception& e) {
    return detail::report_failure(e, err);
  }
}

inline int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Zeros of reverse generalized Bessel polynomials theta_n(z; a)", "rgbp"};
  app.require_subcommand(1);
  RunConfig cfg;

  auto add_problem = [&cfg](CLI::App* sc) {
    sc->add_option("--n", cfg.n, "degree")->required()->check(CLI::PositiveNumber);
    sc->add_option("--a", cfg.a, "parameter a")->required();
    sc->add_option("--eps", cfg.eps, "sweep convergence tolerance")->check(CLI::PositiveNumber);
    sc->add_option("--output,-o", cfg.output, "output file (default: stdout)");
    sc->add_option("--delta1", cfg.delta1, "admissibility: a >= -delta1*n + 3/2");
    sc->add_option("--delta2", cfg.delta2, "admissibility: a <= delta2*n");
  };

  CLI::App* zeros = app.add_subcommand("zeros", "upper half-plane zeros");
  add_problem(zeros);
  zeros->add_option("--method", cfg.method)->check(CLI::IsMember({"sweep", "asymptotic"}));
  zeros->add_option("--terms", cfg.terms, "asymptotic terms")->check(CLI::Range(1, 5));
  zeros->add_option("--format", cfg.format)->check(CLI::IsMember({"csv", "json"}));

  CLI::App* approx = app.add_subcommand("approx", "asymptotic approximations with tau coefficients");
  add_problem(approx);
  approx->add_option("--terms", cfg.terms, "asymptotic terms")->check(CLI::Range(1, 5));
  approx->add_option("--format", cfg.format)->check(CLI::IsMember({"csv", "json"}));

  CLI::App* validate = app.add_subcommand("validate", "compare against the multiprecision oracle");
  add_problem(validate);
  validate->add_option("--method", cfg.method, "check only one method (default: both)")
      ->check(CLI::IsMember({"sweep", "asymptotic"}));
  validate->add_option("--terms", cfg.terms)->check(CLI::Range(1, 5));
  validate->add_option("--gate", cfg.gate, "maximum allowed relative error");

  CLI::App* bench = app.add_subcommand("bench", "sweep timings");
  cfg.a = 2.3;
  bench->add_option("--a", cfg.a, "parameter a");
  bench->add_option("--sizes", cfg.sizes, "degrees to time")->delimiter(',');
  bench->add_option("--runs", cfg.runs, "timed runs per degree")->check(CLI::PositiveNumber);
  bench->add_option("--eps", cfg.eps)->check(CLI::PositiveNumber);
  bench->add_option("--output,-o", cfg.output);

  bool method_given = false;
  try {
    app.parse(argc, argv);
    method_given = (zeros->parsed() && zeros->count("--method") > 0) ||
                   (validate->parsed() && validate->count("--method") > 0);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }
  if (approx->parsed()) {
    cfg.command = "approx";
    cfg.method = "asymptotic";
  } else if (validate->parsed()) {
    cfg.command = "validate";
    if (!method_given) cfg.method = "both";
  } else {
    cfg.command = zeros->parsed() ? "zeros" : "bench";
  }
  return dispatch(cfg, out, err);
}

}  // namespace rgbp::cli
