// Command-line front end: verification suites, single-shot operator and
// special-function evaluation, Fourier/ODE checks, and the MJ predicate
// runner.  Exit codes: 0 pass, 1 check failure, 2 configuration error.

#include <CLI11.hpp>
#include <json.hpp>

#include <complex>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

#include "sl21/bessel.hpp"
#include "sl21/catalog.hpp"
#include "sl21/expr.hpp"
#include "sl21/fourier.hpp"
#include "sl21/group.hpp"
#include "sl21/metric.hpp"
#include "sl21/operators.hpp"
#include "sl21/report.hpp"
#include "sl21/rng.hpp"
#include "sl21/version.hpp"

namespace {

using C = std::complex<double>;
using sl21::SmoothMap;

constexpr int kExitPass = 0;
constexpr int kExitCheckFailure = 1;
constexpr int kExitConfigError = 2;

C parse_complex(const std::string& text) {
  std::istringstream in(text);
  double re = 0, im = 0;
  char comma = 0;
  if (!(in >> re)) throw std::invalid_argument("bad complex number '" + text + "'");
  if (in >> comma) {
    if (comma != ',' || !(in >> im))
      throw std::invalid_argument("bad complex number '" + text + "'");
  }
  return {re, im};
}

std::vector<double> parse_point(const std::string& text, std::size_t want) {
  std::vector<double> out;
  std::stringstream in(text);
  std::string tok;
  while (std::getline(in, tok, ',')) out.push_back(std::stod(tok));
  if (out.size() != want)
    throw std::invalid_argument("point '" + text + "' must have " + std::to_string(want) +
                                " coordinates");
  return out;
}

std::vector<std::string> chart_variables(sl21::Chart chart) {
  switch (chart) {
    case sl21::Chart::HC: return {"x", "y", "u", "v"};
    case sl21::Chart::PV: return {"x", "y", "v1", "v2"};
    case sl21::Chart::G1: return {"x", "y", "theta", "a1", "a2"};
  }
  return {};
}

// A function argument is either a catalog id (with --s / --a parameters) or
// an expression in the chart variables.
struct FnSpec {
  SmoothMap f;
  std::optional<C> eigenvalue;  // known for catalog entries
};

FnSpec resolve_function(const std::string& text, sl21::Chart chart, C s, double a) {
  const auto ids = sl21::catalog_ids();
  if (std::find(ids.begin(), ids.end(), text) != ids.end()) {
    if (chart != sl21::Chart::HC)
      throw std::invalid_argument("catalog entries live on the H x C chart");
    const sl21::CatalogEntry e = sl21::catalog_entry(text, s, a);
    return {e.f, e.eigenvalue};
  }
  return {sl21::parse_expression(text, chart_variables(chart)), std::nullopt};
}

void emit_report(const sl21::Report& rep, const std::string& out_path) {
  const std::string json = sl21::report_to_json(rep);
  for (const auto& c : rep.checks) {
    std::printf("%s %-34s residual %.3e tol %.3e (%d samples)\n", c.pass ? "PASS" : "FAIL",
                c.id.c_str(), c.max_residual, c.tolerance, c.samples);
  }
  std::printf("overall: %s (%zu checks)\n", rep.pass ? "PASS" : "FAIL", rep.checks.size());
  if (!out_path.empty()) {
    std::ofstream f(out_path, std::ios::binary);
    if (!f) throw std::invalid_argument("cannot write report to '" + out_path + "'");
    f << json;
  } else {
    std::fputs(json.c_str(), stdout);
  }
}

int cmd_verify(const sl21::RunConfig& cfg) {
  const sl21::Report rep = sl21::run_suite(cfg);
  emit_report(rep, cfg.out_path);
  return rep.pass ? kExitPass : kExitCheckFailure;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"verification tool for the Jacobi-type group SL(2,R) x| R^(1,2), its invariant "
               "geometry on H x C, and the associated Maass form machinery"};
  app.set_version_flag("--version", sl21::kVersion);
  app.require_subcommand(1);

  // ---- verify ----
  auto* verify = app.add_subcommand("verify", "run verification suites and emit a JSON report");
  std::string v_suite = "all", v_out, v_config;
  int v_samples = 100, v_jet_cap = 4;
  std::uint64_t v_seed = 42;
  std::vector<std::string> v_tols;
  auto* o_suite = verify->add_option("--suite", v_suite, "suite name or 'all'");
  auto* o_samples = verify->add_option("--samples", v_samples, "sample count per property");
  auto* o_seed = verify->add_option("--seed", v_seed, "RNG seed (64-bit)");
  verify->add_option("--tol-override", v_tols, "per-check tolerance override key=val")
      ->take_all();
  auto* o_out = verify->add_option("--out", v_out, "write the JSON report to this path");
  auto* o_cap = verify->add_option("--jet-order-cap", v_jet_cap, "maximum jet order (1..4)");
  verify->add_option("--config", v_config, "JSON config file (flags take precedence)");
  verify->add_flag_callback("--list-suites", [] {
    for (const auto& n : sl21::suite_names()) std::puts(n.c_str());
    std::exit(kExitPass);
  });

  // ---- apply-op ----
  auto* applyc = app.add_subcommand("apply-op", "apply a differential operator at a point");
  std::string a_op = "Delta", a_fn = "y^s", a_point = "0,1,0,0", a_s = "1.5";
  double a_alpha = 1, a_beta = 1, a_a = 1;
  applyc->add_option("--op", a_op,
                     "operator: D Psi D1 D2 Delta DeltaAB DeltaTilde Delta0 bracketRHS dv "
                     "L1..L5 R1..R5 A1..A5");
  applyc->add_option("--fn", a_fn, "catalog id or expression in the chart variables");
  applyc->add_option("--point", a_point, "chart point, e.g. x,y,u,v");
  applyc->add_option("--s", a_s, "catalog parameter s as RE[,IM]");
  applyc->add_option("--a", a_a, "catalog frequency parameter");
  applyc->add_option("--alpha", a_alpha, "DeltaAB alpha > 0");
  applyc->add_option("--beta", a_beta, "DeltaAB beta > 0");

  // ---- bessel ----
  auto* bessel = app.add_subcommand("bessel", "evaluate K_s(z)");
  std::string b_s = "0.5", b_z = "1";
  bessel->add_option("--s", b_s, "order, RE[,IM]");
  bessel->add_option("--z", b_z, "argument, RE[,IM], Re z > 0");

  // ---- curvature ----
  auto* curv = app.add_subcommand("curvature", "sample the scalar curvature of the H x C metric");
  int c_points = 20;
  std::uint64_t c_seed = 42;
  curv->add_option("--points", c_points, "number of sample points");
  curv->add_option("--seed", c_seed, "RNG seed");

  // ---- fourier ----
  auto* four = app.add_subcommand(
      "fourier", "Fourier-coefficient ODE check for the classical eigenfunction");
  int f_n = 1, f_r = 0;
  std::string f_s = "1.3";
  four->add_option("--n", f_n, "x-frequency index (nonzero)");
  four->add_option("--r", f_r, "u-frequency index");
  four->add_option("--s", f_s, "spectral parameter s as RE[,IM]");

  // ---- check-mj ----
  auto* mj = app.add_subcommand("check-mj", "run the MJ1-MJ3 predicates on a candidate function");
  std::string m_fn = "1", m_lambda = "0", m_out;
  double m_bound = 10;
  int m_samples = 60;
  std::uint64_t m_seed = 42;
  mj->add_option("--fn", m_fn, "catalog id or expression in x,y,u,v");
  mj->add_option("--lambda", m_lambda, "candidate eigenvalue RE[,IM]");
  mj->add_option("--bound", m_bound, "growth bound reported by MJ3");
  mj->add_option("--samples", m_samples, "sample count");
  mj->add_option("--seed", m_seed, "RNG seed");
  mj->add_option("--out", m_out, "write the JSON report to this path");
  std::string m_s = "1.2";
  double m_a = 1;
  mj->add_option("--s", m_s, "catalog parameter s");
  mj->add_option("--a", m_a, "catalog frequency parameter");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? kExitPass : kExitConfigError;
  }

  try {
    if (verify->parsed()) {
      sl21::RunConfig cfg;
      if (!v_config.empty()) {
        std::ifstream in(v_config);
        if (!in) throw std::invalid_argument("cannot read config file '" + v_config + "'");
        nlohmann::json j = nlohmann::json::parse(in);
        cfg.suite = j.value("suite", cfg.suite);
        cfg.samples = j.value("samples", cfg.samples);
        cfg.seed = j.value("seed", cfg.seed);
        cfg.jet_order_cap = j.value("jet_order_cap", cfg.jet_order_cap);
        cfg.out_path = j.value("out", cfg.out_path);
        if (j.contains("tol_overrides"))
          for (const auto& [k, v] : j["tol_overrides"].items())
            cfg.tol_overrides[k] = v.get<double>();
      }
      if (o_suite->count()) cfg.suite = v_suite;
      if (o_samples->count()) cfg.samples = v_samples;
      if (o_seed->count()) cfg.seed = v_seed;
      if (o_cap->count()) cfg.jet_order_cap = v_jet_cap;
      if (o_out->count()) cfg.out_path = v_out;
      for (const std::string& kv : v_tols) {
        const auto eq = kv.find('=');
        if (eq == std::string::npos)
          throw std::invalid_argument("tolerance override must be key=val, got '" + kv + "'");
        cfg.tol_overrides[kv.substr(0, eq)] = std::stod(kv.substr(eq + 1));
      }
      return cmd_verify(cfg);
    }

    if (applyc->parsed()) {
      const sl21::OperatorId op = [&] {
        sl21::OperatorId id = sl21::OperatorId::parse(a_op);
        if (id.kind == sl21::OperatorId::Kind::DeltaAlphaBeta) id = sl21::op_Delta_ab(a_alpha, a_beta);
        return id;
      }();
      const auto vars = chart_variables(op.chart());
      const auto pt = parse_point(a_point, vars.size());
      const FnSpec fn = resolve_function(a_fn, op.chart(), parse_complex(a_s), a_a);
      C value;
      switch (op.chart()) {
        case sl21::Chart::HC:
          value = sl21::apply(op, fn.f, sl21::PointHC(pt[0], pt[1], pt[2], pt[3]));
          break;
        case sl21::Chart::PV:
          value = sl21::apply(op, fn.f, sl21::PointPV(pt[0], pt[1], pt[2], pt[3]));
          break;
        case sl21::Chart::G1:
          value = sl21::apply(op, fn.f, sl21::GCoord(pt[0], pt[1], pt[2], pt[3], pt[4]));
          break;
      }
      std::printf("%s[%s](%s) = %.17g %+.17gi\n", op.name().c_str(), a_fn.c_str(),
                  a_point.c_str(), value.real(), value.imag());
      if (fn.eigenvalue) {
        std::printf("catalog eigenvalue: %.17g %+.17gi\n", fn.eigenvalue->real(),
                    fn.eigenvalue->imag());
      }
      return kExitPass;
    }

    if (bessel->parsed()) {
      const sl21::BesselResult r = sl21::bessel_K_full(parse_complex(b_s), parse_complex(b_z));
      std::printf("K_s(z) = %.17g %+.17gi\n", r.value.real(), r.value.imag());
      std::printf("error estimate: %.3e (%s)\n", r.error_estimate,
                  r.converged ? "converged" : "NOT CONVERGED");
      return r.converged ? kExitPass : kExitCheckFailure;
    }

    if (curv->parsed()) {
      sl21::Rng rng(c_seed);
      const sl21::MetricField m = sl21::metric_ds2();
      double worst = 0;
      for (int i = 0; i < c_points; ++i) {
        const std::array<double, 4> p{rng.uniform(-4, 4), rng.uniform(0.3, 4.0),
                                      rng.uniform(-4, 4), rng.uniform(-4, 4)};
        const auto rep = sl21::scalar_curvature(m, p);
        worst = std::max(worst, std::abs(rep.scalar_curvature + 3.0));
        std::printf("R(%.3f, %.3f, %.3f, %.3f) = %.12f\n", p[0], p[1], p[2], p[3],
                    rep.scalar_curvature);
      }
      std::printf("max |R - (-3)| = %.3e over %d points\n", worst, c_points);
      return worst <= 1e-6 ? kExitPass : kExitCheckFailure;
    }

    if (four->parsed()) {
      if (f_n == 0) throw std::invalid_argument("--n must be nonzero");
      const C s = parse_complex(f_s);
      const C lambda = s * (s - 1.0);
      const sl21::CatalogEntry e = sl21::catalog_entry("whittaker", s, f_n);
      if (f_r != 0) {
        // orthogonality: the classical eigenfunction has no u-dependence
        double worst = 0;
        for (double y : {0.6, 1.1, 2.3}) {
          const sl21::FourierTable t =
              sl21::fourier_coefficients(e.f, std::abs(f_n), std::abs(f_r), y, 0.3);
          worst = std::max(worst, std::abs(t.at(f_n, f_r)));
        }
        std::printf("|c_{%d,%d}| = %.3e (vanishes: no u-dependence)\n", f_n, f_r, worst);
        return worst <= 1e-10 ? kExitPass : kExitCheckFailure;
      }
      const C nu = s - 0.5;
      const double freq = 2.0 * 3.14159265358979323846 * std::abs(f_n);
      const SmoothMap F = [nu, freq](std::span<const sl21::CJet> yv) {
        return sqrt(yv[0]) * sl21::bessel_K_jet(nu, C(freq) * yv[0]);
      };
      double worst = 0;
      for (int i = 0; i < 50; ++i) {
        const double y = 0.25 + 2.75 * (i + 0.5) / 50.0;
        const C res = sl21::pde_residual_6_4(F, f_n, 0, lambda, y, 0.0);
        const C f0 = std::sqrt(y) * sl21::bessel_K(nu, C(freq * y));
        worst = std::max(worst, std::abs(res) / (1.0 + std::abs(freq * freq * y * y * f0)));
      }
      std::printf("coefficient ODE residual for n=%d, s=%s: %.3e over 50 points\n", f_n,
                  f_s.c_str(), worst);
      const std::array<int, 3> grids{8, 16, 32};
      const auto rep = sl21::consistency_check(e.f, lambda, f_n, 0, 0.5, 2.5, -1.0, 1.0, grids, 1,
                                               4 * std::abs(f_n) + 8);
      for (std::size_t i = 0; i < rep.residuals.size(); ++i)
        std::printf("  y-grid %2d: extracted-coefficient residual %.3e\n", rep.y_grids[i],
                    rep.residuals[i]);
      return worst <= 1e-6 ? kExitPass : kExitCheckFailure;
    }

    if (mj->parsed()) {
      const FnSpec fn = resolve_function(m_fn, sl21::Chart::HC, parse_complex(m_s), m_a);
      sl21::MJOptions opt;
      opt.bound = m_bound;
      opt.samples = m_samples;
      opt.seed = m_seed;
      const C lambda = fn.eigenvalue ? *fn.eigenvalue : parse_complex(m_lambda);
      const sl21::Report rep = sl21::check_mj_conditions(fn.f, lambda, opt);
      emit_report(rep, m_out);
      return rep.pass ? kExitPass : kExitCheckFailure;
    }
  } catch (const std::invalid_argument& e) {
    std::fprintf(stderr, "config error: %s\n", e.what());
    return kExitConfigError;
  } catch (const std::domain_error& e) {
    std::fprintf(stderr, "config error: %s\n", e.what());
    return kExitConfigError;
  } catch (const std::exception& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return kExitCheckFailure;
  }
  return kExitConfigError;
}
