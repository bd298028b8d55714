#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "smear/certify.hpp"
#include "smear/gapless.hpp"
#include "smear/oracle.hpp"
#include "smear/propagators.hpp"
#include "smear/udw.hpp"

using namespace smear;
using nlohmann::json;

namespace {

constexpr int kExitFailedGate = 1;
constexpr int kExitInvalid = 2;
constexpr int kExitNonConvergence = 3;

std::string num(double x) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.17g", x);
  return buf;
}

std::string tag(double lambda) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%g", lambda);
  return buf;
}

struct Grid {
  double lo = 0.0, hi = 1.0;
  int points = 200;
  std::vector<double> values;
  std::string spacing = "linear";

  void add_options(CLI::App* app, const std::string& what) {
    app->add_option("--grid-min", lo, "first " + what)->capture_default_str();
    app->add_option("--grid-max", hi, "last " + what)->capture_default_str();
    app->add_option("--points", points, "number of grid points")->capture_default_str();
    app->add_option("--grid", values, "explicit grid, overrides min/max/points")->delimiter(',');
    app->add_option("--spacing", spacing, "linear or log")
        ->check(CLI::IsMember({"linear", "log"}))
        ->capture_default_str();
  }

  std::vector<double> build() const {
    if (!values.empty()) return values;
    if (points < 1) throw InvalidParameter("grid needs at least one point");
    if (spacing == "log" && !(lo > 0.0)) throw InvalidParameter("log grid needs a positive minimum");
    std::vector<double> g(points);
    for (int i = 0; i < points; ++i) {
      const double f = points == 1 ? 0.0 : static_cast<double>(i) / (points - 1);
      g[i] = spacing == "log" ? std::exp(std::log(lo) + f * (std::log(hi) - std::log(lo))) : lo + f * (hi - lo);
    }
    return g;
  }
};

void write_csv(const std::string& path, const std::vector<std::string>& header,
               const std::vector<std::vector<double>>& rows) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write " + path);
  for (std::size_t i = 0; i < header.size(); ++i) out << (i ? "," : "") << header[i];
  out << "\n";
  for (const auto& row : rows) {
    for (std::size_t i = 0; i < row.size(); ++i) out << (i ? "," : "") << num(row[i]);
    out << "\n";
  }
  std::cout << path << "\n";
}

std::string join_path(const std::string& dir, const std::string& file) {
  if (dir.empty() || dir == ".") return file;
  return dir.back() == '/' ? dir + file : dir + "/" + file;
}

json check_json(const CheckResult& c) {
  json j{{"name", c.name}, {"pass", c.pass}, {"detail", c.detail}};
  // JSON has no infinity; a non-finite error is reported as null
  if (std::isfinite(c.max_rel_err))
    j["max_rel_err"] = c.max_rel_err;
  else
    j["max_rel_err"] = nullptr;
  return j;
}

// eval

struct EvalArgs {
  std::string kind;
  double T = 1.0, sigma = 0.0, Omega = 0.0, t0 = 0.0, sep = 0.0;
  std::optional<double> T1, T2, sigma1, sigma2, Omega1, Omega2;
  bool with_oracle = false;
};

int run_eval(const EvalArgs& a) {
  const BiDistKind k = parse_kind(a.kind);
  const double T1 = a.T1.value_or(a.T), T2 = a.T2.value_or(a.T);
  const double s1 = a.sigma1.value_or(a.sigma), s2 = a.sigma2.value_or(a.sigma);
  const double O1 = a.Omega1.value_or(a.Omega), O2 = a.Omega2.value_or(a.Omega);
  const auto f1 = make_smearing(T1, a.t0, O1, s1, {a.sep, 0.0, 0.0});
  const auto f2 = make_smearing(T2, 0.0, O2, s2, {0.0, 0.0, 0.0});
  const PropagatorValue v = evaluate(k, f1, f2);
  json out{{"schema", 1},
           {"kind", std::string(to_string(k))},
           {"re", v.value.real()},
           {"im", v.value.imag()},
           {"overflow", v.overflow},
           {"params",
            {{"T1", T1}, {"T2", T2}, {"sigma1", s1}, {"sigma2", s2}, {"Omega1", O1}, {"Omega2", O2},
             {"t0", a.t0}, {"sep", a.sep}}}};
  if (a.with_oracle) {
    const QuadratureResult q = quad_kind(k, f1, f2);
    const double m = std::abs(q.value);
    out["oracle_re"] = q.value.real();
    out["oracle_im"] = q.value.imag();
    out["oracle_abs_error"] = q.abs_error_estimate;
    out["rel_err"] = m > 0.0 ? std::abs(v.value - q.value) / m : std::abs(v.value - q.value);
  }
  std::cout << out.dump(2) << "\n";
  return 0;
}

// verify

struct VerifyArgs {
  std::vector<std::string> only;
  std::optional<double> gamma, sigma, ell;
  bool inject_fault = false;
  int n_oracle = 50, n_identity = 200, n_newint = 20;
  std::string report;
};

int run_verify(const VerifyArgs& a, std::uint64_t seed, unsigned jobs) {
  auto wanted = [&](const std::string& s) {
    return a.only.empty() || std::find(a.only.begin(), a.only.end(), s) != a.only.end();
  };
  QuadOptions opt;
  // truncating the Gaussian envelope early must make the oracle gates fail
  if (a.inject_fault) opt.envelope_cut = 1e-3;
  std::vector<CheckResult> checks;
  if (wanted("identity")) checks.push_back(certify_identities(seed, a.n_identity));
  if (wanted("oracle")) checks.push_back(certify_oracle_grid(seed, a.n_oracle, opt, jobs));
  if (wanted("newint")) {
    if (a.gamma || a.sigma || a.ell) {
      if (!(a.gamma && a.sigma && a.ell)) throw InvalidParameter("--gamma, --sigma and --ell go together");
      checks.push_back(certify_integral_identity_point(*a.gamma, *a.sigma, *a.ell, opt));
    } else {
      checks.push_back(certify_integral_identity(seed, a.n_newint, opt));
    }
  }
  bool all = true;
  json list = json::array();
  for (const CheckResult& c : checks) {
    all = all && c.pass;
    list.push_back(check_json(c));
  }
  const json report{{"schema", 1}, {"seed", seed}, {"fault_injected", a.inject_fault}, {"checks", list}, {"pass", all}};
  if (!a.report.empty()) {
    std::ofstream f(a.report);
    if (!f) throw std::runtime_error("cannot write " + a.report);
    f << report.dump(2) << "\n";
  }
  std::cout << report.dump(2) << "\n";
  return all ? 0 : kExitFailedGate;
}

// figures

struct Fig1Args {
  double lambda = 1.0, T = 1.0, sigma = 0.01, sep = 5.0;
  Grid grid{0.0, 6.0, 200, {}, "linear"};
  std::string out_dir = ".";
};

int run_fig1(const Fig1Args& a, unsigned jobs) {
  const HarvestingSetup base{a.lambda, 0.0, a.T, a.sigma, a.sep, 0.0};
  const auto rows = fig1_sweep(a.grid.build(), base, jobs);
  std::vector<std::vector<double>> table;
  for (const Fig1Row& r : rows) table.push_back({r.OmegaT, r.negativity_over_lambda2, r.half_delta_over_lambda2});
  write_csv(join_path(a.out_dir, "fig1.csv"), {"OmegaT", "negativity_over_lambda2", "half_delta_over_lambda2"}, table);
  return 0;
}

struct Fig3Args {
  std::vector<double> lambdas{0.25, 0.5, 1.0};
  double sigma_over_L = 0.05;
  Grid grid{0.05, 2.0, 200, {}, "linear"};
  std::string out_dir = ".";
};

int run_fig3(const Fig3Args& a, unsigned jobs) {
  if (a.lambdas.empty()) throw InvalidParameter("need at least one coupling");
  const auto grid = a.grid.build();
  std::vector<std::string> header{"T_over_L"};
  for (const char* part : {"full", "unitary"})
    for (int k = 1; k <= 4; ++k) header.push_back("ev" + std::to_string(k) + "_" + part);
  for (double lam : a.lambdas) {
    const auto rows = fig3_sweep(lam, a.sigma_over_L, grid, jobs);
    std::vector<std::vector<double>> table;
    for (const Fig3Row& r : rows) {
      std::vector<double> line{r.T_over_L};
      line.insert(line.end(), r.ev_full.begin(), r.ev_full.end());
      line.insert(line.end(), r.ev_unitary.begin(), r.ev_unitary.end());
      table.push_back(line);
    }
    write_csv(join_path(a.out_dir, "fig3_" + tag(lam) + ".csv"), header, table);
  }
  return 0;
}

struct Fig4Args {
  std::vector<double> lambdas{0.25, 0.5, 1.0};
  double sigma_over_L = 0.05;
  Grid grid{0.05, 100.0, 200, {}, "log"};
  std::string out_dir = ".";
};

int run_fig4(const Fig4Args& a, unsigned jobs) {
  const auto rows = fig4_sweep(a.lambdas, a.sigma_over_L, a.grid.build(), jobs);
  std::vector<std::string> header{"T_over_L"};
  for (double lam : a.lambdas) header.push_back("hs_sq_lambda_" + tag(lam));
  for (double lam : a.lambdas) header.push_back("hs_limit_lambda_" + tag(lam));
  std::vector<std::vector<double>> table;
  for (const Fig4Row& r : rows) {
    std::vector<double> line{r.T_over_L};
    line.insert(line.end(), r.hs_sq.begin(), r.hs_sq.end());
    line.insert(line.end(), r.hs_limit.begin(), r.hs_limit.end());
    table.push_back(line);
  }
  write_csv(join_path(a.out_dir, "fig4.csv"), header, table);
  return 0;
}

struct NewintArgs {
  double gamma = 1.0, sigma = 2.0, ell = 3.0;
};

int run_newint(const NewintArgs& a) {
  const IntegralIdentity id = check_integral_identity(a.gamma, a.sigma, a.ell);
  const CheckResult c = certify_integral_identity_point(a.gamma, a.sigma, a.ell);
  const json out{{"schema", 1},          {"gamma", a.gamma},
                 {"sigma", a.sigma},     {"ell", a.ell},
                 {"lhs_re", id.lhs.value.real()}, {"lhs_im", id.lhs.value.imag()},
                 {"lhs_abs_error", id.lhs.abs_error_estimate},
                 {"rhs_re", id.rhs.real()}, {"rhs_im", id.rhs.imag()},
                 {"rel_err", c.max_rel_err}, {"pass", c.pass}};
  std::cout << out.dump(2) << "\n";
  return c.pass ? 0 : kExitFailedGate;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Smeared scalar-field propagators, entanglement harvesting and gapless detectors"};
  app.set_config("--config", "", "INI-style configuration file; command-line flags take precedence");
  app.config_formatter(std::make_shared<CLI::ConfigINI>());
  app.require_subcommand(1);
  app.fallthrough();
  unsigned jobs = 1;
  std::uint64_t seed = 1;
  app.add_option("--jobs", jobs, "worker threads for sweeps and grids")->capture_default_str();
  app.add_option("--seed", seed, "seed for the randomized verification suites")->capture_default_str();

  EvalArgs ev;
  auto* eval = app.add_subcommand("eval", "evaluate one smeared bi-distribution");
  eval->add_option("--kind", ev.kind, "wightman, hadamard, causal, retarded, advanced, symmetric, feynman")
      ->required();
  eval->add_option("--T", ev.T, "time width of both detectors")->capture_default_str();
  eval->add_option("--T-1", ev.T1);
  eval->add_option("--T-2", ev.T2);
  eval->add_option("--sigma", ev.sigma, "spatial width of both detectors")->capture_default_str();
  eval->add_option("--sigma-1", ev.sigma1);
  eval->add_option("--sigma-2", ev.sigma2);
  eval->add_option("--Omega", ev.Omega, "frequency of both smearings")->capture_default_str();
  eval->add_option("--Omega-1", ev.Omega1);
  eval->add_option("--Omega-2", ev.Omega2);
  eval->add_option("--t0", ev.t0, "centre time of the first smearing; the second sits at 0")->capture_default_str();
  eval->add_option("--sep", ev.sep, "spatial separation of the centres")->capture_default_str();
  eval->add_flag("--with-oracle", ev.with_oracle, "also evaluate the quadrature oracle");

  VerifyArgs va;
  auto* verify = app.add_subcommand("verify", "run the identity, oracle and integral-identity suites");
  verify->add_option("--only", va.only, "restrict to some of: identity, oracle, newint")
      ->check(CLI::IsMember({"identity", "oracle", "newint"}))
      ->delimiter(',');
  verify->add_option("--gamma", va.gamma);
  verify->add_option("--sigma", va.sigma);
  verify->add_option("--ell", va.ell);
  verify->add_flag("--inject-fault", va.inject_fault, "loosen the oracle envelope cut to exercise the failure path");
  verify->add_option("--n-oracle", va.n_oracle)->capture_default_str();
  verify->add_option("--n-identity", va.n_identity)->capture_default_str();
  verify->add_option("--n-newint", va.n_newint)->capture_default_str();
  verify->add_option("--report", va.report, "also write the JSON report here");

  Fig1Args f1;
  auto* fig1 = app.add_subcommand("fig1", "negativity and signalling against Omega T");
  fig1->add_option("--lambda", f1.lambda)->capture_default_str();
  fig1->add_option("--T", f1.T)->capture_default_str();
  fig1->add_option("--sigma", f1.sigma)->capture_default_str();
  fig1->add_option("--sep", f1.sep)->capture_default_str();
  f1.grid.add_options(fig1, "Omega T");
  fig1->add_option("--out-dir", f1.out_dir)->capture_default_str();

  Fig3Args f3;
  auto* fig3 = app.add_subcommand("fig3", "partial-transpose eigenvalues of gapless detectors against T/|L|");
  fig3->add_option("--lambda", f3.lambdas, "couplings, one CSV each")->delimiter(',')->capture_default_str();
  fig3->add_option("--sigma-over-L", f3.sigma_over_L)->capture_default_str();
  f3.grid.add_options(fig3, "T/|L|");
  fig3->add_option("--out-dir", f3.out_dir)->capture_default_str();

  Fig4Args f4;
  auto* fig4 = app.add_subcommand("fig4", "Hilbert-Schmidt distance to the unitary-only state against T/|L|");
  fig4->add_option("--lambda", f4.lambdas, "couplings")->delimiter(',')->capture_default_str();
  fig4->add_option("--sigma-over-L", f4.sigma_over_L)->capture_default_str();
  f4.grid.add_options(fig4, "T/|L|");
  fig4->add_option("--out-dir", f4.out_dir)->capture_default_str();

  NewintArgs ni;
  auto* newint = app.add_subcommand("newint", "check the erfi-weighted Gaussian sine integral at one point");
  newint->add_option("--gamma", ni.gamma)->capture_default_str();
  newint->add_option("--sigma", ni.sigma)->capture_default_str();
  newint->add_option("--ell", ni.ell)->capture_default_str();

  try {
    app.parse(argc, argv);
  } catch (const CLI::Success& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitInvalid;
  }

  try {
    if (*eval) return run_eval(ev);
    if (*verify) return run_verify(va, seed, jobs);
    if (*fig1) return run_fig1(f1, jobs);
    if (*fig3) return run_fig3(f3, jobs);
    if (*fig4) return run_fig4(f4, jobs);
    if (*newint) return run_newint(ni);
  } catch (const InvalidParameter& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInvalid;
  } catch (const NonConvergence& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitNonConvergence;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInvalid;
  }
  return kExitInvalid;
}
