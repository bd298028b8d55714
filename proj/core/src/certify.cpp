#include "smear/certify.hpp"

#include <cmath>
#include <numbers>
#include <random>
#include <sstream>

#include "smear/gapless.hpp"
#include "smear/parallel.hpp"
#include "smear/propagators.hpp"
#include "smear/udw.hpp"

namespace smear {

namespace {

constexpr double pi = std::numbers::pi;

constexpr BiDistKind all_kinds[] = {BiDistKind::Wightman, BiDistKind::Hadamard, BiDistKind::Causal,
                                    BiDistKind::Retarded, BiDistKind::Advanced, BiDistKind::Symmetric,
                                    BiDistKind::Feynman};

class Draw {
 public:
  explicit Draw(std::uint64_t seed) : rng_(seed) {}
  double uniform(double a, double b) { return a + (b - a) * u_(rng_); }
  double log_uniform(double a, double b) { return std::exp(uniform(std::log(a), std::log(b))); }
  double normal() { return n_(rng_); }

 private:
  std::mt19937_64 rng_;
  std::uniform_real_distribution<double> u_{0.0, 1.0};
  std::normal_distribution<double> n_{0.0, 1.0};
};

std::string fmt(double x) {
  std::ostringstream os;
  os.precision(3);
  os << x;
  return os.str();
}

struct OracleRecord {
  BiDistKind kind;
  double rel;
  bool pass;
  bool converged;
};

std::vector<double> linspace(double a, double b, int n) {
  std::vector<double> v(n);
  for (int i = 0; i < n; ++i) v[i] = a + (b - a) * i / (n - 1);
  return v;
}

template <std::size_t N>
Matrix<N> random_density(Draw& d) {
  Matrix<N> g;
  for (auto& x : g.a) x = cplx(d.normal(), d.normal());
  Matrix<N> r = g * g.adjoint();
  return (1.0 / r.trace().real()) * r;
}

}  // namespace

CheckResult certify_oracle_grid(std::uint64_t seed, int n, const QuadOptions& opt, unsigned jobs) {
  struct Tuple {
    GaussianSmearing a, b;
    bool point_like;
  };
  Draw d(seed);
  std::vector<Tuple> tuples;
  for (int i = 0; i < n; ++i) {
    const double T1 = d.log_uniform(0.1, 10.0), T2 = d.log_uniform(0.1, 10.0);
    const bool point_like = i % 5 == 0;
    const double sg = point_like ? 0.0 : d.uniform(0.0, 2.0);
    const double t0 = d.uniform(-10.0, 10.0);
    const double sep = d.log_uniform(0.1, 30.0);
    const double O1 = d.uniform(-3.0, 3.0), O2 = d.uniform(-3.0, 3.0);
    tuples.push_back({make_smearing(T1, t0, O1, sg, {sep, 0.0, 0.0}),
                      make_smearing(T2, 0.0, O2, sg, {0.0, 0.0, 0.0}), point_like});
  }

  const auto records = parallel_map(tuples.size(), jobs, [&](std::size_t i) {
    std::vector<OracleRecord> out;
    for (BiDistKind k : all_kinds) {
      const Tuple& t = tuples[i];
      if (t.point_like && (k == BiDistKind::Retarded || k == BiDistKind::Advanced ||
                           k == BiDistKind::Symmetric || k == BiDistKind::Feynman))
        continue;
      const cplx cf = evaluate(k, t.a, t.b).value;
      try {
        const QuadratureResult q = quad_kind(k, t.a, t.b, opt);
        const double diff = std::abs(cf - q.value), mag = std::abs(q.value);
        const bool tiny = mag <= 1e-250 && std::abs(cf) <= 1e-250;
        const double rel = tiny ? 0.0 : (mag > 0.0 ? diff / mag : INFINITY);
        const bool pass = tiny || diff <= std::max(1e-8 * mag, 10.0 * q.abs_error_estimate);
        out.push_back({k, rel, pass, true});
      } catch (const NonConvergence&) {
        out.push_back({k, INFINITY, false, false});
      }
    }
    return out;
  });

  CheckResult r{"oracle_grid", 0.0, true, ""};
  int values = 0, failed = 0, nonconv = 0;
  std::size_t worst_i = 0;
  BiDistKind worst_k = BiDistKind::Wightman;
  for (std::size_t i = 0; i < records.size(); ++i)
    for (const OracleRecord& rec : records[i]) {
      ++values;
      if (!rec.converged) ++nonconv;
      if (!rec.pass) ++failed;
      if (rec.rel > r.max_rel_err) {
        r.max_rel_err = rec.rel;
        worst_i = i;
        worst_k = rec.kind;
      }
      r.pass = r.pass && rec.pass;
    }
  r.detail = std::to_string(values) + " values over " + std::to_string(n) + " tuples, " +
             std::to_string(failed) + " failed, " + std::to_string(nonconv) +
             " not converged, worst " + std::string(to_string(worst_k)) + " at tuple " +
             std::to_string(worst_i);
  return r;
}

CheckResult certify_identities(std::uint64_t seed, int n) {
  Draw d(seed);
  CheckResult r{"identities", 0.0, true, ""};
  const char* names[] = {"E=GR-GA", "Delta=GR+GA", "W=H/2+iE/2", "GF=H/2+iDelta/2", "GR12=GA21"};
  double worst[5] = {0, 0, 0, 0, 0};
  const cplx I(0.0, 1.0);
  for (int i = 0; i < n; ++i) {
    const double sg = d.uniform(0.0, 2.0);
    const auto a = make_smearing(d.log_uniform(0.1, 10.0), d.uniform(-10.0, 10.0), d.uniform(-3.0, 3.0), sg,
                                 {d.log_uniform(0.1, 30.0), 0.0, 0.0});
    const auto b = make_smearing(d.log_uniform(0.1, 10.0), 0.0, d.uniform(-3.0, 3.0), sg, {0.0, 0.0, 0.0});
    auto v = [&](BiDistKind k, const GaussianSmearing& x, const GaussianSmearing& y) {
      return evaluate(k, x, y).value;
    };
    const cplx W = v(BiDistKind::Wightman, a, b), H = v(BiDistKind::Hadamard, a, b);
    const cplx E = v(BiDistKind::Causal, a, b), GR = v(BiDistKind::Retarded, a, b);
    const cplx GA = v(BiDistKind::Advanced, a, b), D = v(BiDistKind::Symmetric, a, b);
    const cplx GF = v(BiDistKind::Feynman, a, b), GA21 = v(BiDistKind::Advanced, b, a);
    auto rel = [](cplx lhs, cplx rhs, std::initializer_list<cplx> parts) {
      double scale = 0.0;
      for (cplx p : parts) scale = std::max(scale, std::abs(p));
      const double diff = std::abs(lhs - rhs);
      return scale > 0.0 ? diff / scale : diff;
    };
    const double e[5] = {rel(E, GR - GA, {E, GR, GA}), rel(D, GR + GA, {D, GR, GA}),
                         rel(W, 0.5 * H + 0.5 * I * E, {W, H, E}),
                         rel(GF, 0.5 * H + 0.5 * I * D, {GF, H, D}), rel(GR, GA21, {GR, GA21})};
    for (int j = 0; j < 5; ++j) worst[j] = std::max(worst[j], std::isfinite(e[j]) ? e[j] : INFINITY);
  }
  for (int j = 0; j < 5; ++j) {
    r.max_rel_err = std::max(r.max_rel_err, worst[j]);
    r.detail += std::string(j ? ", " : "") + names[j] + " " + fmt(worst[j]);
  }
  r.pass = r.max_rel_err <= 1e-12;
  r.detail = std::to_string(n) + " tuples: " + r.detail;
  return r;
}

CheckResult certify_integral_identity_point(double gamma, double sigma, double ell, const QuadOptions& opt) {
  CheckResult r{"newint", 0.0, false, ""};
  try {
    const IntegralIdentity id = check_integral_identity(gamma, sigma, ell, opt);
    const double diff = std::abs(id.lhs.value - id.rhs), mag = std::abs(id.rhs);
    r.max_rel_err = mag > 0.0 ? diff / mag : diff;
    r.pass = diff <= std::max(1e-8 * mag, 10.0 * id.lhs.abs_error_estimate);
    r.detail = "gamma=" + fmt(gamma) + " sigma=" + fmt(sigma) + " ell=" + fmt(ell);
  } catch (const NonConvergence&) {
    r.max_rel_err = INFINITY;
    r.detail = "quadrature did not converge";
  }
  return r;
}

CheckResult certify_integral_identity(std::uint64_t seed, int n, const QuadOptions& opt) {
  Draw d(seed);
  CheckResult r{"newint", 0.0, true, ""};
  int failed = 0;
  for (int i = 0; i <= n; ++i) {
    double g = 1.0, s = 2.0, l = 3.0;
    if (i < n) {
      s = d.uniform(0.2, 3.0);
      g = s * d.uniform(-0.95, 0.95);
      l = d.uniform(0.0, 4.0 * std::hypot(g, s));
    }
    const CheckResult p = certify_integral_identity_point(g, s, l, opt);
    r.max_rel_err = std::max(r.max_rel_err, p.max_rel_err);
    if (!p.pass) ++failed;
    r.pass = r.pass && p.pass;
  }
  r.detail = std::to_string(n) + " draws plus (1, 2, 3), " + std::to_string(failed) + " failed";
  return r;
}

CheckResult certify_self_wightman() {
  CheckResult r{"self_wightman", 0.0, true, ""};
  const double cases[3][2] = {{1.0, 0.0}, {1.0, 1.0}, {2.0, 0.5}};
  for (const auto& c : cases) {
    const auto f = make_smearing(c[0], 0.0, 0.0, c[1], {0.0, 0.0, 0.0});
    const double alpha2 = 1.0 + c[1] * c[1] / (c[0] * c[0]);
    const double want = 1.0 / (4.0 * pi * alpha2);
    const double e = std::abs(limit_L0_W(f, f).value - want) / want;
    r.max_rel_err = std::max(r.max_rel_err, e);
  }
  r.pass = r.max_rel_err <= 1e-12;
  r.detail = "(T, sigma) in {(1, 0), (1, 1), (2, 0.5)}";
  return r;
}

CheckResult certify_dual_negativity(unsigned jobs) {
  // lambda small enough that the O(lambda^4) eigenvalue shift of the
  // truncated matrix sits below the 1e-12 relative gate
  const double lambda = 1e-5;
  const auto grid = linspace(0.0, 6.0, 200);
  const auto rel = parallel_map(grid.size(), jobs, [&](std::size_t i) {
    const HarvestingSetup s{lambda, grid[i], 1.0, 0.01, 5.0, 0.0};
    const double closed = negativity_closed_t0(s);
    const HarvestingResult h = harvesting_state(s);
    return std::abs(closed - h.neg_eig) / std::max(closed, h.L_term);
  });
  CheckResult r{"dual_negativity", 0.0, true, "200 points, Omega T in [0, 6], lambda = 1e-5"};
  for (double e : rel) r.max_rel_err = std::max(r.max_rel_err, e);
  r.pass = r.max_rel_err <= 1e-12;
  return r;
}

CheckResult certify_fig1_property(unsigned jobs) {
  const auto rows = fig1_sweep(linspace(0.0, 6.0, 200), {1.0, 0.0, 1.0, 0.01, 5.0, 0.0}, jobs);
  std::size_t peak = 0;
  for (std::size_t i = 1; i < rows.size(); ++i)
    if (rows[i].negativity_over_lambda2 > rows[peak].negativity_over_lambda2) peak = i;
  bool dominates = false;
  for (const Fig1Row& row : rows)
    if (row.negativity_over_lambda2 > 0.0 && row.negativity_over_lambda2 >= 10.0 * row.half_delta_over_lambda2)
      dominates = true;
  bool monotone = true;
  std::size_t first_dip = 0;
  double prev = -1.0;
  for (std::size_t i = peak; i < rows.size(); ++i) {
    const double ratio = rows[i].negativity_over_lambda2 / rows[i].half_delta_over_lambda2;
    if (ratio < prev && monotone) {
      monotone = false;
      first_dip = i;
    }
    prev = ratio;
  }
  CheckResult r{"fig1_property", 0.0, rows[peak].negativity_over_lambda2 > 0.0 && dominates && monotone, ""};
  const Fig1Row& p = rows[peak];
  r.detail = "peak at Omega T = " + fmt(p.OmegaT) + ", ratio there " +
             fmt(p.negativity_over_lambda2 / p.half_delta_over_lambda2) + ", ratio at Omega T = 6 " +
             fmt(rows.back().negativity_over_lambda2 / rows.back().half_delta_over_lambda2) +
             (monotone ? "" : ", ratio decreases at Omega T = " + fmt(rows[first_dip].OmegaT));
  return r;
}

CheckResult certify_asymptotics() {
  CheckResult r{"asymptotics", 0.0, true, ""};
  auto dev = [](double approx, double exact) { return std::abs(approx - exact) / exact; };
  const double tol[2] = {0.10, 0.05};
  const double ells[2] = {10.0, 14.0};
  for (int j = 0; j < 2; ++j) {
    const double ell = ells[j];
    const HarvestingSetup s{1.0, ell / 2.0, 1.0, 0.001, ell, 0.0};
    const double exact = negativity_closed_t0(s);
    const double e = std::isfinite(exact) && exact > 0.0 ? dev(asymptotic_negativity_optimal_gap(ell, 1.0), exact)
                                                         : INFINITY;
    r.pass = r.pass && e <= tol[j];
    r.max_rel_err = std::max(r.max_rel_err, e);
    r.detail += "ell=" + fmt(ell) + " dev " + fmt(e) + ", ";
  }
  const HarvestingSetup s{1.0, 0.0, 50.0, 0.05, 1.0, 0.0};
  const double exact = negativity_closed_t0(s);
  const double e = exact > 0.0 ? dev(asymptotic_negativity_largeT(s), exact) : INFINITY;
  r.pass = r.pass && e <= 0.03;
  r.max_rel_err = std::max(r.max_rel_err, e);
  r.detail += "T=50|L| dev " + fmt(e);
  return r;
}

CheckResult certify_gapless_channel(std::uint64_t seed) {
  Draw d(seed);
  auto random_pair = [&d] {
    const double lam = d.uniform(0.1, 2.0);
    const GaplessSetup s{lam, d.log_uniform(0.1, 10.0), d.uniform(0.01, 2.0), d.log_uniform(0.1, 30.0),
                         d.uniform(-10.0, 10.0)};
    return pair_data(s.detector_A(), s.detector_B());
  };
  bool trace_exact = true;
  double min_out = INFINITY;
  for (int i = 0; i < 100; ++i) {
    // odd draws are pure, on the boundary of the positive cone
    TwoQubitState in{random_density<4>(d), Basis::Energy};
    if (i % 2 == 1) {
      std::array<cplx, 4> v;
      double nrm = 0.0;
      for (cplx& x : v) {
        x = cplx(d.normal(), d.normal());
        nrm += std::norm(x);
      }
      for (std::size_t p = 0; p < 4; ++p)
        for (std::size_t q = 0; q < 4; ++q) in.m(p, q) = v[p] * std::conj(v[q]) / nrm;
    }
    const TwoQubitState out = two_detector_state(in, random_pair());
    const TwoQubitState mono = basis_change(in, Basis::Monopole);
    for (std::size_t k = 0; k < 4; ++k) trace_exact = trace_exact && out.m(k, k) == mono.m(k, k);
    min_out = std::min(min_out, eigh(out.m).values[0]);
  }
  double min_choi = INFINITY;
  for (int i = 0; i < 20; ++i) min_choi = std::min(min_choi, eigh(choi_matrix(damping_factors(random_pair()))).values[0]);
  double purity_err = 0.0;
  for (int i = 0; i < 100; ++i) {
    Mat2 rho0 = random_density<2>(d);
    if (i % 2 == 0) {
      // pure state
      const cplx a(d.normal(), d.normal()), b(d.normal(), d.normal());
      const double nrm = std::sqrt(std::norm(a) + std::norm(b));
      const cplx v[2] = {a / nrm, b / nrm};
      for (std::size_t p = 0; p < 2; ++p)
        for (std::size_t q = 0; q < 2; ++q) rho0(p, q) = v[p] * std::conj(v[q]);
    }
    const double xi = d.uniform(0.0, 3.0);
    const double direct = purity(single_channel(rho0, xi, sigma_x()));
    purity_err = std::max(purity_err, std::abs(direct - single_channel_purity(rho0, xi, sigma_x())));
  }
  CheckResult r{"gapless_channel", purity_err,
                trace_exact && min_out >= -1e-12 && min_choi >= -1e-10 && purity_err <= 1e-13, ""};
  r.detail = std::string("trace ") + (trace_exact ? "exact" : "NOT exact") + ", min output eigenvalue " +
             fmt(min_out) + ", min Choi eigenvalue " + fmt(min_choi) + ", purity error " + fmt(purity_err);
  return r;
}

CheckResult certify_fig3_onset() {
  CheckResult r{"fig3_onset", 0.0, true, ""};
  const double lambdas[3] = {0.25, 0.5, 1.0};
  for (double lam : lambdas) {
    const double t = entanglement_onset(lam, 0.05);
    r.pass = r.pass && t >= 0.6 && t <= 0.8;
    r.detail += "onset(" + fmt(lam) + ") = " + fmt(t) + " |L|, ";
  }
  std::vector<double> ts;
  for (int i = 1; i <= 60; ++i) ts.push_back(0.005 * i);
  const NoGoReport ng = spacelike_no_go_check(0.05, {lambdas[0], lambdas[1], lambdas[2]}, ts);
  r.pass = r.pass && ng.pass;
  r.detail += "min PT eigenvalue for T <= 0.3|L| " + fmt(ng.min_pt_eigenvalue);
  return r;
}

CheckResult certify_fig4_limits() {
  CheckResult r{"fig4_limits", 0.0, true, ""};
  double worst_abs = 0.0;
  for (double lam : {0.25, 0.5, 1.0}) {
    const double hs = hs_distance_sq({lam, 100.0, 0.01, 1.0, 0.0});
    worst_abs = std::max(worst_abs, std::abs(hs - hs_limit_largeT(lam)));
  }
  const double small = 5.0 * std::pow(0.1, 4) / (8.0 * pi * pi);
  const double dev = std::abs(hs_limit_largeT(0.1) - small) / small;
  r.max_rel_err = dev;
  r.pass = worst_abs <= 1e-3 && dev <= 0.02;
  r.detail = "max |hs - limit| at T = 100|L| " + fmt(worst_abs) + ", small-lambda deviation " + fmt(dev);
  return r;
}

}  // namespace smear
