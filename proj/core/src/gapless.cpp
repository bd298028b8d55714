#include "smear/gapless.hpp"

#include <cmath>
#include <numbers>

#include "smear/parallel.hpp"
#include "smear/propagators.hpp"

namespace smear {

namespace {

constexpr double pi = std::numbers::pi;
const cplx I(0.0, 1.0);

// monopole eigenvalue of basis index i for qubit A (hi bit) and B (lo bit)
int mu_a(std::size_t i) { return (i & 2) ? -1 : 1; }
int mu_b(std::size_t i) { return (i & 1) ? -1 : 1; }

void require_involution(const Mat2& mu) {
  if ((mu * mu - Mat2::identity()).norm() > 1e-12)
    throw InvalidParameter("monopole operator must square to the identity");
}

TwoQubitState apply_factors(const TwoQubitState& rho0, const Mat4& f) {
  if (std::abs(rho0.m.trace() - 1.0) > 1e-12) throw InvalidParameter("input state trace differs from 1");
  TwoQubitState r = basis_change(rho0, Basis::Monopole);
  for (std::size_t i = 0; i < 16; ++i) r.m.a[i] *= f.a[i];
  return r;
}

}  // namespace

Mat2 single_channel(const Mat2& rho0, double xi, const Mat2& mu) {
  require_involution(mu);
  if (!(xi >= 0.0)) throw InvalidParameter("xi must be non-negative");
  // e^{-xi} cosh xi = (1 + e^{-2 xi}) / 2, e^{-xi} sinh xi = -expm1(-2 xi) / 2
  const double c = 0.5 * (1.0 + std::exp(-2.0 * xi));
  const double s = -0.5 * std::expm1(-2.0 * xi);
  return c * rho0 + s * (mu * rho0 * mu);
}

double single_channel_purity(const Mat2& rho0, double xi, const Mat2& mu) {
  require_involution(mu);
  const Mat2 mr = mu * rho0;
  const double M2 = (mr * mr).trace().real();
  const double p0 = purity(rho0);
  // e^{-2xi} cosh 2xi and e^{-2xi} sinh 2xi without overflow
  const double ch = 0.5 * (1.0 + std::exp(-4.0 * xi));
  const double sh = -0.5 * std::expm1(-4.0 * xi);
  return ch * p0 + M2 * sh;
}

GaplessPairData pair_data(const DetectorParams& a, const DetectorParams& b) {
  a.validate();
  b.validate();
  if (a.smearing.Omega != 0.0 || b.smearing.Omega != 0.0)
    throw InvalidParameter("gapless detectors need Omega = 0");
  const double la2 = a.lambda * a.lambda, lb2 = b.lambda * b.lambda, lab = a.lambda * b.lambda;
  const GaussianSmearing& fa = a.smearing;
  const GaussianSmearing& fb = b.smearing;
  GaplessPairData d;
  auto diag = [](const GaussianSmearing& f) {
    GaussianSmearing g = f;
    return limit_L0_W(g, g).value.real();
  };
  d.W_aa = la2 * diag(fa);
  d.W_bb = lb2 * diag(fb);
  d.H_ab = lab * evaluate(BiDistKind::Hadamard, fa, fb).value.real();
  d.E_ab = lab * evaluate(BiDistKind::Causal, fa, fb).value.real();
  d.Delta_ab = lab * evaluate(BiDistKind::Symmetric, fa, fb).value.real();
  // the self-retarded term is a pure phase; it has no finite value for point-like smearing
  if (fa.sigma > 0.0) d.G_a = 0.5 * la2 * limit_L0_GR(fa, fa).value.real();
  if (fb.sigma > 0.0) d.G_b = 0.5 * lb2 * limit_L0_GR(fb, fb).value.real();
  return d;
}

Mat4 damping_factors(const GaplessPairData& d) {
  Mat4 f;
  for (std::size_t i = 0; i < 4; ++i)
    for (std::size_t j = 0; j < 4; ++j) {
      const int a = mu_a(i), b = mu_b(i), c = mu_a(j), e = mu_b(j);
      const double da = 0.5 * (a - c), db = 0.5 * (b - e);
      const double damp = -2.0 * (da * da * d.W_aa + db * db * d.W_bb + da * db * d.H_ab);
      const double phase = 0.5 * d.E_ab * (c * b - a * e) - 0.5 * d.Delta_ab * (a * b - c * e);
      f(i, j) = std::exp(cplx(damp, phase));
    }
  return f;
}

Mat4 unitary_factors(double delta_ab) {
  Mat4 f;
  for (std::size_t i = 0; i < 4; ++i)
    for (std::size_t j = 0; j < 4; ++j) {
      const int a = mu_a(i), b = mu_b(i), c = mu_a(j), e = mu_b(j);
      f(i, j) = std::exp(-0.5 * I * delta_ab * static_cast<double>(a * b - c * e));
    }
  return f;
}

TwoQubitState two_detector_state(const TwoQubitState& rho0, const GaplessPairData& d) {
  return apply_factors(rho0, damping_factors(d));
}

TwoQubitState unitary_only_state(const TwoQubitState& rho0, double delta_ab) {
  return apply_factors(rho0, unitary_factors(delta_ab));
}

Mat16 choi_matrix(const Mat4& factors) {
  Mat16 c;
  for (std::size_t i = 0; i < 4; ++i)
    for (std::size_t j = 0; j < 4; ++j) c(i * 4 + i, j * 4 + j) = factors(i, j);
  return c;
}

void GaplessSetup::validate() const {
  for (double x : {lambda, T, sigma, sep, dt})
    if (!std::isfinite(x)) throw InvalidParameter("gapless parameters must be finite");
  if (!(T > 0.0)) throw InvalidParameter("T must be positive");
  if (sigma < 0.0) throw InvalidParameter("sigma must be non-negative");
  if (sigma == 0.0 && sep == 0.0) throw InvalidParameter("point-like detectors need sep > 0");
  if (sep < 0.0 || lambda < 0.0) throw InvalidParameter("sep and lambda must be non-negative");
}

DetectorParams GaplessSetup::detector_A() const {
  return {lambda, make_smearing(T, 0.0, 0.0, sigma, {0.0, 0.0, 0.0})};
}

DetectorParams GaplessSetup::detector_B() const {
  return {lambda, make_smearing(T, dt, 0.0, sigma, {sep, 0.0, 0.0})};
}

GaplessStates ground_ground_states(const GaplessSetup& s) {
  s.validate();
  GaplessStates out;
  out.data = pair_data(s.detector_A(), s.detector_B());
  const TwoQubitState gg = product_state(proj_ground(), proj_ground());
  out.full = two_detector_state(gg, out.data);
  out.unitary = unitary_only_state(gg, out.data.Delta_ab);
  return out;
}

double hs_distance_sq(const GaplessSetup& s) {
  const GaplessStates st = ground_ground_states(s);
  return hs_norm_sq(st.full, st.unitary);
}

double hs_limit_largeT(double lambda) {
  const double x = lambda * lambda / pi;
  return 0.125 * (5.0 + std::exp(-4.0 * x) - 2.0 * std::exp(-2.0 * x) + 4.0 * std::exp(-x) -
                  8.0 * std::exp(-0.5 * x));
}

std::array<double, 4> pt_eigenvalues(const TwoQubitState& rho) {
  return eig_hermitian_4(partial_transpose_B(rho.m));
}

CausalOrderReport causal_order_reduction_check(const DetectorParams& a, const DetectorParams& b) {
  const GaplessPairData d = pair_data(a, b);
  CausalOrderReport r;
  const double lab = a.lambda * b.lambda;
  r.gr_abs = std::abs(lab * evaluate(BiDistKind::Retarded, a.smearing, b.smearing).value);
  r.scale = std::max(std::abs(d.E_ab), std::abs(d.Delta_ab));
  // more than 8 widths of separation in time, beyond the light-crossing time
  const double width = std::hypot(a.smearing.T, b.smearing.T) + std::hypot(a.smearing.sigma, b.smearing.sigma);
  const double L = distance(a.smearing.L, b.smearing.L);
  r.a_precedes = b.smearing.t0 - a.smearing.t0 > L + 8.0 * width;
  r.pass = r.gr_abs <= 1e-10 * r.scale;
  return r;
}

NoGoReport spacelike_no_go_check(double sigma_over_L, const std::vector<double>& lambdas,
                                 const std::vector<double>& t_over_L) {
  NoGoReport r;
  r.min_pt_eigenvalue = 1.0;
  for (double lam : lambdas)
    for (double t : t_over_L) {
      const GaplessStates st = ground_ground_states({lam, t, sigma_over_L, 1.0, 0.0});
      r.min_pt_eigenvalue = std::min(r.min_pt_eigenvalue, pt_eigenvalues(st.full)[0]);
    }
  r.pass = r.min_pt_eigenvalue >= -1e-12;
  return r;
}

std::vector<Fig3Row> fig3_sweep(double lambda, double sigma_over_L, const std::vector<double>& t_over_L,
                                unsigned jobs) {
  if (t_over_L.empty()) throw InvalidParameter("T/L grid is empty");
  for (std::size_t i = 1; i < t_over_L.size(); ++i)
    if (!(t_over_L[i] > t_over_L[i - 1])) throw InvalidParameter("T/L grid must be strictly increasing");
  return parallel_map(t_over_L.size(), jobs, [&](std::size_t i) {
    const GaplessStates st = ground_ground_states({lambda, t_over_L[i], sigma_over_L, 1.0, 0.0});
    return Fig3Row{t_over_L[i], pt_eigenvalues(st.full), pt_eigenvalues(st.unitary)};
  });
}

double entanglement_onset(double lambda, double sigma_over_L, double lo, double hi, double step,
                          double threshold) {
  auto min_ev = [&](double t) {
    return pt_eigenvalues(ground_ground_states({lambda, t, sigma_over_L, 1.0, 0.0}).full)[0];
  };
  double prev = lo;
  for (double t = lo; t <= hi + 1e-12; t += step) {
    if (min_ev(t) < -threshold) {
      if (t == lo) return lo;
      double a = prev, b = t;
      for (int it = 0; it < 60 && b - a > 1e-10; ++it) {
        const double m = 0.5 * (a + b);
        (min_ev(m) < -threshold ? b : a) = m;
      }
      return b;
    }
    prev = t;
  }
  return -1.0;
}

std::vector<Fig4Row> fig4_sweep(const std::vector<double>& lambdas, double sigma_over_L,
                                const std::vector<double>& t_over_L, unsigned jobs) {
  if (t_over_L.empty() || lambdas.empty()) throw InvalidParameter("fig4 grids must be non-empty");
  for (std::size_t i = 1; i < t_over_L.size(); ++i)
    if (!(t_over_L[i] > t_over_L[i - 1])) throw InvalidParameter("T/L grid must be strictly increasing");
  return parallel_map(t_over_L.size(), jobs, [&](std::size_t i) {
    Fig4Row row{t_over_L[i], {}, {}};
    for (double lam : lambdas) {
      row.hs_sq.push_back(hs_distance_sq({lam, t_over_L[i], sigma_over_L, 1.0, 0.0}));
      row.hs_limit.push_back(hs_limit_largeT(lam));
    }
    return row;
  });
}

}  // namespace smear
