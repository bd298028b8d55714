#include "smear/udw.hpp"

#include <cmath>
#include <numbers>

#include "smear/parallel.hpp"
#include "smear/propagators.hpp"
#include "smear/specfun.hpp"

namespace smear {

namespace {

constexpr double pi = std::numbers::pi;

double alpha_of(const HarvestingSetup& s) { return std::sqrt(1.0 + s.sigma * s.sigma / (s.T * s.T)); }

}  // namespace

void HarvestingSetup::validate() const {
  for (double x : {lambda, Omega, T, sigma, sep, dt})
    if (!std::isfinite(x)) throw InvalidParameter("harvesting parameters must be finite");
  if (!(T > 0.0)) throw InvalidParameter("T must be positive");
  if (sigma < 0.0) throw InvalidParameter("sigma must be non-negative");
  if (lambda < 0.0) throw InvalidParameter("lambda must be non-negative");
  if (sep < 0.0) throw InvalidParameter("sep must be non-negative");
}

GaussianSmearing HarvestingSetup::smearing_A(double omega_sign) const {
  return make_smearing(T, 0.0, omega_sign * Omega, sigma, {0.0, 0.0, 0.0});
}

GaussianSmearing HarvestingSetup::smearing_B(double omega_sign) const {
  return make_smearing(T, dt, omega_sign * Omega, sigma, {sep, 0.0, 0.0});
}

double excitation_probability(const DetectorParams& d) {
  d.validate();
  const auto& f = d.smearing;
  const double alpha = std::sqrt(1.0 + f.sigma * f.sigma / (f.T * f.T));
  const double x = f.Omega * f.T / alpha;
  // e^{-W^2 T^2} (1 - sqrt(pi) x erfcx(x)); the bracket cancels for large x
  const double m = first_moment_scaled(x).eval(-f.Omega * f.Omega * f.T * f.T).real();
  return d.lambda * d.lambda / (4.0 * pi * alpha * alpha) * m;
}

SingleDetectorState single_detector_ground_final(const DetectorParams& d) {
  SingleDetectorState s;
  s.p_e = excitation_probability(d);
  s.rho(0, 0) = 1.0 - s.p_e;
  s.rho(1, 1) = s.p_e;
  s.perturbative_warning = s.p_e > 0.1;
  return s;
}

HarvestingResult harvesting_state(const HarvestingSetup& s) {
  s.validate();
  const double l2 = s.lambda * s.lambda;
  HarvestingResult r;
  const GaussianSmearing ap = s.smearing_A(+1.0), am = s.smearing_A(-1.0);
  const GaussianSmearing bp = s.smearing_B(+1.0);
  if (s.sep > 0.0 && s.sigma > 0.0) {
    r.G_AB = l2 * general_GF(ap, bp).value;
    r.Delta_half = 0.5 * std::abs(general_Delta(ap, bp).value);
  } else {
    r.G_AB = l2 * evaluate(BiDistKind::Feynman, ap, bp).value;
    r.Delta_half = 0.5 * std::abs(evaluate(BiDistKind::Symmetric, ap, bp).value);
  }
  r.W_AB = l2 * evaluate(BiDistKind::Wightman, am, bp).value;
  r.L_term = excitation_probability({s.lambda, ap});

  // printed order (gg, eg, ge, ee) -> index 2a + b = (0, 2, 1, 3)
  const double Waa = r.L_term, Wbb = r.L_term;
  Mat4& m = r.rho.m;
  m(0, 0) = 1.0 - (Waa + Wbb);
  m(0, 3) = -std::conj(r.G_AB);
  m(3, 0) = -r.G_AB;
  m(2, 2) = Wbb;
  m(2, 1) = std::conj(r.W_AB);
  m(1, 2) = r.W_AB;
  m(1, 1) = Waa;
  r.rho.basis = Basis::Energy;

  r.neg = std::max(0.0, std::abs(r.G_AB) - r.L_term);
  r.neg_eig = negativity(r.rho);
  r.perturbative_warning = r.L_term > 0.1;
  return r;
}

double negativity_closed_t0(const HarvestingSetup& s) {
  s.validate();
  if (s.dt != 0.0) throw InvalidParameter("closed-form negativity needs dt = 0");
  if (!(s.sep > 0.0) || !(s.sigma > 0.0))
    throw InvalidParameter("closed-form negativity needs sep > 0 and sigma > 0");
  const double a = alpha_of(s);
  const double WT = s.Omega * s.T;
  const double xe = s.sep / (2.0 * a * s.sigma);
  const double xi = s.sep / (2.0 * a * s.T);
  // e^{-xi^2} sqrt(erf(xe)^2 + erfi(xi)^2) without forming erfi
  const double g_erf = std::exp(-xi * xi) * std::erf(xe);
  const double g_erfi = 2.0 / std::sqrt(pi) * dawson(xi);
  const double nonlocal = std::sqrt(pi) * a * (s.T / s.sep) * std::hypot(g_erf, g_erfi);
  const double damp = -WT * WT;
  const double m = first_moment_scaled(WT / a).eval(damp).real();
  const double bracket = nonlocal * std::exp(damp) - m;
  return std::max(0.0, s.lambda * s.lambda / (4.0 * pi * a * a) * bracket);
}

Signalling signalling_half_delta(const HarvestingSetup& s) {
  s.validate();
  if (s.dt != 0.0) throw InvalidParameter("printed signalling form needs dt = 0");
  if (!(s.sigma > 0.0)) throw InvalidParameter("printed signalling form needs sigma > 0");
  if (!(s.sep > 0.0)) throw InvalidParameter("printed signalling form needs sep > 0");
  const double a = alpha_of(s);
  Signalling out;
  double e = 1.0;
  if (s.sigma < 1e-8 * s.sep)
    out.erf_limit = true;
  else
    e = std::erf(s.sep / (2.0 * a * s.sigma));
  const double WT = s.Omega * s.T;
  out.value = std::exp(-WT * WT - s.sep * s.sep / (4.0 * a * a * s.T * s.T)) /
              (4.0 * a * std::sqrt(pi)) * (s.T / s.sep) * e;
  return out;
}

double signalling_half_delta_general(const HarvestingSetup& s) {
  s.validate();
  return 0.5 * std::abs(evaluate(BiDistKind::Symmetric, s.smearing_A(+1.0), s.smearing_B(+1.0)).value);
}

double asymptotic_GF_largeL(const HarvestingSetup& s) {
  s.validate();
  const double T2 = s.T * s.T, L2 = s.sep * s.sep;
  const double W = s.Omega;
  return s.lambda * s.lambda * std::exp(-W * W * T2) / (2.0 * pi) *
         (T2 / L2 + 2.0 * T2 * (T2 + s.sigma * s.sigma) / (L2 * L2));
}

double asymptotic_GF_largeL_leading(const HarvestingSetup& s) {
  s.validate();
  const double T2 = s.T * s.T;
  return s.lambda * s.lambda * std::exp(-s.Omega * s.Omega * T2) / (2.0 * pi) * T2 / (s.sep * s.sep);
}

double asymptotic_negativity_optimal_gap(double ell, double lambda) {
  return 4.0 * lambda * lambda / pi * std::pow(ell, -4.0) * std::exp(-ell * ell / 4.0);
}

double asymptotic_negativity_largeT(const HarvestingSetup& s) {
  s.validate();
  const double WT = s.Omega * s.T;
  return s.lambda * s.lambda * std::exp(-WT * WT - s.sep * s.sep / (4.0 * s.T * s.T)) /
         (4.0 * std::sqrt(pi)) * (s.T / s.sep) * std::erf(s.sep / (2.0 * s.sigma));
}

std::vector<Fig1Row> fig1_sweep(const std::vector<double>& omegaT_grid, const HarvestingSetup& base,
                                unsigned jobs) {
  base.validate();
  for (std::size_t i = 1; i < omegaT_grid.size(); ++i)
    if (!(omegaT_grid[i] > omegaT_grid[i - 1]))
      throw InvalidParameter("OmegaT grid must be strictly increasing");
  if (omegaT_grid.empty()) throw InvalidParameter("OmegaT grid is empty");
  return parallel_map(omegaT_grid.size(), jobs, [&](std::size_t i) {
    HarvestingSetup s = base;
    s.Omega = omegaT_grid[i] / s.T;
    const HarvestingResult r = harvesting_state(s);
    const double l2 = s.lambda * s.lambda;
    return Fig1Row{omegaT_grid[i], l2 > 0.0 ? r.neg / l2 : 0.0, r.Delta_half};
  });
}

}  // namespace smear
