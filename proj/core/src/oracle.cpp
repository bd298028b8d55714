#include "smear/oracle.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "smear/specfun.hpp"

namespace smear {

namespace {

constexpr double pi = std::numbers::pi;
const cplx I(0.0, 1.0);

// exp(-qa x^2 - qb x) envelope on [0, inf), oscillating at angular frequency osc
struct Envelope {
  double qa;
  double qb;
  double osc;
};

double range_end(const Envelope& e, double cut) {
  double drop = -std::log(cut);
  // measure from the interior maximum when qb < 0
  if (e.qb < 0.0 && e.qa > 0.0) drop += e.qb * e.qb / (4.0 * e.qa);
  if (e.qa <= 0.0) return drop / e.qb;
  return (-e.qb + std::sqrt(e.qb * e.qb + 4.0 * e.qa * drop)) / (2.0 * e.qa);
}

std::vector<double> make_breaks(const Envelope& e, double xmax) {
  std::vector<double> b{0.0};
  const double phase = e.osc * xmax;
  if (phase > 1e3) {
    const double step = pi / e.osc;
    for (double x = step; x < xmax; x += step) b.push_back(x);
  } else {
    const int n = std::max(1, static_cast<int>(std::ceil(phase / (2.0 * pi))));
    for (int i = 1; i < n; ++i) b.push_back(xmax * i / n);
  }
  b.push_back(xmax);
  return b;
}

double sampled_peak(const ComplexIntegrand& f, double xmax) {
  double peak = 0.0;
  for (int i = 0; i <= 256; ++i) peak = std::max(peak, std::abs(f(xmax * i / 256.0)));
  return peak;
}

QuadratureResult integrate(const ComplexIntegrand& f, const Envelope& env, const QuadOptions& opt,
                           bool use_romberg = false) {
  const double xmax = range_end(env, opt.envelope_cut);
  const auto breaks = make_breaks(env, xmax);
  const double abs_tol = opt.abs_scale * sampled_peak(f, xmax) * xmax;
  QuadratureResult r;
  if (use_romberg) {
    std::vector<QuadratureResult> parts;
    const double share = abs_tol / static_cast<double>(breaks.size() - 1);
    for (std::size_t i = 0; i + 1 < breaks.size(); ++i)
      parts.push_back(romberg(f, breaks[i], breaks[i + 1], opt.rel_tol, share));
    r = pairwise_sum(parts);
  } else {
    GKOptions gk{abs_tol, opt.rel_tol, opt.max_intervals};
    r = gauss_kronrod(f, breaks, gk);
  }
  r.evaluations += 257;
  if (!r.converged) throw NonConvergence("quadrature did not reach its tolerance", r);
  return r;
}

// analytic pieces carry a few ulps of rounding
QuadratureResult exact(cplx v) { return {v, 8.0 * 2.220446049250313e-16 * std::abs(v), 1, true}; }

// ---- Wightman ---------------------------------------------------------

QuadratureResult wightman(const GaussianSmearing& f1, const GaussianSmearing& f2,
                          const QuadOptions& opt, bool use_romberg) {
  f1.validate();
  f2.validate();
  const double L = distance(f1.L, f2.L);
  const double t0 = f1.t0 - f2.t0;
  const double T1s = f1.T * f1.T, T2s = f2.T * f2.T;
  const double a2 = T1s + T2s + f1.sigma * f1.sigma + f2.sigma * f2.sigma;
  const double a = std::sqrt(a2);
  const double beta = f2.Omega * T2s - f1.Omega * T1s;
  const double lp = std::log(f1.T * f2.T / (2.0 * pi)) - 0.5 * f1.Omega * f1.Omega * T1s -
                    0.5 * f2.Omega * f2.Omega * T2s;
  const cplx phase = std::exp(I * (f1.Omega * f1.t0 + f2.Omega * f2.t0));

  auto radial = [L](double k) { return L > 0.0 ? std::sin(k * L) / L : k; };
  ComplexIntegrand f = [=](double k) {
    return radial(k) * std::exp(cplx(-0.5 * a2 * k * k - beta * k + lp, -k * t0));
  };
  const Envelope env{0.5 * a2, std::abs(beta), L + std::abs(t0)};

  QuadratureResult r;
  if (beta >= 0.0) {
    r = integrate(f, env, opt, use_romberg);
  } else {
    ComplexIntegrand g = [&f](double k) { return f(-k); };
    const QuadratureResult rem = integrate(g, env, opt, use_romberg);
    const double norm = std::sqrt(2.0 * pi) / a;
    cplx full;
    if (L > 0.0) {
      const cplx b1(-beta, L - t0), b2(-beta, -(L + t0));
      full = norm / (2.0 * I * L) * exp_diff(b1 * b1 / (2.0 * a2) + lp, b2 * b2 / (2.0 * a2) + lp);
    } else {
      const cplx b(-beta, -t0);
      full = norm * b / a2 * std::exp(b * b / (2.0 * a2) + lp);
    }
    r = exact(full) - rem;
  }
  return phase * r;
}

// ---- retarded / advanced ----------------------------------------------

// coef * v^power * exp(-(v - mu)^2 / 2 se2 + log_t(v)), with log_t the
// analytic time integral; quadratic in v with coefficients (qa, qb, qc).
struct Piece {
  double coef;
  int power;
  double mu;
};

QuadratureResult causal_dir(const GaussianSmearing& f1, const GaussianSmearing& f2, int dir,
                            const QuadOptions& opt) {
  f1.validate();
  f2.validate();
  const double L = distance(f1.L, f2.L);
  const double t0 = f1.t0 - f2.t0;
  const double T1s = f1.T * f1.T, T2s = f2.T * f2.T;
  const double S = T1s + T2s;
  const double se2 = 0.5 * (f1.sigma * f1.sigma + f2.sigma * f2.sigma);
  const double gam = f1.Omega * T1s - f2.Omega * T2s;
  const double osum = f1.Omega + f2.Omega;
  const cplx logC0(std::log(std::sqrt(2.0 * pi) * f1.T * f2.T / std::sqrt(S)) -
                       osum * osum * T1s * T2s / (2.0 * S),
                   osum * (f1.t0 * T2s + f2.t0 * T1s) / S);
  const cplx tau = static_cast<double>(dir) * cplx(t0, gam);
  const cplx c_t = logC0 - t0 * t0 / (2.0 * S);
  auto log_t = [&](double v) {
    return c_t - v * v / S + std::sqrt(2.0) * v * tau / S;
  };

  if (se2 == 0.0) {
    if (L == 0.0)
      throw InvalidParameter("retarded quadrature needs sep > 0 or sigma > 0");
    // the radial density collapses onto the light cone r = L
    const double r = L;
    const cplx C = std::exp(c_t - r * r / (2.0 * S) + r * tau / S);
    return exact(-C / (4.0 * pi * L));
  }

  const double se = std::sqrt(se2);
  std::vector<Piece> pieces;
  double pre;
  if (L > 0.0) {
    pre = -1.0 / (2.0 * std::sqrt(2.0) * std::pow(pi, 1.5) * se * L);
    pieces = {{0.5, 0, L / std::sqrt(2.0)}, {-0.5, 0, -L / std::sqrt(2.0)}};
  } else {
    pre = -1.0 / (2.0 * std::sqrt(2.0) * std::pow(pi, 1.5) * se);
    pieces = {{1.0 / (std::sqrt(2.0) * se2), 1, 0.0}};
  }

  QuadratureResult total;
  for (const Piece& p : pieces) {
    ComplexIntegrand g = [&, p](double v) {
      const double poly = p.power == 0 ? 1.0 : v;
      return p.coef * poly * std::exp(-(v - p.mu) * (v - p.mu) / (2.0 * se2) + log_t(v));
    };
    const double qa = 1.0 / (2.0 * se2) + 1.0 / S;
    const cplx qb = p.mu / se2 + std::sqrt(2.0) * tau / S;
    const Envelope env{qa, std::abs(qb.real()), std::abs(qb.imag())};
    if (qb.real() <= 0.0) {
      total += integrate(g, env, opt);
    } else {
      ComplexIntegrand h = [&g](double v) { return g(-v); };
      const QuadratureResult rem = integrate(h, env, opt);
      // qb^2 / 4qa + qc with the O(1 / se2) parts cancelled by hand
      const double D = S + 2.0 * se2;
      const cplx expo = (std::sqrt(2.0) * p.mu * tau - p.mu * p.mu) / D + tau * tau * se2 / (S * D) + c_t;
      cplx full = std::sqrt(pi / qa) * std::exp(expo);
      if (p.power == 1) full *= qb / (2.0 * qa);
      total += exact(p.coef * full) - rem;
    }
  }
  return pre * total;
}

}  // namespace

QuadratureResult quad_W_momentum(const GaussianSmearing& f1, const GaussianSmearing& f2,
                                 const QuadOptions& opt) {
  return wightman(f1, f2, opt, false);
}

QuadratureResult quad_W_romberg(const GaussianSmearing& f1, const GaussianSmearing& f2,
                                const QuadOptions& opt) {
  return wightman(f1, f2, opt, true);
}

namespace {

// The composite kinds each have several exact representations in terms of
// W12, W21, G_R, G_A.  Whichever has the smallest constituents loses the
// least to cancellation.
struct Candidate {
  QuadratureResult r;
  double weight;
};

QuadratureResult best(std::initializer_list<Candidate> cs) {
  const Candidate* pick = cs.begin();
  for (const Candidate& c : cs)
    if (c.weight < pick->weight) pick = &c;
  return pick->r;
}

struct Primitives {
  QuadratureResult w12, w21, gr, ga;
  bool causal = false;
};

Primitives primitives(const GaussianSmearing& f1, const GaussianSmearing& f2,
                      const QuadOptions& opt, bool need_causal) {
  Primitives p;
  p.w12 = quad_W_momentum(f1, f2, opt);
  p.w21 = quad_W_momentum(f2, f1, opt);
  const bool degenerate = distance(f1.L, f2.L) == 0.0 && f1.sigma == 0.0 && f2.sigma == 0.0;
  if (need_causal || !degenerate) {
    p.gr = causal_dir(f1, f2, +1, opt);
    p.ga = causal_dir(f1, f2, -1, opt);
    p.causal = true;
  }
  return p;
}

double mag(const QuadratureResult& r) { return std::abs(r.value); }

}  // namespace

QuadratureResult quad_H(const GaussianSmearing& f1, const GaussianSmearing& f2,
                        const QuadOptions& opt) {
  const Primitives p = primitives(f1, f2, opt, false);
  const QuadratureResult direct = p.w12 + p.w21;
  if (!p.causal) return direct;
  const QuadratureResult e = p.gr - p.ga;
  const double we = mag(p.gr) + mag(p.ga);
  return best({{direct, mag(p.w12) + mag(p.w21)},
               {cplx(2.0) * p.w12 - I * e, 2.0 * mag(p.w12) + we},
               {cplx(2.0) * p.w21 + I * e, 2.0 * mag(p.w21) + we}});
}

QuadratureResult quad_GR_spacetime(const GaussianSmearing& f1, const GaussianSmearing& f2,
                                   const QuadOptions& opt) {
  return causal_dir(f1, f2, +1, opt);
}

QuadratureResult quad_GA_spacetime(const GaussianSmearing& f1, const GaussianSmearing& f2,
                                   const QuadOptions& opt) {
  return causal_dir(f1, f2, -1, opt);
}

QuadratureResult quad_E(const GaussianSmearing& f1, const GaussianSmearing& f2,
                        const QuadOptions& opt) {
  const Primitives p = primitives(f1, f2, opt, false);
  const QuadratureResult via_w = -I * (p.w12 - p.w21);
  if (!p.causal) return via_w;
  return best({{via_w, mag(p.w12) + mag(p.w21)}, {p.gr - p.ga, mag(p.gr) + mag(p.ga)}});
}

QuadratureResult quad_Delta(const GaussianSmearing& f1, const GaussianSmearing& f2,
                            const QuadOptions& opt) {
  const Primitives p = primitives(f1, f2, opt, true);
  const QuadratureResult e = -I * (p.w12 - p.w21);
  const double we = mag(p.w12) + mag(p.w21);
  return best({{p.gr + p.ga, mag(p.gr) + mag(p.ga)},
               {cplx(2.0) * p.gr - e, 2.0 * mag(p.gr) + we},
               {cplx(2.0) * p.ga + e, 2.0 * mag(p.ga) + we}});
}

QuadratureResult quad_GF(const GaussianSmearing& f1, const GaussianSmearing& f2,
                         const QuadOptions& opt) {
  const Primitives p = primitives(f1, f2, opt, true);
  return best({{p.w21 + I * p.gr, mag(p.w21) + mag(p.gr)},
               {p.w12 + I * p.ga, mag(p.w12) + mag(p.ga)},
               {cplx(0.5) * (p.w12 + p.w21) + cplx(0.0, 0.5) * (p.gr + p.ga),
                0.5 * (mag(p.w12) + mag(p.w21) + mag(p.gr) + mag(p.ga))}});
}

QuadratureResult quad_kind(BiDistKind kind, const GaussianSmearing& f1, const GaussianSmearing& f2,
                           const QuadOptions& opt) {
  switch (kind) {
    case BiDistKind::Wightman: return quad_W_momentum(f1, f2, opt);
    case BiDistKind::Hadamard: return quad_H(f1, f2, opt);
    case BiDistKind::Causal: return quad_E(f1, f2, opt);
    case BiDistKind::Retarded: return quad_GR_spacetime(f1, f2, opt);
    case BiDistKind::Advanced: return quad_GA_spacetime(f1, f2, opt);
    case BiDistKind::Symmetric: return quad_Delta(f1, f2, opt);
    case BiDistKind::Feynman: return quad_GF(f1, f2, opt);
  }
  throw InvalidParameter("unknown kind");
}

QuadratureResult quad_GF_momentum(const DetectorParams& a, const DetectorParams& b,
                                  const QuadOptions& opt) {
  a.validate();
  b.validate();
  const auto& sa = a.smearing;
  const auto& sb = b.smearing;
  if (sa.T != sb.T || sa.sigma != sb.sigma || sa.Omega != sb.Omega)
    throw InvalidParameter("momentum Feynman integral needs equal T, sigma and Omega");
  if (!(sa.sigma > 0.0)) throw InvalidParameter("momentum Feynman integral needs sigma > 0");
  const double T = sa.T, s = sa.sigma, W = sa.Omega;
  const double L = distance(sa.L, sb.L);
  const double t0 = sa.t0 - sb.t0;
  const double x = t0 / (2.0 * T);
  ComplexIntegrand f = [=](double k) {
    const double radial = L > 0.0 ? std::sin(k * L) / L : k;
    const double damp = -k * k * (s * s + T * T) - W * W * T * T;
    const cplx e1 = erfc_scaled(cplx(-x, k * T)).eval(cplx(damp, -k * t0));
    const cplx e2 = erfc_scaled(cplx(x, k * T)).eval(cplx(damp, k * t0));
    return radial * (e1 + e2);
  };
  const Envelope env{s * s, 0.0, L};
  const QuadratureResult r = integrate(f, env, opt);
  const cplx pre = a.lambda * b.lambda * T * T * std::exp(I * W * (sa.t0 + sb.t0)) / (4.0 * pi);
  return pre * r;
}

IntegralIdentity check_integral_identity(double gamma, double sigma, double ell,
                                         const QuadOptions& opt) {
  if (!std::isfinite(gamma) || !std::isfinite(sigma) || !std::isfinite(ell))
    throw InvalidParameter("identity parameters must be finite");
  if (!(std::abs(gamma) < std::abs(sigma)))
    throw InvalidParameter("integral diverges unless |gamma| < |sigma|");
  const double s2 = sigma * sigma, g2 = gamma * gamma;
  ComplexIntegrand f = [=](double r) {
    // erfi(x) exp(-x^2) = 2 D(x) / sqrt(pi)
    return std::exp(-s2 * r * r) * std::sin(r * ell) * (2.0 / std::sqrt(pi)) * dawson(gamma * r);
  };
  IntegralIdentity out;
  if (gamma == 0.0 || ell == 0.0) {
    out.lhs = {0.0, 0.0, 1, true};
  } else {
    out.lhs = integrate(f, {s2, 0.0, std::abs(ell)}, opt);
  }
  const double q = std::sqrt(g2 + s2);
  out.rhs = std::exp(-ell * ell / (4.0 * (g2 + s2))) / q * (std::sqrt(pi) / 2.0) *
            std::erf(ell * gamma / (2.0 * std::abs(sigma) * q));
  return out;
}

IntegralIdentity check_integral_identity_complex(cplx gamma, double sigma, cplx ell,
                                                 const QuadOptions& opt) {
  if (!(std::abs(gamma) < std::abs(sigma)))
    throw InvalidParameter("integral diverges unless |gamma| < |sigma|");
  const double s2 = sigma * sigma;
  ComplexIntegrand f = [=](double r) {
    return std::exp(-s2 * r * r) * std::sin(r * ell) * scaled_erfi(gamma * r, gamma * gamma * r * r);
  };
  IntegralIdentity out;
  out.lhs = integrate(f, {s2, -std::abs(ell.imag()), std::abs(ell.real())}, opt);
  const cplx q2 = gamma * gamma + s2;
  const cplx q = std::sqrt(q2);
  out.rhs = std::exp(-ell * ell / (4.0 * q2)) / q * (std::sqrt(pi) / 2.0) *
            erf_c(ell * gamma / (2.0 * std::abs(sigma) * q));
  return out;
}

}  // namespace smear
