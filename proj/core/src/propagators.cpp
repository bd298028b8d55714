#include "smear/propagators.hpp"

#include <cmath>

namespace smear {

namespace {

constexpr double kPi = 3.14159265358979323846264338328;
constexpr double kSqrtPi = 1.77245385090551602729816748334;
constexpr double kSqrt2 = 1.41421356237309504880168872421;
const double kSqrt2Pi = std::sqrt(2.0 * kPi);
const cplx kI{0.0, 1.0};

// Pair quantities shared by every closed form.
struct Pair {
  double T1, T2, s1, s2, O1, O2, t1, t2;
  double L, t0;
  double a2, a;     // a^2 = T1^2 + T2^2 + s1^2 + s2^2
  double beta;      // O2 T2^2 - O1 T1^2
  double gamma;     // -beta
  double pref;      // T1 T2 / 2 pi
  cplx logP;        // i(O1 t1 + O2 t2) - O1^2 T1^2 / 2 - O2^2 T2^2 / 2
};

Pair make_pair(const GaussianSmearing& f1, const GaussianSmearing& f2) {
  f1.validate();
  f2.validate();
  Pair p{};
  p.T1 = f1.T;
  p.T2 = f2.T;
  p.s1 = f1.sigma;
  p.s2 = f2.sigma;
  p.O1 = f1.Omega;
  p.O2 = f2.Omega;
  p.t1 = f1.t0;
  p.t2 = f2.t0;
  p.L = distance(f1.L, f2.L);
  p.t0 = f1.t0 - f2.t0;
  p.a2 = p.T1 * p.T1 + p.T2 * p.T2 + p.s1 * p.s1 + p.s2 * p.s2;
  p.a = std::sqrt(p.a2);
  p.beta = p.O2 * p.T2 * p.T2 - p.O1 * p.T1 * p.T1;
  p.gamma = -p.beta;
  p.pref = p.T1 * p.T2 / (2.0 * kPi);
  p.logP = cplx(-0.5 * (p.O1 * p.O1 * p.T1 * p.T1 + p.O2 * p.O2 * p.T2 * p.T2),
                p.O1 * p.t1 + p.O2 * p.t2);
  return p;
}

PropagatorValue finish(cplx v, BiDistKind k) {
  const bool of = !(std::isfinite(v.real()) && std::isfinite(v.imag()));
  return {v, k, of};
}

void require_sep(const Pair& p) {
  if (!(p.L > 0.0)) throw InvalidParameter("sep must be positive; use the sep = 0 limit");
}

void require_zero_sep(const Pair& p) {
  if (p.L != 0.0) throw InvalidParameter("sep = 0 limit called with sep > 0");
}

// J(c) = int_0^inf exp(-a^2 k^2 / 2 - c k) dk
ExpSum J(cplx c, double a) {
  const cplx z = kI * c / (kSqrt2 * a);
  return faddeeva_w_scaled(z) * (kSqrtPi / (kSqrt2 * a));
}

// M1(c) = int_0^inf k exp(-a^2 k^2 / 2 - c k) dk = -J'(c)
ExpSum M1(cplx c, double a) {
  return first_moment_scaled(c / (kSqrt2 * a)) * (1.0 / (a * a));
}

// M2(c) = int_0^inf k^2 exp(-a^2 k^2 / 2 - c k) dk = J''(c)
ExpSum M2(cplx c, double a) {
  ExpSum s = J(c, a);
  s.add(M1(c, a), -c);
  return s * (1.0 / (a * a));
}

// The k-integral of W without its prefactor, as (1/2iL)(J(c-) - J(c+)).
ExpSum wightman_kernel(const Pair& p) {
  const cplx cm(p.beta, p.t0 - p.L);
  const cplx cp(p.beta, p.t0 + p.L);
  return (J(cm, p.a) - J(cp, p.a)) * (1.0 / (2.0 * kI * p.L));
}

Pair swapped(const Pair& p) {
  Pair q = p;
  std::swap(q.T1, q.T2);
  std::swap(q.s1, q.s2);
  std::swap(q.O1, q.O2);
  std::swap(q.t1, q.t2);
  q.t0 = -p.t0;
  q.beta = -p.beta;
  q.gamma = -p.gamma;
  return q;
}

cplx W_value(const Pair& p) { return p.pref * wightman_kernel(p).eval(p.logP); }

cplx W_L0_value(const Pair& p) {
  return p.pref * M1(cplx(p.beta, p.t0), p.a).eval(p.logP);
}

// Retarded/advanced pieces.  After the Gaussian t-integral the retarded
// kernel reads C(r) = C0 exp(-(t0 - r)^2 / 2S + i gamma r / S), S = T1^2 + T2^2,
// and the spatial density of r = |x - x'| is
//   r / (L sqrt(2 pi) s) [exp(-(r - L)^2 / 2s^2) - exp(-(r + L)^2 / 2s^2)],
// s^2 = sigma1^2 + sigma2^2.  Each Gaussian piece is a half-line integral.
struct Causal {
  double S, s2, s, A;
  cplx logC0;  // log of C0 including the phase
  cplx q;      // t0 + i gamma
};

Causal make_causal(const Pair& p) {
  Causal c{};
  c.S = p.T1 * p.T1 + p.T2 * p.T2;
  c.s2 = p.s1 * p.s1 + p.s2 * p.s2;
  c.s = std::sqrt(c.s2);
  c.A = (c.S + c.s2) / (2.0 * c.s2 * c.S);
  const double Om = p.O1 + p.O2;
  const double T1s = p.T1 * p.T1, T2s = p.T2 * p.T2;
  c.logC0 = cplx(std::log(kSqrt2Pi * p.T1 * p.T2 / std::sqrt(c.S)) -
                     Om * Om * T1s * T2s / (2.0 * c.S),
                 Om * (p.t1 * T2s + p.t2 * T1s) / c.S);
  c.q = cplx(p.t0, p.gamma);
  return c;
}

void require_equal_sigma(const Pair& p) {
  if (p.s1 != p.s2) throw InvalidParameter("closed form requires equal sigma; use verify/oracle");
  if (!(p.s1 > 0.0)) throw InvalidParameter("closed form requires sigma > 0; use verify/oracle");
}

// K(A, B) = int_0^inf exp(-A r^2 + B r) dr
ExpSum K(double A, cplx B) {
  const double rA = std::sqrt(A);
  return faddeeva_w_scaled(-kI * B / (2.0 * rA)) * (kSqrtPi / (2.0 * rA));
}

// dir = +1 retarded, -1 advanced.  K(A, B) is expanded by hand: for
// Re B > 0 the reflected term carries exp(B^2 / 4A), which nearly cancels
// the -L^2 / 2s^2 of the prefactor when s is small.  Its combined exponent
// is formed directly as -(L -+ dir q)^2 / 2(S + s^2) + (q^2 - t0^2) / 2S.
ExpSum causal_kernel(const Pair& p, const Causal& c, double dir) {
  const double rA = std::sqrt(c.A);
  const cplx Bq = dir * c.q / c.S;
  const double Bl = p.L / c.s2;
  const cplx base = c.logC0 - p.t0 * p.t0 / (2.0 * c.S) - p.L * p.L / (2.0 * c.s2);
  const cplx qdiff = cplx(-p.gamma * p.gamma, 2.0 * p.t0 * p.gamma) / (2.0 * c.S);
  ExpSum s;
  for (double sign : {1.0, -1.0}) {
    const cplx B = Bq + sign * Bl;
    const cplx z = -kI * B / (2.0 * rA);
    const double k = sign * kSqrtPi / (2.0 * rA);
    if (z.imag() >= 0.0) {
      s.add(k * faddeeva_w(z), base);
    } else {
      const cplx r = p.L - sign * dir * c.q;
      s.add(2.0 * k, c.logC0 - r * r / (2.0 * (c.S + c.s2)) + qdiff);
      s.add(-k * faddeeva_w(-z), base);
    }
  }
  return s * (-1.0 / (4.0 * kPi * p.L * kSqrt2Pi * c.s));
}

ExpSum causal_kernel_L0(const Pair& p, const Causal& c, double dir) {
  const cplx B = dir * c.q / c.S;
  // int_0^inf r exp(-A r^2 + B r) dr = m(-B / 2 sqrt A) / 2A
  ExpSum s = first_moment_scaled(-B / (2.0 * std::sqrt(c.A))) * (1.0 / (2.0 * c.A));
  s.shift(c.logC0 - p.t0 * p.t0 / (2.0 * c.S));
  return s * (-2.0 / (4.0 * kPi * kSqrt2Pi * c.s * c.s2));
}

}  // namespace

PropagatorValue general_W(const GaussianSmearing& f1, const GaussianSmearing& f2) {
  const Pair p = make_pair(f1, f2);
  require_sep(p);
  return finish(W_value(p), BiDistKind::Wightman);
}

PropagatorValue general_H(const GaussianSmearing& f1, const GaussianSmearing& f2) {
  const Pair p = make_pair(f1, f2);
  require_sep(p);
  ExpSum s = wightman_kernel(p);
  s += wightman_kernel(swapped(p));
  return finish(p.pref * s.eval(p.logP), BiDistKind::Hadamard);
}

PropagatorValue general_E(const GaussianSmearing& f1, const GaussianSmearing& f2) {
  const Pair p = make_pair(f1, f2);
  require_sep(p);
  const cplx q(p.t0, p.gamma);
  const cplx xp = -(q + p.L) * (q + p.L) / (2.0 * p.a2);
  const cplx xm = -(q - p.L) * (q - p.L) / (2.0 * p.a2);
  const double pre = p.pref * kSqrt2Pi / (2.0 * p.L * p.a);
  return finish(pre * exp_diff(xp + p.logP, xm + p.logP), BiDistKind::Causal);
}

PropagatorValue general_GR(const GaussianSmearing& f1, const GaussianSmearing& f2) {
  const Pair p = make_pair(f1, f2);
  require_sep(p);
  require_equal_sigma(p);
  const Causal c = make_causal(p);
  return finish(causal_kernel(p, c, 1.0).eval(), BiDistKind::Retarded);
}

PropagatorValue general_GA(const GaussianSmearing& f1, const GaussianSmearing& f2) {
  const Pair p = make_pair(f1, f2);
  require_sep(p);
  require_equal_sigma(p);
  const Causal c = make_causal(p);
  return finish(causal_kernel(p, c, -1.0).eval(), BiDistKind::Advanced);
}

PropagatorValue general_Delta(const GaussianSmearing& f1, const GaussianSmearing& f2) {
  const Pair p = make_pair(f1, f2);
  require_sep(p);
  require_equal_sigma(p);
  const Causal c = make_causal(p);
  ExpSum s = causal_kernel(p, c, 1.0);
  s += causal_kernel(p, c, -1.0);
  return finish(s.eval(), BiDistKind::Symmetric);
}

// G_F = W21 + i G_R = W12 + i G_A.  Both equal H/2 + i Delta/2, but the
// symmetric split cancels badly when |G_F| << |H|; take whichever pairing has
// the smaller constituents.
cplx feynman_combine(cplx W12, cplx W21, cplx GR, cplx GA) {
  const double r = std::abs(W21) + std::abs(GR);
  const double a = std::abs(W12) + std::abs(GA);
  return r <= a ? W21 + kI * GR : W12 + kI * GA;
}

PropagatorValue general_GF(const GaussianSmearing& f1, const GaussianSmearing& f2) {
  const cplx gr = general_GR(f1, f2).value;
  const cplx ga = general_GA(f1, f2).value;
  const cplx v = feynman_combine(general_W(f1, f2).value, general_W(f2, f1).value, gr, ga);
  return finish(v, BiDistKind::Feynman);
}

PropagatorValue limit_L0_W(const GaussianSmearing& f1, const GaussianSmearing& f2) {
  const Pair p = make_pair(f1, f2);
  require_zero_sep(p);
  return finish(W_L0_value(p), BiDistKind::Wightman);
}

PropagatorValue limit_L0_H(const GaussianSmearing& f1, const GaussianSmearing& f2) {
  const Pair p = make_pair(f1, f2);
  require_zero_sep(p);
  const Pair q = swapped(p);
  ExpSum s = M1(cplx(p.beta, p.t0), p.a);
  s += M1(cplx(q.beta, q.t0), q.a);
  return finish(p.pref * s.eval(p.logP), BiDistKind::Hadamard);
}

PropagatorValue limit_L0_E(const GaussianSmearing& f1, const GaussianSmearing& f2) {
  const Pair p = make_pair(f1, f2);
  require_zero_sep(p);
  const cplx q(p.t0, p.gamma);
  const cplx x0 = -q * q / (2.0 * p.a2);
  const cplx v = -p.pref * kSqrt2Pi * q / (p.a2 * p.a) * std::exp(x0 + p.logP);
  return finish(v, BiDistKind::Causal);
}

PropagatorValue limit_L0_GR(const GaussianSmearing& f1, const GaussianSmearing& f2) {
  const Pair p = make_pair(f1, f2);
  require_zero_sep(p);
  require_equal_sigma(p);
  const Causal c = make_causal(p);
  return finish(causal_kernel_L0(p, c, 1.0).eval(), BiDistKind::Retarded);
}

PropagatorValue limit_L0_GA(const GaussianSmearing& f1, const GaussianSmearing& f2) {
  const Pair p = make_pair(f1, f2);
  require_zero_sep(p);
  require_equal_sigma(p);
  const Causal c = make_causal(p);
  return finish(causal_kernel_L0(p, c, -1.0).eval(), BiDistKind::Advanced);
}

PropagatorValue evaluate(BiDistKind kind, const GaussianSmearing& f1,
                         const GaussianSmearing& f2) {
  const bool zero = distance(f1.L, f2.L) == 0.0;
  switch (kind) {
    case BiDistKind::Wightman: return zero ? limit_L0_W(f1, f2) : general_W(f1, f2);
    case BiDistKind::Hadamard: return zero ? limit_L0_H(f1, f2) : general_H(f1, f2);
    case BiDistKind::Causal: return zero ? limit_L0_E(f1, f2) : general_E(f1, f2);
    case BiDistKind::Retarded: return zero ? limit_L0_GR(f1, f2) : general_GR(f1, f2);
    case BiDistKind::Advanced: return zero ? limit_L0_GA(f1, f2) : general_GA(f1, f2);
    case BiDistKind::Symmetric: {
      if (!zero) return general_Delta(f1, f2);
      const cplx v = limit_L0_GR(f1, f2).value + limit_L0_GA(f1, f2).value;
      return finish(v, BiDistKind::Symmetric);
    }
    case BiDistKind::Feynman: {
      if (!zero) return general_GF(f1, f2);
      const cplx v = feynman_combine(limit_L0_W(f1, f2).value, limit_L0_W(f2, f1).value,
                                     limit_L0_GR(f1, f2).value, limit_L0_GA(f1, f2).value);
      return finish(v, BiDistKind::Feynman);
    }
  }
  throw InvalidParameter("unknown kind");
}

// Equal-parameter forms.

namespace {

struct SpecialCommon {
  double as;   // sqrt(T^2 + sigma^2)
  cplx pre;    // T^2 exp(-Omega^2 T^2) exp(i Omega t0) / (4 sqrt(pi) L as)
  double xp, xm;  // (L +- t0) / (2 as)
};

SpecialCommon special_common(const SpecialPair& p) {
  if (!(p.T > 0.0) || !(p.sep > 0.0) || p.sigma < 0.0)
    throw InvalidParameter("special form needs T > 0, sep > 0, sigma >= 0");
  SpecialCommon c{};
  c.as = std::sqrt(p.T * p.T + p.sigma * p.sigma);
  c.pre = p.T * p.T * std::exp(cplx(-p.Omega * p.Omega * p.T * p.T, p.Omega * p.t0)) /
          (4.0 * kSqrtPi * p.sep * c.as);
  c.xp = (p.sep + p.t0) / (2.0 * c.as);
  c.xm = (p.sep - p.t0) / (2.0 * c.as);
  return c;
}

struct SpecialCausal {
  double x1, x2;  // (L T^2 -+ t0 sigma^2) / (2 T sigma as)
};

SpecialCausal special_causal(const SpecialPair& p, const SpecialCommon& c) {
  if (!(p.sigma > 0.0)) throw InvalidParameter("closed form requires sigma > 0; use verify/oracle");
  const double den = 2.0 * p.T * p.sigma * c.as;
  const double T2 = p.T * p.T, s2 = p.sigma * p.sigma;
  return {(p.sep * T2 - p.t0 * s2) / den, (p.sep * T2 + p.t0 * s2) / den};
}

}  // namespace

cplx special_H(const SpecialPair& p) {
  const SpecialCommon c = special_common(p);
  // exp(-x^2) erfi(x) = (2 / sqrt pi) D(x)
  return c.pre * (2.0 / kSqrtPi) * (dawson(c.xp) + dawson(c.xm));
}

cplx special_E(const SpecialPair& p) {
  const SpecialCommon c = special_common(p);
  return c.pre * (std::exp(-c.xp * c.xp) - std::exp(-c.xm * c.xm));
}

cplx special_GR(const SpecialPair& p) {
  const SpecialCommon c = special_common(p);
  const SpecialCausal k = special_causal(p, c);
  const double v = -gauss_erfc(c.xp * c.xp, k.x1) + gauss_erfc(c.xm * c.xm, -k.x2);
  return -0.5 * c.pre * v;
}

cplx special_GA(const SpecialPair& p) {
  const SpecialCommon c = special_common(p);
  const SpecialCausal k = special_causal(p, c);
  const double v = gauss_erfc(c.xp * c.xp, -k.x1) - gauss_erfc(c.xm * c.xm, k.x2);
  return -0.5 * c.pre * v;
}

cplx special_Delta(const SpecialPair& p) {
  const SpecialCommon c = special_common(p);
  const SpecialCausal k = special_causal(p, c);
  const double v = std::exp(-c.xp * c.xp) * std::erf(k.x1) + std::exp(-c.xm * c.xm) * std::erf(k.x2);
  return -c.pre * v;
}

cplx special_GF(const SpecialPair& p) { return 0.5 * special_H(p) + 0.5 * kI * special_Delta(p); }

// Momentum two-point functions.

WDerivatives wightman_omega_derivatives(const GaussianSmearing& f1, const GaussianSmearing& f2) {
  const Pair p = make_pair(f1, f2);
  require_sep(p);
  const cplx cm(p.beta, p.t0 - p.L);
  const cplx cp(p.beta, p.t0 + p.L);
  const cplx inv = 1.0 / (2.0 * kI * p.L);
  const ExpSum phi = (J(cm, p.a) - J(cp, p.a)) * inv;
  // d/dbeta J = -M1, d^2/dbeta^2 J = M2
  const ExpSum dphi = (M1(cp, p.a) - M1(cm, p.a)) * inv;
  const ExpSum ddphi = (M2(cm, p.a) - M2(cp, p.a)) * inv;
  const double T1s = p.T1 * p.T1, T2s = p.T2 * p.T2;
  const cplx p1(-p.O1 * T1s, p.t1);
  const cplx p2(-p.O2 * T2s, p.t2);

  WDerivatives d{};
  d.W = p.pref * phi.eval(p.logP);
  ExpSum s1 = phi * p1;
  s1.add(dphi, -T1s);
  d.dW1 = p.pref * s1.eval(p.logP);
  ExpSum s2 = phi * p2;
  s2.add(dphi, T2s);
  d.dW2 = p.pref * s2.eval(p.logP);
  ExpSum s12 = phi * (p1 * p2);
  s12.add(dphi, p1 * T2s - p2 * T1s);
  s12.add(ddphi, -T1s * T2s);
  d.dW12 = p.pref * s12.eval(p.logP);
  return d;
}

namespace {

cplx combine(MomentumKind which, const GaussianSmearing& f1, const GaussianSmearing& f2,
             const WDerivatives& d) {
  const double T1s = f1.T * f1.T, T2s = f2.T * f2.T;
  const cplx c1(f1.t0 / T1s, f1.Omega);
  const cplx c2(f2.t0 / T2s, f2.Omega);
  switch (which) {
    case MomentumKind::pi_phi: return -kI / T1s * d.dW1 - c1 * d.W;
    case MomentumKind::phi_pi: return -kI / T2s * d.dW2 - c2 * d.W;
    case MomentumKind::pi_pi:
      return -d.dW12 / (T1s * T2s) + kI * c2 / T1s * d.dW1 + kI * c1 / T2s * d.dW2 + c1 * c2 * d.W;
  }
  return {};
}

}  // namespace

PropagatorValue momentum_twopoint(const GaussianSmearing& f1, const GaussianSmearing& f2,
                                  MomentumKind which) {
  const WDerivatives d = wightman_omega_derivatives(f1, f2);
  return finish(combine(which, f1, f2, d), BiDistKind::Wightman);
}

PropagatorValue momentum_twopoint_fd(const GaussianSmearing& f1, const GaussianSmearing& f2,
                                     MomentumKind which) {
  const double h1 = 1e-5 * std::max(1.0, 1.0 / (f1.T * f1.T));
  const double h2 = 1e-5 * std::max(1.0, 1.0 / (f2.T * f2.T));
  auto shifted = [](GaussianSmearing f, double dO) {
    f.Omega += dO;
    return f;
  };
  WDerivatives d{};
  d.W = general_W(f1, f2).value;
  d.dW1 = (general_W(shifted(f1, h1), f2).value - general_W(shifted(f1, -h1), f2).value) / (2.0 * h1);
  d.dW2 = (general_W(f1, shifted(f2, h2)).value - general_W(f1, shifted(f2, -h2)).value) / (2.0 * h2);
  d.dW12 = (wightman_omega_derivatives(shifted(f1, h1), f2).dW2 -
            wightman_omega_derivatives(shifted(f1, -h1), f2).dW2) /
           (2.0 * h1);
  return finish(combine(which, f1, f2, d), BiDistKind::Wightman);
}

}  // namespace smear
