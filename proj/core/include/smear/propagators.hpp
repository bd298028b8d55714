#pragma once

#include "smear/model.hpp"
#include "smear/specfun.hpp"

namespace smear {

struct PropagatorValue {
  cplx value{};
  BiDistKind kind = BiDistKind::Wightman;
  bool overflow = false;
};

// General-parameter closed forms.  All require sep = |L1 - L2| > 0; the
// coincident-centre values come from the limit_L0_* family, and evaluate()
// dispatches between the two.
PropagatorValue general_W(const GaussianSmearing& f1, const GaussianSmearing& f2);
PropagatorValue general_H(const GaussianSmearing& f1, const GaussianSmearing& f2);
PropagatorValue general_E(const GaussianSmearing& f1, const GaussianSmearing& f2);

// Retarded/advanced family.  Needs sigma1 = sigma2 = sigma > 0.
PropagatorValue general_GR(const GaussianSmearing& f1, const GaussianSmearing& f2);
PropagatorValue general_GA(const GaussianSmearing& f1, const GaussianSmearing& f2);
PropagatorValue general_Delta(const GaussianSmearing& f1, const GaussianSmearing& f2);
PropagatorValue general_GF(const GaussianSmearing& f1, const GaussianSmearing& f2);

// Combines W(f1,f2), W(f2,f1), G_R(f1,f2), G_A(f1,f2) into G_F using the
// better-conditioned of W21 + i G_R and W12 + i G_A.
cplx feynman_combine(cplx W12, cplx W21, cplx GR, cplx GA);

// sep = 0, taken as d/d|L| (|L| X) at |L| = 0.
PropagatorValue limit_L0_W(const GaussianSmearing& f1, const GaussianSmearing& f2);
PropagatorValue limit_L0_H(const GaussianSmearing& f1, const GaussianSmearing& f2);
PropagatorValue limit_L0_E(const GaussianSmearing& f1, const GaussianSmearing& f2);
PropagatorValue limit_L0_GR(const GaussianSmearing& f1, const GaussianSmearing& f2);
PropagatorValue limit_L0_GA(const GaussianSmearing& f1, const GaussianSmearing& f2);

PropagatorValue evaluate(BiDistKind kind, const GaussianSmearing& f1,
                         const GaussianSmearing& f2);

// Equal-parameter forms: f1 = (T, t0, Omega, sigma, L), f2 = (T, 0, Omega, sigma, 0)
// with sep = |L|.  Real special functions only; used as a cross-check of the
// general forms.
struct SpecialPair {
  double T;
  double Omega;
  double sigma;
  double t0;
  double sep;
};

cplx special_H(const SpecialPair& p);
cplx special_E(const SpecialPair& p);
cplx special_GR(const SpecialPair& p);
cplx special_GA(const SpecialPair& p);
cplx special_Delta(const SpecialPair& p);
cplx special_GF(const SpecialPair& p);

enum class MomentumKind { pi_phi, phi_pi, pi_pi };

// Two-point functions with one or both field operators replaced by the
// conjugate momentum, via Omega-derivatives of the Wightman closed form.
PropagatorValue momentum_twopoint(const GaussianSmearing& f1, const GaussianSmearing& f2,
                                  MomentumKind which);
// Same relation with the Omega-derivatives replaced by central differences
// (step 1e-5 max(1, 1/T^2)).  The mixed derivative differentiates the
// analytic single derivative.
PropagatorValue momentum_twopoint_fd(const GaussianSmearing& f1, const GaussianSmearing& f2,
                                     MomentumKind which);

// Analytic Omega-derivatives of W used above.
struct WDerivatives {
  cplx W, dW1, dW2, dW12;
};
WDerivatives wightman_omega_derivatives(const GaussianSmearing& f1, const GaussianSmearing& f2);

}  // namespace smear
