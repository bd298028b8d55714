#pragma once

#include <vector>

#include "smear/model.hpp"
#include "smear/qmat.hpp"

namespace smear {

// Two identical Gaussian detectors: A at the origin and t = 0, B displaced by
// sep along x and centred at t = dt.
struct HarvestingSetup {
  double lambda = 1.0;
  double Omega = 0.0;
  double T = 1.0;
  double sigma = 0.0;
  double sep = 0.0;
  double dt = 0.0;

  void validate() const;
  GaussianSmearing smearing_A(double omega_sign) const;
  GaussianSmearing smearing_B(double omega_sign) const;
};

struct HarvestingResult {
  double L_term = 0.0;   // lambda^2 W(A-, A+), equal for both detectors
  cplx G_AB{};           // lambda^2 G_F(A+, B+)
  cplx W_AB{};           // lambda^2 W(A-, B+)
  double Delta_half = 0.0;  // |Delta(A+, B+)| / 2, without lambda^2
  TwoQubitState rho;     // energy basis, index 2a + b with A first
  double neg = 0.0;      // max(0, |G_AB| - L)
  double neg_eig = 0.0;  // eigenvalue negativity of rho
  bool perturbative_warning = false;
};

// lambda^2 W(Lambda-, Lambda+) at coincident centres, overflow-safe.
double excitation_probability(const DetectorParams& d);

struct SingleDetectorState {
  Mat2 rho;
  double p_e = 0.0;
  bool perturbative_warning = false;  // p_e > 0.1
};

SingleDetectorState single_detector_ground_final(const DetectorParams& d);

HarvestingResult harvesting_state(const HarvestingSetup& s);

// Closed-form negativity at dt = 0 in terms of erf, erfi and erfc only.
double negativity_closed_t0(const HarvestingSetup& s);

struct Signalling {
  double value = 0.0;
  bool erf_limit = false;  // sigma < 1e-8 sep; erf factor taken as 1
};
// |Delta(A+, B+)| / 2 at dt = 0 from the Gaussian-erf form.  Rejects
// sigma = 0 and dt != 0.
Signalling signalling_half_delta(const HarvestingSetup& s);
// Any dt, from the general symmetric propagator.
double signalling_half_delta_general(const HarvestingSetup& s);

// |G_AB| for sep >> T, two terms and leading term.
double asymptotic_GF_largeL(const HarvestingSetup& s);
double asymptotic_GF_largeL_leading(const HarvestingSetup& s);
// Negativity at the optimal gap Omega T = ell / 2, ell = sep / T.
double asymptotic_negativity_optimal_gap(double ell, double lambda);
// Negativity for T >> sep.
double asymptotic_negativity_largeT(const HarvestingSetup& s);

struct Fig1Row {
  double OmegaT;
  double negativity_over_lambda2;
  double half_delta_over_lambda2;
};

// base.Omega is ignored; each row sets Omega = OmegaT / T.
std::vector<Fig1Row> fig1_sweep(const std::vector<double>& omegaT_grid, const HarvestingSetup& base,
                                unsigned jobs = 1);

}  // namespace smear
