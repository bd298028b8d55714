#pragma once

#include <array>
#include <vector>

#include "smear/model.hpp"
#include "smear/qmat.hpp"

namespace smear {

// rho_D = e^{-xi} cosh(xi) rho0 + e^{-xi} sinh(xi) mu rho0 mu.  Requires
// mu^2 = 1 and xi >= 0.
Mat2 single_channel(const Mat2& rho0, double xi, const Mat2& mu);
// e^{-2 xi} (cosh(2 xi) tr rho0^2 + M^2 sinh(2 xi)), M^2 = tr((mu rho0)^2)
double single_channel_purity(const Mat2& rho0, double xi, const Mat2& mu);

// lambda^2-scaled smeared distributions for two gapless detectors.
struct GaplessPairData {
  double W_aa = 0.0;
  double W_bb = 0.0;
  double H_ab = 0.0;
  double E_ab = 0.0;
  double Delta_ab = 0.0;
  double G_a = 0.0;  // lambda^2 G_R(a, a) / 2; global phase only, zero when sigma = 0
  double G_b = 0.0;
};

// Requires Omega = 0 for both detectors.
GaplessPairData pair_data(const DetectorParams& a, const DetectorParams& b);

// Element-wise factors F with rho_out = F o rho_in in the monopole basis.
Mat4 damping_factors(const GaplessPairData& d);
Mat4 unitary_factors(double delta_ab);

// Exact final state.  Energy-tagged input is converted first; the result is
// tagged Monopole.
TwoQubitState two_detector_state(const TwoQubitState& rho0, const GaplessPairData& d);
TwoQubitState unitary_only_state(const TwoQubitState& rho0, double delta_ab);

// sum_ij F_ij |i><j| (x) |i><j|
Mat16 choi_matrix(const Mat4& factors);

// Two identical gapless detectors, A at the origin and t = 0, B at distance
// sep and centre time dt.
struct GaplessSetup {
  double lambda = 1.0;
  double T = 1.0;
  double sigma = 0.0;
  double sep = 1.0;
  double dt = 0.0;

  void validate() const;
  DetectorParams detector_A() const;
  DetectorParams detector_B() const;
};

struct GaplessStates {
  TwoQubitState full;
  TwoQubitState unitary;
  GaplessPairData data;
};

// Both final states from |g g>.
GaplessStates ground_ground_states(const GaplessSetup& s);

double hs_distance_sq(const GaplessSetup& s);
double hs_limit_largeT(double lambda);

std::array<double, 4> pt_eigenvalues(const TwoQubitState& rho);

struct CausalOrderReport {
  double gr_abs = 0.0;  // |lambda^2 G_R(A, B)|
  double scale = 0.0;   // max(|E_ab|, |Delta_ab|)
  bool a_precedes = false;
  bool pass = false;    // gr_abs <= 1e-10 scale
};

// When A's window ends before B's starts, the retarded part from B to A
// vanishes and only signalling from A to B remains.
CausalOrderReport causal_order_reduction_check(const DetectorParams& a, const DetectorParams& b);

struct NoGoReport {
  double min_pt_eigenvalue = 0.0;
  bool pass = false;  // min >= -1e-12
};

// Ground-ground start, sep = 1: scans T over t_over_L for every lambda.
NoGoReport spacelike_no_go_check(double sigma_over_L, const std::vector<double>& lambdas,
                                 const std::vector<double>& t_over_L);

struct Fig3Row {
  double T_over_L;
  std::array<double, 4> ev_full;
  std::array<double, 4> ev_unitary;
};

std::vector<Fig3Row> fig3_sweep(double lambda, double sigma_over_L, const std::vector<double>& t_over_L,
                                unsigned jobs = 1);

// Smallest T/L at which the minimum partial-transpose eigenvalue of the full
// state drops below -threshold: a scan on [lo, hi] with step `step`, then
// bisection.  Returns a negative value if no onset is found.
double entanglement_onset(double lambda, double sigma_over_L, double lo = 0.05, double hi = 2.0,
                          double step = 0.005, double threshold = 1e-12);

struct Fig4Row {
  double T_over_L;
  std::vector<double> hs_sq;     // per lambda
  std::vector<double> hs_limit;  // per lambda
};

std::vector<Fig4Row> fig4_sweep(const std::vector<double>& lambdas, double sigma_over_L,
                                const std::vector<double>& t_over_L, unsigned jobs = 1);

}  // namespace smear
