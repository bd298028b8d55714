#include <cmath>
#include <numbers>
#include <random>

#include "doctest.h"
#include "smear/certify.hpp"
#include "smear/gapless.hpp"
#include "smear/propagators.hpp"

using namespace smear;

namespace {

const cplx I(0.0, 1.0);

GaplessPairData sample_data() {
  GaplessPairData d;
  d.W_aa = 0.11;
  d.W_bb = 0.07;
  d.H_ab = 0.03;
  d.E_ab = 0.4;
  d.Delta_ab = -0.25;
  return d;
}

}  // namespace

TEST_CASE("damping factors reproduce the explicit final-state matrix") {
  const GaplessPairData d = sample_data();
  const double Wa = d.W_aa, Wb = d.W_bb, H = d.H_ab, E = d.E_ab, D = d.Delta_ab;
  const Mat4 f = damping_factors(d);
  // basis |++>, |+->, |-+>, |-->
  auto near = [](cplx a, cplx b) { return std::abs(a - b) < 1e-15; };
  CHECK(near(f(0, 0), 1.0));
  CHECK(near(f(0, 1), std::exp(-2 * Wb + I * (E - D))));
  CHECK(near(f(0, 2), std::exp(-2 * Wa - I * (E + D))));
  CHECK(near(f(0, 3), std::exp(-2 * (Wa + Wb + H))));
  CHECK(near(f(1, 0), std::exp(-2 * Wb - I * (E - D))));
  CHECK(near(f(1, 1), 1.0));
  CHECK(near(f(1, 2), std::exp(-2 * (Wa + Wb - H))));
  CHECK(near(f(1, 3), std::exp(-2 * Wa + I * (E + D))));
  CHECK(near(f(2, 0), std::exp(-2 * Wa + I * (E + D))));
  CHECK(near(f(2, 1), std::exp(-2 * (Wa + Wb - H))));
  CHECK(near(f(2, 3), std::exp(-2 * Wb - I * (E - D))));
  CHECK(near(f(3, 0), std::exp(-2 * (Wa + Wb + H))));
  CHECK(near(f(3, 1), std::exp(-2 * Wa - I * (E + D))));
  CHECK(near(f(3, 2), std::exp(-2 * Wb + I * (E - D))));
  CHECK(near(f(3, 3), 1.0));
  // Hermitian structure
  for (std::size_t i = 0; i < 4; ++i)
    for (std::size_t j = 0; j < 4; ++j) CHECK(near(f(i, j), std::conj(f(j, i))));

  const Mat4 u = unitary_factors(D);
  CHECK(near(u(0, 1), std::exp(-I * D)));
  CHECK(near(u(0, 3), 1.0));
  CHECK(near(u(1, 2), 1.0));
}

TEST_CASE("single-detector channel") {
  std::mt19937_64 rng(8);
  std::normal_distribution<double> n(0, 1);
  for (int i = 0; i < 20; ++i) {
    Mat2 g;
    for (auto& x : g.a) x = cplx(n(rng), n(rng));
    Mat2 rho = g * g.adjoint();
    rho = (1.0 / rho.trace().real()) * rho;
    const double xi = std::abs(n(rng));
    const Mat2 out = single_channel(rho, xi, sigma_x());
    CHECK(std::abs(out.trace() - 1.0) < 1e-15);
    CHECK(std::abs(purity(out) - single_channel_purity(rho, xi, sigma_x())) <= 1e-13);
  }
  // strong coupling dephases fully in the monopole basis
  const Mat2 g = proj_ground();
  const Mat2 out = single_channel(g, 50.0, sigma_x());
  CHECK(std::abs(purity(out) - 0.5) < 1e-15);
  Mat2 bad = sigma_x();
  bad(0, 0) = 0.5;
  CHECK_THROWS_AS(single_channel(g, 1.0, bad), InvalidParameter);
  CHECK_THROWS_AS(single_channel(g, -1.0, sigma_x()), InvalidParameter);
}

TEST_CASE("channel physics") {
  const CheckResult r = certify_gapless_channel(41);
  INFO(r.detail);
  CHECK(r.pass);
}

TEST_CASE("pair data") {
  const GaplessSetup s{0.7, 1.0, 0.1, 2.0, 0.3};
  const auto a = s.detector_A(), b = s.detector_B();
  const GaplessPairData d = pair_data(a, b);
  CHECK(std::abs(d.W_aa - 0.49 * limit_L0_W(a.smearing, a.smearing).value.real()) < 1e-16);
  CHECK(d.W_aa == d.W_bb);
  CHECK(std::abs(d.E_ab - 0.49 * evaluate(BiDistKind::Causal, a.smearing, b.smearing).value.real()) < 1e-16);
  CHECK(d.G_a != 0.0);
  DetectorParams gapped = a;
  gapped.smearing.Omega = 0.5;
  CHECK_THROWS_AS(pair_data(gapped, b), InvalidParameter);
  CHECK_THROWS_AS(ground_ground_states({1.0, 1.0, 0.0, 0.0, 0.0}), InvalidParameter);
}

TEST_CASE("final states") {
  const GaplessStates st = ground_ground_states({1.0, 0.8, 0.05, 1.0, 0.0});
  CHECK(st.full.basis == Basis::Monopole);
  CHECK(st.unitary.basis == Basis::Monopole);
  st.full.validate(-1e-12);
  st.unitary.validate(-1e-12);
  // unitary-only evolution keeps the state pure
  CHECK(std::abs(purity(st.unitary.m) - 1.0) < 1e-14);
  CHECK(purity(st.full.m) < 1.0);
  for (const auto* rho : {&st.full, &st.unitary}) {
    const auto ev = pt_eigenvalues(*rho);
    CHECK(std::abs(ev[0] + ev[1] + ev[2] + ev[3] - 1.0) < 1e-14);
  }
  // non-unit trace input is rejected
  TwoQubitState twice = product_state(proj_ground(), proj_ground());
  twice.m = 2.0 * twice.m;
  CHECK_THROWS_AS(two_detector_state(twice, st.data), InvalidParameter);
}

TEST_CASE("Hilbert-Schmidt distance shrinks with the coupling") {
  for (double T : {0.5, 2.0, 10.0}) {
    double prev = INFINITY;
    for (double lam : {1.0, 0.5, 0.25}) {
      const double hs = hs_distance_sq({lam, T, 0.01, 1.0, 0.0});
      CHECK(hs <= prev);
      prev = hs;
    }
  }
  const CheckResult r = certify_fig4_limits();
  INFO(r.detail);
  CHECK(r.pass);
  CHECK(std::abs(hs_limit_largeT(1.0) - 0.0385454) < 1e-7);
}

TEST_CASE("partial-transpose sweep") {
  std::vector<double> grid;
  for (int i = 1; i <= 40; ++i) grid.push_back(0.05 * i);
  const auto rows = fig3_sweep(0.5, 0.05, grid, 3);
  REQUIRE(rows.size() == grid.size());
  for (std::size_t i = 0; i < rows.size(); ++i) {
    CHECK(rows[i].T_over_L == grid[i]);
    double sf = 0, su = 0;
    for (int k = 0; k < 4; ++k) {
      sf += rows[i].ev_full[k];
      su += rows[i].ev_unitary[k];
    }
    CHECK(std::abs(sf - 1.0) < 1e-14);
    CHECK(std::abs(su - 1.0) < 1e-14);
  }
  CHECK_THROWS_AS(fig3_sweep(0.5, 0.05, {}), InvalidParameter);
  CHECK_THROWS_AS(fig3_sweep(0.5, 0.05, {0.2, 0.1}), InvalidParameter);

  const CheckResult r = certify_fig3_onset();
  INFO(r.detail);
  CHECK(r.pass);
}

TEST_CASE("causal order removes the backward retarded term") {
  const auto a = DetectorParams{1.0, make_smearing(0.5, 0.0, 0.0, 0.05, {0, 0, 0})};
  const auto b = DetectorParams{1.0, make_smearing(0.5, 12.0, 0.0, 0.05, {1, 0, 0})};
  const CausalOrderReport rep = causal_order_reduction_check(a, b);
  CHECK(rep.a_precedes);
  CHECK(rep.pass);
  CHECK(rep.scale > 0.0);
  const CausalOrderReport same = causal_order_reduction_check(a, {1.0, make_smearing(0.5, 0.0, 0.0, 0.05, {1, 0, 0})});
  CHECK_FALSE(same.a_precedes);
}
