#include <cmath>
#include <numbers>

#include "doctest.h"
#include "smear/certify.hpp"
#include "smear/propagators.hpp"
#include "smear/udw.hpp"

using namespace smear;

namespace {

constexpr double pi = std::numbers::pi;

}  // namespace

TEST_CASE("excitation probability") {
  // Omega = 0 reduces to lambda^2 / (4 pi alpha^2)
  const DetectorParams d{0.3, make_smearing(2.0, 0.0, 0.0, 0.5, {0, 0, 0})};
  const double alpha2 = 1.0 + 0.25 / 4.0;
  CHECK(std::abs(excitation_probability(d) - 0.09 / (4 * pi * alpha2)) < 1e-15);

  // agrees with lambda^2 W(Lambda-, Lambda+) at a gap
  const auto p = make_smearing(1.0, 0.0, 1.3, 0.2, {0, 0, 0});
  const auto m = make_smearing(1.0, 0.0, -1.3, 0.2, {0, 0, 0});
  const double w = limit_L0_W(m, p).value.real();
  CHECK(std::abs(excitation_probability({1.0, p}) - w) <= 1e-13 * w);

  // deep in the gapped regime the bracket would cancel; the value must stay positive and finite
  const double tiny = excitation_probability({1.0, make_smearing(1.0, 0.0, 20.0, 0.1, {0, 0, 0})});
  CHECK(tiny > 0.0);
  CHECK(tiny < 1e-150);

  const SingleDetectorState s = single_detector_ground_final({3.0, make_smearing(1.0, 0.0, 0.0, 0.0, {0, 0, 0})});
  CHECK(s.perturbative_warning);
  CHECK(std::abs(s.rho.trace() - 1.0) < 1e-15);
}

TEST_CASE("harvesting state is Hermitian with unit trace") {
  for (double OT : {0.0, 1.0, 3.0}) {
    const HarvestingSetup s{0.1, OT, 1.0, 0.05, 2.0, 0.3};
    const HarvestingResult r = harvesting_state(s);
    CHECK(hermiticity_error(r.rho.m) == 0.0);
    CHECK(std::abs(r.rho.m.trace() - 1.0) < 1e-15);
    CHECK(eigh(r.rho.m).values[0] >= -10.0 * std::pow(s.lambda, 4));
  }
}

TEST_CASE("nonlocal term decomposes into Hadamard and symmetric parts") {
  const HarvestingSetup s{0.5, 1.2, 1.0, 0.3, 2.5, 0.4};
  const auto a = s.smearing_A(+1.0), b = s.smearing_B(+1.0);
  const cplx H = evaluate(BiDistKind::Hadamard, a, b).value;
  const cplx D = evaluate(BiDistKind::Symmetric, a, b).value;
  const cplx G = harvesting_state(s).G_AB / (s.lambda * s.lambda);
  const cplx want = 0.5 * H + cplx(0.0, 0.5) * D;
  CHECK(std::abs(G - want) <= 1e-12 * std::max(std::abs(H), std::abs(D)));
}

TEST_CASE("negativity is invariant under exchanging the detectors") {
  HarvestingSetup s{0.2, 1.5, 1.0, 0.1, 3.0, 0.7};
  const double n1 = harvesting_state(s).neg;
  s.dt = -s.dt;
  const double n2 = harvesting_state(s).neg;
  CHECK(std::abs(n1 - n2) <= 1e-14 * std::max(n1, 1e-300));
  CHECK(n1 > 0.0);
}

TEST_CASE("closed-form negativity matches the eigenvalue route") {
  const CheckResult r = certify_dual_negativity(2);
  INFO(r.detail);
  CHECK(r.pass);
}

TEST_CASE("signalling estimator") {
  const HarvestingSetup s{1.0, 0.8, 1.0, 0.2, 3.0, 0.0};
  const Signalling g = signalling_half_delta(s);
  CHECK_FALSE(g.erf_limit);
  CHECK(std::abs(g.value - signalling_half_delta_general(s)) <= 1e-12 * g.value);
  HarvestingSetup p = s;
  p.sigma = 1e-12;
  CHECK(signalling_half_delta(p).erf_limit);
  p.sigma = 0.0;
  CHECK_THROWS_AS(signalling_half_delta(p), InvalidParameter);
  p = s;
  p.dt = 1.0;
  CHECK_THROWS_AS(signalling_half_delta(p), InvalidParameter);
}

TEST_CASE("large-distance nonlocal term") {
  const HarvestingSetup s{1.0, 0.5, 1.0, 0.1, 20.0, 0.0};
  const double exact = std::abs(harvesting_state(s).G_AB);
  CHECK(std::abs(asymptotic_GF_largeL(s) / exact - 1.0) < 1e-3);
  HarvestingSetup far = s;
  far.sep = 100.0;
  CHECK(std::abs(asymptotic_GF_largeL_leading(far) / std::abs(harvesting_state(far).G_AB) - 1.0) < 1e-3);
}

TEST_CASE("asymptotic negativity forms") {
  const CheckResult r = certify_asymptotics();
  INFO(r.detail);
  CHECK(r.pass);
}

TEST_CASE("negativity sweep over the gap") {
  const CheckResult r = certify_fig1_property(2);
  INFO(r.detail);
  CHECK(r.pass);
  const HarvestingSetup base{1.0, 0.0, 1.0, 0.01, 5.0, 0.0};
  CHECK_THROWS_AS(fig1_sweep({}, base), InvalidParameter);
  CHECK_THROWS_AS(fig1_sweep({1.0, 1.0}, base), InvalidParameter);
  // no entanglement at small gaps
  const auto rows = fig1_sweep({0.0, 0.5, 1.0}, base);
  for (const auto& row : rows) CHECK(row.negativity_over_lambda2 == 0.0);
}

TEST_CASE("harvesting rejects invalid setups") {
  CHECK_THROWS_AS(harvesting_state({1.0, 0.0, 0.0, 0.0, 1.0, 0.0}), InvalidParameter);
  CHECK_THROWS_AS(harvesting_state({1.0, 0.0, 1.0, -0.1, 1.0, 0.0}), InvalidParameter);
  CHECK_THROWS_AS(negativity_closed_t0({1.0, 0.0, 1.0, 0.1, 1.0, 0.5}), InvalidParameter);
}
