#include <cmath>
#include <numbers>
#include <random>

#include "doctest.h"
#include "smear/certify.hpp"
#include "smear/oracle.hpp"
#include "smear/propagators.hpp"
#include "smear/qmat.hpp"

using namespace smear;

namespace {

constexpr BiDistKind kinds[] = {BiDistKind::Wightman, BiDistKind::Hadamard, BiDistKind::Causal,
                                BiDistKind::Retarded, BiDistKind::Advanced, BiDistKind::Symmetric,
                                BiDistKind::Feynman};

double rel(cplx got, cplx want) {
  const double m = std::abs(want);
  return m > 0 ? std::abs(got - want) / m : std::abs(got);
}

GaussianSmearing scaled(const GaussianSmearing& f, double s) {
  return make_smearing(s * f.T, s * f.t0, f.Omega / s, s * f.sigma, {s * f.L.x, s * f.L.y, s * f.L.z});
}

}  // namespace

TEST_CASE("identity suite on 200 tuples") {
  const CheckResult r = certify_identities(2024);
  INFO(r.detail);
  CHECK(r.pass);
  CHECK(r.max_rel_err <= 1e-12);
}

TEST_CASE("retarded and advanced swap under exchange of arguments") {
  const auto f1 = make_smearing(1.0, 1.3, 0.7, 0.5, {2, 0, 0});
  const auto f2 = make_smearing(2.0, 0.0, -0.4, 0.5, {0, 0, 0});
  CHECK(rel(general_GR(f1, f2).value, general_GA(f2, f1).value) < 1e-14);
  CHECK(rel(general_GA(f1, f2).value, general_GR(f2, f1).value) < 1e-14);
}

TEST_CASE("causal propagator vanishes for identical smearings") {
  for (double sg : {0.0, 0.3, 2.0}) {
    const auto f = make_smearing(1.5, 0.0, 0.8, sg, {0, 0, 0});
    CHECK(limit_L0_E(f, f).value == cplx(0.0));
  }
  // equal Omega T^2 with different T
  const auto a = make_smearing(1.0, 0.0, 0.8, 0.4, {0, 0, 0});
  const auto b = make_smearing(2.0, 0.0, 0.2, 0.4, {1.5, 0, 0});
  CHECK(std::abs(general_E(a, b).value) < 1e-15 * std::abs(general_W(a, b).value));
}

TEST_CASE("scale covariance") {
  const auto f1 = make_smearing(1.3, 0.9, 0.6, 0.4, {2.5, 0, 0});
  const auto f2 = make_smearing(0.8, -0.3, -0.9, 0.4, {0, 0, 0});
  for (double s : {0.1, 10.0})
    for (BiDistKind k : kinds) {
      const cplx base = evaluate(k, f1, f2).value;
      const cplx moved = evaluate(k, scaled(f1, s), scaled(f2, s)).value;
      CHECK_MESSAGE(rel(moved, base) <= 1e-12, to_string(k) << " s=" << s);
    }
}

TEST_CASE("self Wightman value") {
  const CheckResult r = certify_self_wightman();
  INFO(r.detail);
  CHECK(r.pass);
}

TEST_CASE("coincident limit is continuous") {
  for (double sg : {0.0, 0.5, 1.0}) {
    const auto a = make_smearing(1.0, 0.4, 0.3, sg, {1e-6, 0, 0});
    const auto b = make_smearing(1.4, 0.0, -0.2, sg, {0, 0, 0});
    const auto b0 = make_smearing(1.4, 0.0, -0.2, sg, {0, 0, 0});
    const auto a0 = make_smearing(1.0, 0.4, 0.3, sg, {0, 0, 0});
    const cplx lim = limit_L0_W(a0, b0).value;
    CHECK(std::abs(lim - general_W(a, b).value) <= 1e-9 * std::abs(lim));
  }
}

TEST_CASE("momentum two-point functions: analytic against finite differences") {
  std::mt19937_64 rng(5);
  std::uniform_real_distribution<double> u(0, 1);
  double worst = 0;
  for (int i = 0; i < 20; ++i) {
    const double sg = 1.5 * u(rng);
    const auto a = make_smearing(0.5 + 2 * u(rng), -3 + 6 * u(rng), -2 + 4 * u(rng), sg, {0.2 + 5 * u(rng), 0, 0});
    const auto b = make_smearing(0.5 + 2 * u(rng), 0.0, -2 + 4 * u(rng), sg, {0, 0, 0});
    for (auto m : {MomentumKind::pi_phi, MomentumKind::phi_pi, MomentumKind::pi_pi}) {
      const double e = rel(momentum_twopoint(a, b, m).value, momentum_twopoint_fd(a, b, m).value);
      worst = std::max(worst, e);
      CHECK_MESSAGE(e <= 1e-7, "point " << i);
    }
  }
  MESSAGE("worst relative difference " << worst);
}

TEST_CASE("integral identity") {
  const CheckResult draws = certify_integral_identity(17);
  INFO(draws.detail);
  CHECK(draws.pass);
  const CheckResult one = certify_integral_identity_point(1.0, 2.0, 3.0);
  CHECK(one.pass);
  CHECK(one.max_rel_err <= 1e-8);
  CHECK_THROWS_AS(check_integral_identity(2.0, 1.0, 1.0), InvalidParameter);
}

TEST_CASE("Gauss-Kronrod and Romberg agree on spot points") {
  const GaussianSmearing pts[5][2] = {
      {make_smearing(1.0, 0.0, 0.0, 0.0, {1, 0, 0}), make_smearing(1.0, 0.0, 0.0, 0.0, {0, 0, 0})},
      {make_smearing(1.0, 1.3, 0.7, 0.5, {2, 0, 0}), make_smearing(2.0, 0.0, -0.4, 0.5, {0, 0, 0})},
      {make_smearing(0.3, -2.0, 2.0, 1.0, {5, 0, 0}), make_smearing(0.7, 0.0, 1.0, 1.0, {0, 0, 0})},
      {make_smearing(4.0, 6.0, -0.5, 0.1, {10, 0, 0}), make_smearing(3.0, 0.0, 0.3, 0.1, {0, 0, 0})},
      {make_smearing(1.0, 0.5, 1.0, 0.2, {0, 0, 0}), make_smearing(1.5, 0.0, -1.0, 0.2, {0, 0, 0})},
  };
  for (const auto& p : pts) {
    const auto gk = quad_W_momentum(p[0], p[1]);
    const auto rb = quad_W_romberg(p[0], p[1]);
    CHECK(rel(rb.value, gk.value) <= 1e-9);
  }
}

TEST_CASE("oracle grid passes and a loosened envelope fails it") {
  const CheckResult ok = certify_oracle_grid(99);
  INFO(ok.detail);
  CHECK(ok.pass);
  CHECK(ok.max_rel_err <= 1e-8);
  QuadOptions bad;
  bad.envelope_cut = 1e-3;
  CHECK_FALSE(certify_oracle_grid(99, 50, bad).pass);
}

TEST_CASE("negativity and spectrum are invariant under the local basis change") {
  std::mt19937_64 rng(3);
  std::normal_distribution<double> n(0, 1);
  for (int i = 0; i < 50; ++i) {
    Mat4 g;
    for (auto& x : g.a) x = cplx(n(rng), n(rng));
    Mat4 m = g * g.adjoint();
    m = (1.0 / m.trace().real()) * m;
    const TwoQubitState s{m, Basis::Energy};
    const TwoQubitState t = basis_change(s, Basis::Monopole);
    CHECK(std::abs(negativity(s) - negativity(t)) <= 1e-12);
    const auto a = eig_hermitian_4(s.m), b = eig_hermitian_4(t.m);
    for (int k = 0; k < 4; ++k) CHECK(std::abs(a[k] - b[k]) <= 1e-12);
    const Mat4 pt = partial_transpose_B(m);
    CHECK(pt.trace() == m.trace());
    CHECK(hermiticity_error(pt) == 0.0);
  }
}
