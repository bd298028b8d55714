#include <cmath>

#include "doctest.h"
#include "smear/propagators.hpp"

using namespace smear;

namespace {

double rel_err(cplx got, cplx want) { return std::abs(got - want) / std::abs(want); }

GaussianSmearing s1() { return make_smearing(1.0, 1.3, 0.7, 0.5, {0, 0, 0}); }
GaussianSmearing s2() { return make_smearing(2.0, 0.0, -0.4, 0.5, {2, 0, 0}); }

}  // namespace

TEST_CASE("frozen reference values") {
  const auto a = s1();
  const auto b = s2();
  CHECK(rel_err(general_W(a, b).value, {0.08488045986525026, 0.008563617543610377}) < 1e-12);
  CHECK(rel_err(general_H(a, b).value, {0.0868230158037405, 0.01813220694269183}) < 1e-12);
  CHECK(rel_err(general_E(a, b).value, {-0.001004971855471072, -0.08293790392676002}) < 1e-12);
  CHECK(rel_err(general_GR(a, b).value, {-0.02659174571885873, -0.06967317361103163}) < 1e-12);
  CHECK(rel_err(general_GA(a, b).value, {-0.02558677386338766, 0.01326473031572841}) < 1e-12);
}

TEST_CASE("limits approach the coincident-centre forms") {
  auto a = s1();
  auto b = s2();
  b.L = {1e-4, 0, 0};
  auto a0 = a;
  auto b0 = b;
  b0.L = {0, 0, 0};
  CHECK(rel_err(general_W(a, b).value, limit_L0_W(a0, b0).value) < 1e-6);
  CHECK(rel_err(general_E(a, b).value, limit_L0_E(a0, b0).value) < 1e-6);
  CHECK(rel_err(general_GR(a, b).value, limit_L0_GR(a0, b0).value) < 1e-6);
  CHECK(rel_err(general_GA(a, b).value, limit_L0_GA(a0, b0).value) < 1e-6);
}

TEST_CASE("special forms agree with the general forms") {
  const SpecialPair p{1.3, 0.8, 0.4, 0.7, 1.9};
  const auto f1 = make_smearing(p.T, p.t0, p.Omega, p.sigma, {p.sep, 0, 0});
  const auto f2 = make_smearing(p.T, 0.0, p.Omega, p.sigma, {0, 0, 0});
  CHECK(rel_err(special_H(p), general_H(f1, f2).value) < 1e-12);
  CHECK(rel_err(special_E(p), general_E(f1, f2).value) < 1e-12);
  CHECK(rel_err(special_GR(p), general_GR(f1, f2).value) < 1e-12);
  CHECK(rel_err(special_GA(p), general_GA(f1, f2).value) < 1e-12);
  CHECK(rel_err(special_Delta(p), general_Delta(f1, f2).value) < 1e-12);
  CHECK(rel_err(special_GF(p), general_GF(f1, f2).value) < 1e-12);
}

TEST_CASE("structural identities") {
  const auto a = s1();
  const auto b = s2();
  const cplx W12 = general_W(a, b).value;
  const cplx W21 = general_W(b, a).value;
  CHECK(rel_err(general_E(a, b).value, cplx(0, -1) * (W12 - W21)) < 1e-12);
  CHECK(rel_err(general_E(a, b).value, general_GR(a, b).value - general_GA(a, b).value) < 1e-12);
  CHECK(rel_err(general_GF(a, b).value,
                0.5 * general_H(a, b).value + cplx(0, 0.5) * general_Delta(a, b).value) < 1e-12);
}

TEST_CASE("rejections") {
  auto a = s1();
  auto b = s2();
  b.sigma = 0.2;
  CHECK_THROWS_AS(general_GR(a, b), InvalidParameter);
  b.L = a.L;
  CHECK_THROWS_AS(general_W(a, b), InvalidParameter);
  CHECK_THROWS_AS(make_smearing(0.0, 0, 0, 0, {}), InvalidParameter);
  CHECK_THROWS_AS(make_smearing(1.0, 0, 0, -1.0, {}), InvalidParameter);
}
