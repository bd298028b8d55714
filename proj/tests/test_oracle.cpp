#include <cmath>
#include <random>

#include "doctest.h"
#include "smear/oracle.hpp"
#include "smear/propagators.hpp"

using namespace smear;

namespace {

bool agrees(cplx cf, const QuadratureResult& q, double tol) {
  const double d = std::abs(cf - q.value);
  if (std::abs(cf) < 1e-250 && std::abs(q.value) < 1e-250) return true;
  return d <= std::max(tol * std::abs(q.value), 10.0 * q.abs_error_estimate);
}

}  // namespace

TEST_CASE("oracle reproduces the frozen closed-form point") {
  const auto a = make_smearing(1.0, 1.3, 0.7, 0.5, {0, 0, 0});
  const auto b = make_smearing(2.0, 0.0, -0.4, 0.5, {2, 0, 0});
  for (auto k : {BiDistKind::Wightman, BiDistKind::Hadamard, BiDistKind::Causal,
                 BiDistKind::Retarded, BiDistKind::Advanced, BiDistKind::Symmetric,
                 BiDistKind::Feynman}) {
    const auto q = quad_kind(k, a, b);
    const cplx cf = evaluate(k, a, b).value;
    CHECK_MESSAGE(agrees(cf, q, 1e-8), to_string(k) << " cf=" << cf << " q=" << q.value
                                                   << " err=" << q.abs_error_estimate);
  }
}

TEST_CASE("oracle agreement on a random grid") {
  std::mt19937_64 rng(7);
  std::uniform_real_distribution<double> u(0, 1);
  double worst = 0;
  for (int i = 0; i < 60; ++i) {
    const double T1 = std::exp(std::log(0.1) + u(rng) * std::log(100.0));
    const double T2 = std::exp(std::log(0.1) + u(rng) * std::log(100.0));
    const double sg = 0.01 + 2 * u(rng);
    const double t0 = -10 + 20 * u(rng);
    const double sep = std::exp(std::log(0.1) + u(rng) * std::log(300.0));
    const double O1 = -3 + 6 * u(rng), O2 = -3 + 6 * u(rng);
    const auto a = make_smearing(T1, t0, O1, sg, {sep, 0, 0});
    const auto b = make_smearing(T2, 0.0, O2, sg, {0, 0, 0});
    for (auto k : {BiDistKind::Wightman, BiDistKind::Hadamard, BiDistKind::Causal,
                   BiDistKind::Retarded, BiDistKind::Advanced, BiDistKind::Feynman}) {
      const auto q = quad_kind(k, a, b);
      const cplx cf = evaluate(k, a, b).value;
      const double rel = std::abs(cf - q.value) / std::abs(q.value);
      worst = std::max(worst, std::isfinite(rel) ? rel : 1.0);
      CHECK_MESSAGE(agrees(cf, q, 1e-8), to_string(k) << " i=" << i << " T=" << T1 << "," << T2
                                                     << " s=" << sg << " t0=" << t0 << " L=" << sep
                                                     << " O=" << O1 << "," << O2 << " cf=" << cf
                                                     << " q=" << q.value << " err=" << q.abs_error_estimate);
    }
  }
  MESSAGE("worst relative error " << worst);
}

TEST_CASE("oracle agreement with point-like and coincident detectors") {
  std::mt19937_64 rng(11);
  std::uniform_real_distribution<double> u(0, 1);
  double worst = 0;
  int fails = 0;
  for (int i = 0; i < 400; ++i) {
    const double T1 = std::exp(std::log(0.1) + u(rng) * std::log(100.0));
    const double T2 = std::exp(std::log(0.1) + u(rng) * std::log(100.0));
    const bool zero_sigma = i % 3 == 0;
    const double sg = zero_sigma ? 0.0 : 2 * u(rng);
    const double t0 = -10 + 20 * u(rng);
    const double sep = i % 5 == 1 ? 0.0 : std::exp(std::log(0.1) + u(rng) * std::log(300.0));
    const double O1 = -3 + 6 * u(rng), O2 = -3 + 6 * u(rng);
    const auto a = make_smearing(T1, t0, O1, sg, {sep, 0, 0});
    const auto b = make_smearing(T2, 0.0, O2, sg, {0, 0, 0});
    std::vector<BiDistKind> kinds{BiDistKind::Wightman, BiDistKind::Hadamard, BiDistKind::Causal};
    if (!zero_sigma) {
      kinds.push_back(BiDistKind::Retarded);
      kinds.push_back(BiDistKind::Advanced);
      kinds.push_back(BiDistKind::Feynman);
    }
    for (auto k : kinds) {
      if (sep == 0 && zero_sigma && k == BiDistKind::Causal) continue;
      const auto q = quad_kind(k, a, b);
      const cplx cf = evaluate(k, a, b).value;
      const double rel = std::abs(cf - q.value) / std::abs(q.value);
      if (std::abs(q.value) > 1e-250) worst = std::max(worst, std::isfinite(rel) ? rel : 1.0);
      if (!agrees(cf, q, 1e-8)) {
        ++fails;
        MESSAGE(to_string(k) << " i=" << i << " T=" << T1 << "," << T2 << " s=" << sg << " t0=" << t0
                             << " L=" << sep << " O=" << O1 << "," << O2 << " cf=" << cf
                             << " q=" << q.value << " err=" << q.abs_error_estimate);
      }
    }
  }
  MESSAGE("worst relative error " << worst);
  CHECK(fails == 0);
}
