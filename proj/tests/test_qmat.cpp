#include <random>

#include "doctest.h"
#include "smear/qmat.hpp"

using namespace smear;

namespace {

Mat4 random_state(std::mt19937_64& rng) {
  std::normal_distribution<double> n(0, 1);
  Mat4 g;
  for (auto& x : g.a) x = cplx(n(rng), n(rng));
  Mat4 r = g * g.adjoint();
  return (1.0 / r.trace().real()) * r;
}

Mat4 bell() {
  Mat4 m;
  m(0, 0) = m(0, 3) = m(3, 0) = m(3, 3) = 0.5;
  return m;
}

}  // namespace

TEST_CASE("eigh on diagonal and structured input") {
  Mat4 d;
  d(0, 0) = 3;
  d(1, 1) = -1;
  d(2, 2) = 2;
  d(3, 3) = 0.5;
  const auto v = eig_hermitian_4(d);
  CHECK(v[0] == -1);
  CHECK(v[1] == 0.5);
  CHECK(v[2] == 2);
  CHECK(v[3] == 3);

  // X-shaped matrix: blocks {0,3} and {1,2}
  Mat4 x;
  x(0, 0) = 0.9;
  x(3, 3) = 0.02;
  x(0, 3) = cplx(0.03, -0.01);
  x(3, 0) = std::conj(x(0, 3));
  x(1, 1) = 0.05;
  x(2, 2) = 0.03;
  x(1, 2) = cplx(0.01, 0.02);
  x(2, 1) = std::conj(x(1, 2));
  auto block = [](double a, double b, cplx c) {
    const double m = 0.5 * (a + b), r = std::sqrt(0.25 * (a - b) * (a - b) + std::norm(c));
    return std::array<double, 2>{m - r, m + r};
  };
  std::array<double, 4> want;
  const auto b1 = block(0.9, 0.02, x(0, 3));
  const auto b2 = block(0.05, 0.03, x(1, 2));
  want = {b1[0], b1[1], b2[0], b2[1]};
  std::sort(want.begin(), want.end());
  const auto got = eig_hermitian_4(x);
  for (int i = 0; i < 4; ++i) CHECK(got[i] == doctest::Approx(want[i]).epsilon(1e-12));
}

TEST_CASE("eigh residuals and trace on random Hermitian input") {
  std::mt19937_64 rng(3);
  for (int i = 0; i < 50; ++i) {
    const Mat4 m = random_state(rng);
    const auto es = eigh(m);
    CHECK(eigen_residual(m, es) <= 1e-12 * m.norm());
    double sum = 0;
    for (double v : es.values) sum += v;
    CHECK(std::abs(sum - m.trace().real()) < 1e-13);
  }
  Mat16 big;
  std::normal_distribution<double> n(0, 1);
  for (std::size_t i = 0; i < 16; ++i)
    for (std::size_t j = i; j < 16; ++j) {
      big(i, j) = i == j ? cplx(n(rng), 0) : cplx(n(rng), n(rng));
      big(j, i) = std::conj(big(i, j));
    }
  CHECK(eigen_residual(big, eigh(big)) <= 1e-12 * big.norm());
}

TEST_CASE("eigh rejects non-Hermitian input") {
  Mat4 m;
  m(0, 1) = 1.0;
  CHECK_THROWS_AS(eigh(m), InvalidParameter);
}

TEST_CASE("partial transpose and negativity") {
  const TwoQubitState b{bell(), Basis::Energy};
  CHECK(eig_hermitian_4(partial_transpose_B(b.m))[0] == doctest::Approx(-0.5).epsilon(1e-14));
  CHECK(negativity(b) == doctest::Approx(0.5).epsilon(1e-14));
  std::mt19937_64 rng(5);
  for (int i = 0; i < 20; ++i) {
    const Mat4 m = random_state(rng);
    const Mat4 pt = partial_transpose_B(m);
    CHECK((partial_transpose_B(pt) - m).norm() == 0.0);
    CHECK(std::abs(pt.trace() - m.trace()) == 0.0);
    CHECK(hermiticity_error(pt) <= hermiticity_error(m));
    const TwoQubitState s{m, Basis::Energy};
    CHECK(std::abs(negativity(s) - negativity(basis_change(s, Basis::Monopole))) < 1e-12);
    const auto e1 = eig_hermitian_4(m);
    const auto e2 = eig_hermitian_4(basis_change(s, Basis::Monopole).m);
    for (int k = 0; k < 4; ++k) CHECK(std::abs(e1[k] - e2[k]) < 1e-12);
  }
  Mat2 ra;
  ra(0, 0) = 0.7;
  ra(1, 1) = 0.3;
  ra(0, 1) = cplx(0.1, 0.2);
  ra(1, 0) = std::conj(ra(0, 1));
  const auto prod = product_state(ra, proj_ground());
  CHECK(negativity(prod) == 0.0);
}

TEST_CASE("basis change") {
  const auto gg = product_state(proj_ground(), proj_ground());
  const auto mono = basis_change(gg, Basis::Monopole);
  CHECK(mono.basis == Basis::Monopole);
  for (const auto& x : mono.m.a) CHECK(std::abs(x - 0.25) < 1e-15);
  const auto back = basis_change(mono, Basis::Energy);
  CHECK((back.m - gg.m).norm() < 1e-15);
  const TwoQubitState mixed{0.25 * Mat4::identity(), Basis::Energy};
  CHECK((basis_change(mixed, Basis::Monopole).m - mixed.m).norm() < 1e-15);
}

TEST_CASE("Hilbert-Schmidt norm") {
  const auto gg = product_state(proj_ground(), proj_ground());
  const auto ee = product_state(proj_excited(), proj_excited());
  CHECK(hs_norm_sq(gg, gg) == 0.0);
  CHECK(hs_norm_sq(gg, ee) == doctest::Approx(2.0));
  CHECK_THROWS_AS(hs_norm_sq(gg, basis_change(gg, Basis::Monopole)), InvalidParameter);
}

TEST_CASE("state validation") {
  TwoQubitState s{bell(), Basis::Energy};
  CHECK_NOTHROW(s.validate());
  s.m(0, 0) = 0.6;
  CHECK_THROWS_AS(s.validate(), InvalidParameter);
  TwoQubitState neg{partial_transpose_B(bell()), Basis::Energy};
  CHECK_THROWS_AS(neg.validate(), InvalidParameter);
}
