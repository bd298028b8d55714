#pragma once

#include <algorithm>
#include <array>
#include <cmath>
#include <cstddef>
#include <numeric>

#include "smear/model.hpp"
#include "smear/specfun.hpp"

namespace smear {

template <std::size_t N>
struct Matrix {
  std::array<cplx, N * N> a{};

  cplx& operator()(std::size_t i, std::size_t j) { return a[i * N + j]; }
  const cplx& operator()(std::size_t i, std::size_t j) const { return a[i * N + j]; }

  static Matrix identity() {
    Matrix m;
    for (std::size_t i = 0; i < N; ++i) m(i, i) = 1.0;
    return m;
  }

  Matrix adjoint() const {
    Matrix r;
    for (std::size_t i = 0; i < N; ++i)
      for (std::size_t j = 0; j < N; ++j) r(i, j) = std::conj((*this)(j, i));
    return r;
  }

  cplx trace() const {
    cplx t = 0.0;
    for (std::size_t i = 0; i < N; ++i) t += (*this)(i, i);
    return t;
  }

  // Frobenius norm
  double norm() const {
    double s = 0.0;
    for (const cplx& x : a) s += std::norm(x);
    return std::sqrt(s);
  }

  Matrix& operator+=(const Matrix& o) {
    for (std::size_t i = 0; i < N * N; ++i) a[i] += o.a[i];
    return *this;
  }
  Matrix& operator-=(const Matrix& o) {
    for (std::size_t i = 0; i < N * N; ++i) a[i] -= o.a[i];
    return *this;
  }
  Matrix& operator*=(cplx s) {
    for (cplx& x : a) x *= s;
    return *this;
  }
};

template <std::size_t N>
Matrix<N> operator+(Matrix<N> x, const Matrix<N>& y) { return x += y; }
template <std::size_t N>
Matrix<N> operator-(Matrix<N> x, const Matrix<N>& y) { return x -= y; }
template <std::size_t N>
Matrix<N> operator*(cplx s, Matrix<N> x) { return x *= s; }

template <std::size_t N>
Matrix<N> operator*(const Matrix<N>& x, const Matrix<N>& y) {
  Matrix<N> r;
  for (std::size_t i = 0; i < N; ++i)
    for (std::size_t k = 0; k < N; ++k) {
      const cplx xik = x(i, k);
      if (xik == 0.0) continue;
      for (std::size_t j = 0; j < N; ++j) r(i, j) += xik * y(k, j);
    }
  return r;
}

using Mat2 = Matrix<2>;
using Mat4 = Matrix<4>;
using Mat16 = Matrix<16>;

template <std::size_t N>
double hermiticity_error(const Matrix<N>& m) {
  return (m - m.adjoint()).norm();
}

template <std::size_t N, std::size_t M>
Matrix<N * M> kron(const Matrix<N>& x, const Matrix<M>& y) {
  Matrix<N * M> r;
  for (std::size_t i = 0; i < N; ++i)
    for (std::size_t j = 0; j < N; ++j)
      for (std::size_t k = 0; k < M; ++k)
        for (std::size_t l = 0; l < M; ++l) r(i * M + k, j * M + l) = x(i, j) * y(k, l);
  return r;
}

template <std::size_t N>
struct EigenSystem {
  std::array<double, N> values{};  // ascending
  Matrix<N> vectors;               // column j belongs to values[j]
  int sweeps = 0;
};

// Cyclic Jacobi for Hermitian matrices.  Each rotation first removes the
// phase of the pivot, then applies the real symmetric rotation, so exact
// zeros outside the pivot rows stay exact.  Sweeps until every off-diagonal
// entry is below 1e-18 of both its diagonal neighbours (well under the
// 1e-14 off-diagonal target).  Rejects input that is not Hermitian to 1e-10
// relative.
template <std::size_t N>
EigenSystem<N> eigh(const Matrix<N>& m) {
  const double scale = std::max(1.0, m.norm());
  if (hermiticity_error(m) > 1e-10 * scale)
    throw InvalidParameter("eigh: matrix is not Hermitian");
  Matrix<N> A = 0.5 * (m + m.adjoint());
  Matrix<N> V = Matrix<N>::identity();
  EigenSystem<N> out;
  for (int sweep = 0; sweep < 100; ++sweep) {
    out.sweeps = sweep + 1;
    bool rotated = false;
    for (std::size_t p = 0; p + 1 < N; ++p)
      for (std::size_t q = p + 1; q < N; ++q) {
        const double r = std::abs(A(p, q));
        if (r == 0.0) continue;
        const double app = A(p, p).real(), aqq = A(q, q).real();
        // a pivot negligible against both diagonal entries moves neither
        // eigenvalue; dropping it ends the sweeps without losing the
        // relative accuracy of small eigenvalues
        if (r < 1e-300 || (r <= 1e-18 * std::abs(app) && r <= 1e-18 * std::abs(aqq))) {
          A(p, q) = A(q, p) = 0.0;
          continue;
        }
        rotated = true;
        const cplx ph = A(p, q) / r;  // e^{i phi}
        const double zeta = (aqq - app) / (2.0 * r);
        const double t = (zeta >= 0.0 ? 1.0 : -1.0) / (std::abs(zeta) + std::sqrt(1.0 + zeta * zeta));
        const double c = 1.0 / std::sqrt(1.0 + t * t);
        const double s = t * c;
        const cplx phc = std::conj(ph);
        // A <- A U, U = [[c, s], [-s e^{-i phi}, c e^{-i phi}]] on (p, q)
        for (std::size_t k = 0; k < N; ++k) {
          const cplx akp = A(k, p), akq = A(k, q);
          A(k, p) = c * akp - s * phc * akq;
          A(k, q) = s * akp + c * phc * akq;
          const cplx vkp = V(k, p), vkq = V(k, q);
          V(k, p) = c * vkp - s * phc * vkq;
          V(k, q) = s * vkp + c * phc * vkq;
        }
        // A <- U^dagger A
        for (std::size_t k = 0; k < N; ++k) {
          const cplx apk = A(p, k), aqk = A(q, k);
          A(p, k) = c * apk - s * ph * aqk;
          A(q, k) = s * apk + c * ph * aqk;
        }
        A(p, p) = app - t * r;
        A(q, q) = aqq + t * r;
        A(p, q) = A(q, p) = 0.0;
      }
    if (!rotated) break;
  }
  std::array<std::size_t, N> idx;
  std::iota(idx.begin(), idx.end(), 0);
  std::sort(idx.begin(), idx.end(),
            [&A](std::size_t i, std::size_t j) { return A(i, i).real() < A(j, j).real(); });
  for (std::size_t j = 0; j < N; ++j) {
    out.values[j] = A(idx[j], idx[j]).real();
    for (std::size_t k = 0; k < N; ++k) out.vectors(k, j) = V(k, idx[j]);
  }
  return out;
}

std::array<double, 4> eig_hermitian_4(const Mat4& m);

// ||m v - lambda v|| over all eigenpairs, worst case
template <std::size_t N>
double eigen_residual(const Matrix<N>& m, const EigenSystem<N>& es) {
  double worst = 0.0;
  for (std::size_t j = 0; j < N; ++j) {
    double s = 0.0;
    for (std::size_t i = 0; i < N; ++i) {
      cplx mv = 0.0;
      for (std::size_t k = 0; k < N; ++k) mv += m(i, k) * es.vectors(k, j);
      s += std::norm(mv - es.values[j] * es.vectors(i, j));
    }
    worst = std::max(worst, std::sqrt(s));
  }
  return worst;
}

// Single-qubit building blocks, basis order (|g>, |e>).
Mat2 sigma_plus();   // |e><g|
Mat2 sigma_minus();  // |g><e|
Mat2 sigma_x();      // monopole sigma+ + sigma-
Mat2 sigma_z();
Mat2 proj_ground();
Mat2 proj_excited();
// columns |+>, |-> = (|g> +- |e>)/sqrt 2
Mat2 hadamard();

// Two-qubit basis tags.  Energy: |g>,|e> per qubit.  Monopole: |+>,|-> per
// qubit.  Index of |ab> is 2a + b with qubit A first.
enum class Basis { Energy, Monopole };

struct TwoQubitState {
  Mat4 m;
  Basis basis = Basis::Energy;

  // Hermitian and unit trace to 1e-12, eigenvalues >= psd_tol
  void validate(double psd_tol = -1e-10) const;
};

TwoQubitState product_state(const Mat2& a, const Mat2& b, Basis basis = Basis::Energy);

Mat4 partial_transpose_B(const Mat4& m);
TwoQubitState partial_transpose_B(const TwoQubitState& rho);

// Sum of |negative eigenvalues| of the partial transpose.
double negativity(const TwoQubitState& rho);
double negativity(const Mat4& m);

double hs_norm_sq(const TwoQubitState& a, const TwoQubitState& b);

TwoQubitState basis_change(const TwoQubitState& rho, Basis to);

double purity(const Mat2& rho);
double purity(const Mat4& rho);

}  // namespace smear
