#include "smear/qmat.hpp"

namespace smear {

std::array<double, 4> eig_hermitian_4(const Mat4& m) { return eigh(m).values; }

Mat2 sigma_plus() {
  Mat2 m;
  m(1, 0) = 1.0;
  return m;
}

Mat2 sigma_minus() {
  Mat2 m;
  m(0, 1) = 1.0;
  return m;
}

Mat2 sigma_x() { return sigma_plus() + sigma_minus(); }

Mat2 sigma_z() {
  Mat2 m;
  m(0, 0) = -1.0;
  m(1, 1) = 1.0;
  return m;
}

Mat2 proj_ground() {
  Mat2 m;
  m(0, 0) = 1.0;
  return m;
}

Mat2 proj_excited() {
  Mat2 m;
  m(1, 1) = 1.0;
  return m;
}

Mat2 hadamard() {
  const double r = 1.0 / std::sqrt(2.0);
  Mat2 m;
  m(0, 0) = r;
  m(0, 1) = r;
  m(1, 0) = r;
  m(1, 1) = -r;
  return m;
}

void TwoQubitState::validate(double psd_tol) const {
  for (const cplx& x : m.a)
    if (!std::isfinite(x.real()) || !std::isfinite(x.imag()))
      throw InvalidParameter("state has non-finite entries");
  if (hermiticity_error(m) > 1e-12) throw InvalidParameter("state is not Hermitian");
  if (std::abs(m.trace() - 1.0) > 1e-12) throw InvalidParameter("state trace differs from 1");
  if (eigh(m).values[0] < psd_tol) throw InvalidParameter("state is not positive semidefinite");
}

TwoQubitState product_state(const Mat2& a, const Mat2& b, Basis basis) {
  return {kron(a, b), basis};
}

Mat4 partial_transpose_B(const Mat4& m) {
  Mat4 r;
  for (std::size_t a = 0; a < 2; ++a)
    for (std::size_t b = 0; b < 2; ++b)
      for (std::size_t c = 0; c < 2; ++c)
        for (std::size_t d = 0; d < 2; ++d) r(2 * a + b, 2 * c + d) = m(2 * a + d, 2 * c + b);
  return r;
}

TwoQubitState partial_transpose_B(const TwoQubitState& rho) {
  return {partial_transpose_B(rho.m), rho.basis};
}

double negativity(const Mat4& m) {
  double n = 0.0;
  for (double v : eigh(partial_transpose_B(m)).values)
    if (v < 0.0) n -= v;
  return n;
}

double negativity(const TwoQubitState& rho) { return negativity(rho.m); }

double hs_norm_sq(const TwoQubitState& a, const TwoQubitState& b) {
  if (a.basis != b.basis) throw InvalidParameter("hs_norm_sq: basis tags differ");
  const Mat4 d = a.m - b.m;
  double s = 0.0;
  for (const cplx& x : d.a) s += std::norm(x);
  return s;
}

TwoQubitState basis_change(const TwoQubitState& rho, Basis to) {
  if (rho.basis == to) return rho;
  // H is a real symmetric involution, so the same conjugation maps both ways
  const Mat4 h = kron(hadamard(), hadamard());
  return {h * rho.m * h, to};
}

double purity(const Mat2& rho) { return (rho * rho).trace().real(); }
double purity(const Mat4& rho) { return (rho * rho).trace().real(); }

}  // namespace smear
