#pragma once

#include <complex>
#include <vector>

namespace smear {

using cplx = std::complex<double>;

// A value represented as sum_i coef_i * exp(expo_i). The closed forms pair
// growing error functions with decaying Gaussians; keeping the exponents
// apart until the very end lets the caller fold in its own prefactor without
// ever forming an intermediate that overflows.
struct ExpTerm {
  cplx coef;
  cplx expo;
};

class ExpSum {
 public:
  ExpSum() = default;
  ExpSum(cplx coef, cplx expo = 0.0) { add(coef, expo); }

  void add(cplx coef, cplx expo = 0.0);
  void add(const ExpSum& other, cplx factor = 1.0, cplx shift = 0.0);

  ExpSum& operator*=(cplx factor);
  ExpSum& operator+=(const ExpSum& other);
  ExpSum& shift(cplx expo);

  // sum_i coef_i * exp(expo_i + extra)
  cplx eval(cplx extra = 0.0) const;
  // largest real part among the exponents, -inf when empty
  double max_real_expo() const;

  const std::vector<ExpTerm>& terms() const { return terms_; }

 private:
  std::vector<ExpTerm> terms_;
};

ExpSum operator*(ExpSum s, cplx factor);
ExpSum operator*(cplx factor, ExpSum s);
ExpSum operator+(ExpSum a, const ExpSum& b);
ExpSum operator-(ExpSum a, const ExpSum& b);

// Faddeeva function w(z) = exp(-z^2) erfc(-iz).
// Poppe & Wijers, ACM TOMS 680.  Returns an infinite value when the lower
// half-plane reflection term overflows; `overflow` is set in that case.
cplx faddeeva_w(cplx z);
cplx faddeeva_w(cplx z, bool& overflow);

// w(z) in scaled form: a single bounded term in the closed upper half-plane,
// and 2 exp(-z^2) - w(-z) below it.
ExpSum faddeeva_w_scaled(cplx z);

cplx erf_c(cplx z);
// `flag` is set when |z| > 30 and the value was saturated or overflowed.
cplx erf_c(cplx z, bool& flag);
cplx erfc_c(cplx z);
cplx erfi_c(cplx z);
cplx erfi_c(cplx z, bool& flag);

// erfc(z) = exp(-z^2) w(iz), scaled.
ExpSum erfc_scaled(cplx z);

// exp(-b) erfi(a) without forming exp(a^2).
cplx scaled_erfi(cplx a, cplx b);
cplx scaled_erfi(cplx a, cplx b, bool& overflow);
ExpSum erfi_scaled(cplx a);

double dawson(double x);
double erfcx(double x);
// exp(-y2) erfc(x) for real arguments, safe for large |x| and y2.
double gauss_erfc(double y2, double x);

// m(z) = 1 - sqrt(pi) z w(iz), the normalised first moment of the half-line
// Gaussian.  For large |z| the leading terms cancel and an asymptotic series
// is used; for Re z < 0 the reflection contributes exp(z^2).
ExpSum first_moment_scaled(cplx z);

// exp(z) - 1 accurate for small |z|
cplx expm1_c(cplx z);

// exp(x) - exp(y) without cancellation for x close to y
cplx exp_diff(cplx x, cplx y);

}  // namespace smear
