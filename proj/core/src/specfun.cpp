#include "smear/specfun.hpp"

#include <cmath>
#include <limits>

namespace smear {

namespace {

constexpr double kSqrtPi = 1.77245385090551602729816748334;
constexpr double kTwoOverSqrtPi = 1.12837916709551257389615890312;
const cplx kI{0.0, 1.0};

// Upper-half-plane core of TOMS 680.  Arguments are |x|, |y|; the caller
// applies the symmetries.  Also reports whether the power-series branch was
// used, together with exp(-(x+iy)^2) for the reflection.
struct WCore {
  double u, v;
  bool taylor;
  double u2, v2;
};

WCore w_core(double xabs, double yabs) {
  WCore out{};
  const double x = xabs / 6.3;
  const double y = yabs / 4.4;
  double qrho = x * x + y * y;
  const double xabsq = xabs * xabs;
  const double xquad = xabsq - yabs * yabs;
  const double yquad = 2.0 * xabs * yabs;

  out.taylor = qrho < 0.085264;
  if (out.taylor) {
    // power series
    qrho = (1.0 - 0.85 * y) * std::sqrt(qrho);
    const int n = static_cast<int>(std::lround(6.0 + 72.0 * qrho));
    int j = 2 * n + 1;
    double xsum = 1.0 / j;
    double ysum = 0.0;
    for (int i = n; i >= 1; --i) {
      j -= 2;
      const double xaux = (xsum * xquad - ysum * yquad) / i;
      ysum = (xsum * yquad + ysum * xquad) / i;
      xsum = xaux + 1.0 / j;
    }
    const double u1 = -kTwoOverSqrtPi * (xsum * yabs + ysum * xabs) + 1.0;
    const double v1 = kTwoOverSqrtPi * (xsum * xabs - ysum * yabs);
    const double daux = std::exp(-xquad);
    out.u2 = daux * std::cos(yquad);
    out.v2 = -daux * std::sin(yquad);
    out.u = u1 * out.u2 - v1 * out.v2;
    out.v = u1 * out.v2 + v1 * out.u2;
    return out;
  }

  double h = 0.0;
  double h2 = 0.0;
  int kapn = 0;
  int nu = 0;
  if (qrho > 1.0) {
    // continued fraction only
    qrho = std::sqrt(qrho);
    nu = static_cast<int>(3.0 + 1442.0 / (26.0 * qrho + 77.0));
  } else {
    qrho = (1.0 - y) * std::sqrt(1.0 - qrho);
    h = 1.88 * qrho;
    h2 = 2.0 * h;
    kapn = static_cast<int>(std::lround(7.0 + 34.0 * qrho));
    nu = static_cast<int>(std::lround(16.0 + 26.0 * qrho));
  }
  const bool b = h > 0.0;
  double qlambda = b ? std::pow(h2, kapn) : 0.0;

  double rx = 0.0, ry = 0.0, sx = 0.0, sy = 0.0;
  for (int n = nu; n >= 0; --n) {
    const double np1 = n + 1.0;
    double tx = yabs + h + np1 * rx;
    double ty = xabs - np1 * ry;
    const double c = 0.5 / (tx * tx + ty * ty);
    rx = c * tx;
    ry = c * ty;
    if (b && n <= kapn) {
      tx = qlambda + sx;
      sx = rx * tx - ry * sy;
      sy = ry * tx + rx * sy;
      qlambda /= h2;
    }
  }
  if (h == 0.0) {
    out.u = kTwoOverSqrtPi * rx;
    out.v = kTwoOverSqrtPi * ry;
  } else {
    out.u = kTwoOverSqrtPi * sx;
    out.v = kTwoOverSqrtPi * sy;
  }
  if (yabs == 0.0) out.u = std::exp(-xabs * xabs);
  return out;
}

// w(z) for Im z >= 0
cplx w_upper(cplx z) {
  const WCore c = w_core(std::abs(z.real()), z.imag());
  return {c.u, z.real() < 0.0 ? -c.v : c.v};
}

cplx erf_series(cplx z) {
  const cplx z2 = z * z;
  cplx term = z;
  cplx sum = z;
  for (int n = 1; n < 60; ++n) {
    term *= -z2 / static_cast<double>(n);
    const cplx add = term / static_cast<double>(2 * n + 1);
    sum += add;
    if (std::abs(add) < 1e-18 * std::abs(sum)) break;
  }
  return kTwoOverSqrtPi * sum;
}

bool finite(cplx z) { return std::isfinite(z.real()) && std::isfinite(z.imag()); }

}  // namespace

void ExpSum::add(cplx coef, cplx expo) {
  if (coef == 0.0) return;
  terms_.push_back({coef, expo});
}

void ExpSum::add(const ExpSum& other, cplx factor, cplx shift) {
  for (const auto& t : other.terms_) add(t.coef * factor, t.expo + shift);
}

ExpSum& ExpSum::operator*=(cplx factor) {
  for (auto& t : terms_) t.coef *= factor;
  return *this;
}

ExpSum& ExpSum::operator+=(const ExpSum& other) {
  add(other);
  return *this;
}

ExpSum& ExpSum::shift(cplx expo) {
  for (auto& t : terms_) t.expo += expo;
  return *this;
}

cplx ExpSum::eval(cplx extra) const {
  cplx sum = 0.0;
  for (const auto& t : terms_) sum += t.coef * std::exp(t.expo + extra);
  return sum;
}

double ExpSum::max_real_expo() const {
  double m = -std::numeric_limits<double>::infinity();
  for (const auto& t : terms_) m = std::max(m, t.expo.real());
  return m;
}

ExpSum operator*(ExpSum s, cplx factor) { return s *= factor; }
ExpSum operator*(cplx factor, ExpSum s) { return s *= factor; }
ExpSum operator+(ExpSum a, const ExpSum& b) { return a += b; }
ExpSum operator-(ExpSum a, const ExpSum& b) {
  a.add(b, -1.0);
  return a;
}

cplx faddeeva_w(cplx z, bool& overflow) {
  overflow = false;
  if (z.imag() >= 0.0) return w_upper(z);
  // lower half-plane: w(z) = 2 exp(-z^2) - w(-z)
  const double xabs = std::abs(z.real());
  const double yabs = -z.imag();
  const WCore c = w_core(xabs, yabs);
  double u2, v2;
  if (c.taylor) {
    u2 = 2.0 * c.u2;
    v2 = 2.0 * c.v2;
  } else {
    const double xquad = -(xabs * xabs - yabs * yabs);
    const double yquad = 2.0 * xabs * yabs;
    if (xquad > 709.0) {
      overflow = true;
      const double inf = std::numeric_limits<double>::infinity();
      return {inf, inf};
    }
    const double w1 = 2.0 * std::exp(xquad);
    u2 = w1 * std::cos(yquad);
    v2 = -w1 * std::sin(yquad);
  }
  double u = u2 - c.u;
  double v = v2 - c.v;
  if (z.real() > 0.0) v = -v;
  const cplx out{u, v};
  if (!finite(out)) overflow = true;
  return out;
}

cplx faddeeva_w(cplx z) {
  bool of = false;
  return faddeeva_w(z, of);
}

ExpSum faddeeva_w_scaled(cplx z) {
  if (z.imag() >= 0.0) return ExpSum(w_upper(z));
  ExpSum s(2.0, -z * z);
  s.add(-w_upper(-z));
  return s;
}

ExpSum erfc_scaled(cplx z) {
  if (z.real() >= 0.0) return ExpSum(w_upper(kI * z), -z * z);
  ExpSum s(2.0);
  s.add(-w_upper(-kI * z), -z * z);
  return s;
}

cplx erf_c(cplx z, bool& flag) {
  flag = std::abs(z) > 30.0;
  cplx out;
  if (std::abs(z) <= 1.0) {
    out = erf_series(z);
  } else if (z.real() >= 0.0) {
    out = 1.0 - w_upper(kI * z) * std::exp(-z * z);
  } else {
    out = w_upper(-kI * z) * std::exp(-z * z) - 1.0;
  }
  if (!finite(out)) flag = true;
  return out;
}

cplx erf_c(cplx z) {
  bool f = false;
  return erf_c(z, f);
}

cplx erfc_c(cplx z) {
  if (std::abs(z) <= 0.5) return 1.0 - erf_series(z);
  return erfc_scaled(z).eval();
}

cplx erfi_c(cplx z, bool& flag) {
  const cplx e = erf_c(kI * z, flag);
  return -kI * e;
}

cplx erfi_c(cplx z) {
  bool f = false;
  return erfi_c(z, f);
}

ExpSum erfi_scaled(cplx a) {
  if (a.imag() <= 0.0) {
    ExpSum s(kI * w_upper(-a), a * a);
    s.add(-kI);
    return s;
  }
  ExpSum s(-kI * w_upper(a), a * a);
  s.add(kI);
  return s;
}

cplx scaled_erfi(cplx a, cplx b, bool& overflow) {
  cplx out;
  if (std::abs(a) <= 1.0) {
    out = erf_series(kI * a) * (-kI) * std::exp(-b);
  } else if (a.imag() == 0.0) {
    const double x = a.real();
    out = kTwoOverSqrtPi * dawson(x) * std::exp(cplx(x * x) - b);
  } else {
    out = erfi_scaled(a).eval(-b);
  }
  overflow = !finite(out);
  return out;
}

cplx scaled_erfi(cplx a, cplx b) {
  bool of = false;
  return scaled_erfi(a, b, of);
}

double dawson(double x) {
  const cplx w = w_upper(cplx(x, 0.0));
  return 0.5 * kSqrtPi * w.imag();
}

double erfcx(double x) {
  if (x >= 0.0) return w_upper(cplx(0.0, x)).real();
  return 2.0 * std::exp(x * x) - w_upper(cplx(0.0, -x)).real();
}

double gauss_erfc(double y2, double x) {
  if (x >= 0.0) return erfcx(x) * std::exp(-y2 - x * x);
  return 2.0 * std::exp(-y2) - erfcx(-x) * std::exp(-y2 - x * x);
}

ExpSum first_moment_scaled(cplx z) {
  if (z.real() < 0.0) {
    ExpSum s = first_moment_scaled(-z);
    s.add(-2.0 * kSqrtPi * z, z * z);
    return s;
  }
  if (std::abs(z) < 8.0) return ExpSum(1.0 - kSqrtPi * z * w_upper(kI * z));
  // 1 - sqrt(pi) z erfcx(z) ~ sum_{n>=1} (-1)^{n+1} (2n-1)!! / (2 z^2)^n
  const cplx inv = 1.0 / (2.0 * z * z);
  cplx term = inv;
  cplx sum = term;
  const int nmax = static_cast<int>(std::norm(z));
  for (int n = 2; n < nmax; ++n) {
    const cplx next = -term * static_cast<double>(2 * n - 1) * inv;
    if (std::abs(next) >= std::abs(term)) break;
    term = next;
    sum += term;
    if (std::abs(term) < 1e-18 * std::abs(sum)) break;
  }
  return ExpSum(sum);
}

cplx expm1_c(cplx z) {
  const double x = z.real();
  const double y = z.imag();
  const double s = std::sin(0.5 * y);
  return {std::expm1(x) * std::cos(y) - 2.0 * s * s, std::exp(x) * std::sin(y)};
}

cplx exp_diff(cplx x, cplx y) {
  if (x.real() >= y.real()) return -std::exp(x) * expm1_c(y - x);
  return std::exp(y) * expm1_c(x - y);
}

}  // namespace smear
