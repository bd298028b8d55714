#include "smear/quadrature.hpp"

#include <algorithm>
#include <cmath>
#include <queue>

namespace smear {

namespace {

constexpr double xgk[8] = {
    0.991455371120812639206854697526329, 0.949107912342758524526189684047851,
    0.864864423359769072789712788640926, 0.741531185599394439863864773280788,
    0.586087235467691130294144845693013, 0.405845151377397166906606412076961,
    0.207784955007898467600689403773245, 0.000000000000000000000000000000000};
constexpr double wgk[8] = {
    0.022935322010529224963732008058970, 0.063092092629978553290700663189204,
    0.104790010322250183839876322541518, 0.140653259715525918745189590510238,
    0.169004726639267902826583426598550, 0.190350578064785409913256402421014,
    0.204432940075298892414161999234649, 0.209482141084727828012999174891714};
// Gauss weights at xgk[1], xgk[3], xgk[5], xgk[7]
constexpr double wg[4] = {
    0.129484966168869693270611432679082, 0.279705391489276667901467771423780,
    0.381830050505118944950369775488975, 0.417959183673469387755102040816327};

constexpr double kEps = 2.220446049250313e-16;

struct Segment {
  double a, b;
  cplx value;
  double err;
  bool rounding_limited;
  bool operator<(const Segment& o) const { return err < o.err; }
};

Segment gk15(const ComplexIntegrand& f, double a, double b) {
  const double c = 0.5 * (a + b);
  const double h = 0.5 * (b - a);
  const cplx fc = f(c);
  cplx k = wgk[7] * fc;
  cplx g = wg[3] * fc;
  double resabs = wgk[7] * std::abs(fc);
  for (int j = 0; j < 7; ++j) {
    const double dx = h * xgk[j];
    const cplx fl = f(c - dx), fu = f(c + dx);
    k += wgk[j] * (fl + fu);
    resabs += wgk[j] * (std::abs(fl) + std::abs(fu));
    if (j % 2 == 1) g += wg[j / 2] * (fl + fu);
  }
  // rounding floor
  const double trunc = std::abs((k - g) * h);
  const double floor = 50.0 * kEps * resabs * std::abs(h);
  return {a, b, k * h, std::max(trunc, floor), trunc <= floor};
}

}  // namespace

QuadratureResult& QuadratureResult::operator+=(const QuadratureResult& o) {
  value += o.value;
  abs_error_estimate += o.abs_error_estimate;
  evaluations += o.evaluations;
  converged = converged && o.converged;
  return *this;
}

QuadratureResult operator+(QuadratureResult a, const QuadratureResult& b) { return a += b; }

QuadratureResult operator-(QuadratureResult a, const QuadratureResult& b) {
  QuadratureResult nb = b;
  nb.value = -b.value;
  return a += nb;
}

QuadratureResult operator*(cplx s, QuadratureResult a) {
  a.value *= s;
  a.abs_error_estimate *= std::abs(s);
  return a;
}

QuadratureResult gauss_kronrod(const ComplexIntegrand& f, double a, double b,
                               const GKOptions& opt) {
  QuadratureResult r;
  if (a == b) return r;
  std::priority_queue<Segment> heap;
  Segment first = gk15(f, a, b);
  r.evaluations = 15;
  cplx total = first.value;
  double err = first.err;
  heap.push(first);
  int intervals = 1;
  while (err > std::max(opt.abs_tol, opt.rel_tol * std::abs(total))) {
    if (intervals >= opt.max_intervals) {
      r.converged = false;
      break;
    }
    const Segment s = heap.top();
    // the worst interval is already at its rounding floor; bisecting cannot help
    if (s.rounding_limited) break;
    heap.pop();
    const double m = 0.5 * (s.a + s.b);
    if (m <= s.a || m >= s.b) {
      // interval can no longer be split in floating point
      heap.push(s);
      r.converged = false;
      break;
    }
    const Segment l = gk15(f, s.a, m);
    const Segment u = gk15(f, m, s.b);
    r.evaluations += 30;
    total += l.value + u.value - s.value;
    err += l.err + u.err - s.err;
    heap.push(l);
    heap.push(u);
    ++intervals;
  }
  // re-add from the segments to limit drift of the running sum
  cplx sum = 0.0;
  double esum = 0.0;
  while (!heap.empty()) {
    sum += heap.top().value;
    esum += heap.top().err;
    heap.pop();
  }
  r.value = sum;
  r.abs_error_estimate = esum;
  return r;
}

QuadratureResult pairwise_sum(const std::vector<QuadratureResult>& parts) {
  if (parts.empty()) return {};
  std::vector<QuadratureResult> level = parts;
  while (level.size() > 1) {
    std::vector<QuadratureResult> next;
    next.reserve((level.size() + 1) / 2);
    for (std::size_t i = 0; i + 1 < level.size(); i += 2) next.push_back(level[i] + level[i + 1]);
    if (level.size() % 2 == 1) next.push_back(level.back());
    level.swap(next);
  }
  return level.front();
}

QuadratureResult gauss_kronrod(const ComplexIntegrand& f, const std::vector<double>& breaks,
                               const GKOptions& opt) {
  if (breaks.size() < 2) return {};
  const std::size_t n = breaks.size() - 1;
  GKOptions local = opt;
  local.abs_tol = opt.abs_tol / static_cast<double>(n);
  std::vector<QuadratureResult> parts;
  parts.reserve(n);
  for (std::size_t i = 0; i < n; ++i) parts.push_back(gauss_kronrod(f, breaks[i], breaks[i + 1], local));
  return pairwise_sum(parts);
}

QuadratureResult romberg(const ComplexIntegrand& f, double a, double b, double rel_tol,
                         double abs_tol, int max_level) {
  QuadratureResult r;
  std::vector<cplx> prev, cur;
  double h = b - a;
  cplx trap = 0.5 * h * (f(a) + f(b));
  r.evaluations = 2;
  prev.push_back(trap);
  for (int level = 1; level <= max_level; ++level) {
    const long n = 1L << (level - 1);
    h *= 0.5;
    cplx mid = 0.0;
    for (long i = 0; i < n; ++i) mid += f(a + (2 * i + 1) * h);
    r.evaluations += n;
    cur.assign(level + 1, 0.0);
    cur[0] = 0.5 * prev[0] + h * mid;
    double pow4 = 1.0;
    for (int j = 1; j <= level; ++j) {
      pow4 *= 4.0;
      cur[j] = cur[j - 1] + (cur[j - 1] - prev[j - 1]) / (pow4 - 1.0);
    }
    const double diff = std::abs(cur[level] - prev[level - 1]);
    if (level >= 4 && diff <= std::max(abs_tol, rel_tol * std::abs(cur[level]))) {
      r.value = cur[level];
      r.abs_error_estimate = diff;
      return r;
    }
    prev.swap(cur);
  }
  r.value = prev.back();
  r.abs_error_estimate = std::abs(prev.back() - prev[prev.size() - 2]);
  r.converged = false;
  return r;
}

}  // namespace smear
