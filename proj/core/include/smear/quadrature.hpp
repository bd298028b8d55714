#pragma once

#include <functional>
#include <vector>

#include "smear/specfun.hpp"

namespace smear {

struct QuadratureResult {
  cplx value{};
  double abs_error_estimate = 0.0;
  long evaluations = 0;
  bool converged = true;

  QuadratureResult& operator+=(const QuadratureResult& o);
};

QuadratureResult operator+(QuadratureResult a, const QuadratureResult& b);
QuadratureResult operator-(QuadratureResult a, const QuadratureResult& b);
QuadratureResult operator*(cplx s, QuadratureResult a);

using ComplexIntegrand = std::function<cplx(double)>;

struct GKOptions {
  double abs_tol = 0.0;
  double rel_tol = 1e-12;
  int max_intervals = 2000;
};

// Global adaptive Gauss-Kronrod (7/15) on [a, b].  Bisects the interval with
// the largest |K15 - G7| until the summed estimate meets
// max(abs_tol, rel_tol |I|) or the interval budget runs out.
QuadratureResult gauss_kronrod(const ComplexIntegrand& f, double a, double b,
                               const GKOptions& opt = {});

// Integrates each [breaks[i], breaks[i+1]] adaptively, sharing abs_tol
// uniformly, and adds the pieces by pairwise summation.
QuadratureResult gauss_kronrod(const ComplexIntegrand& f, const std::vector<double>& breaks,
                               const GKOptions& opt = {});

// Composite trapezoid with Richardson extrapolation.
QuadratureResult romberg(const ComplexIntegrand& f, double a, double b, double rel_tol = 1e-12,
                         double abs_tol = 0.0, int max_level = 22);

// Pairwise summation of a list of partial results.
QuadratureResult pairwise_sum(const std::vector<QuadratureResult>& parts);

}  // namespace smear
