#pragma once

#include <stdexcept>

#include "smear/model.hpp"
#include "smear/quadrature.hpp"

namespace smear {

struct QuadOptions {
  // integration range ends where the Gaussian envelope drops below this
  // fraction of its peak
  double envelope_cut = 1e-18;
  double rel_tol = 1e-12;
  // absolute target = abs_scale * (integrand peak) * (interval length)
  double abs_scale = 1e-14;
  int max_intervals = 4000;
};

class NonConvergence : public std::runtime_error {
 public:
  NonConvergence(const std::string& what, QuadratureResult partial)
      : std::runtime_error(what), partial_(partial) {}
  const QuadratureResult& partial() const { return partial_; }

 private:
  QuadratureResult partial_;
};

// Radial momentum integral of the Wightman function.  Any sigma1, sigma2 and
// sep >= 0.  When the linear damping is negative the integrand peaks inside
// the range; the full-line Gaussian integral is then taken analytically and
// the k < 0 remainder subtracted, which avoids catastrophic cancellation.
QuadratureResult quad_W_momentum(const GaussianSmearing& f1, const GaussianSmearing& f2,
                                 const QuadOptions& opt = {});
// Same integrand, Romberg on every segment.  Second scheme for spot checks.
QuadratureResult quad_W_romberg(const GaussianSmearing& f1, const GaussianSmearing& f2,
                                const QuadOptions& opt = {});

QuadratureResult quad_H(const GaussianSmearing& f1, const GaussianSmearing& f2,
                        const QuadOptions& opt = {});

// Retarded/advanced via the analytic time integral followed by a radial
// quadrature over |v|.  sigma1 and sigma2 may differ (the spatial overlap
// width is sqrt(sigma1^2 + sigma2^2)); both zero collapses the radial
// integral onto the light cone.
QuadratureResult quad_GR_spacetime(const GaussianSmearing& f1, const GaussianSmearing& f2,
                                   const QuadOptions& opt = {});
QuadratureResult quad_GA_spacetime(const GaussianSmearing& f1, const GaussianSmearing& f2,
                                   const QuadOptions& opt = {});
QuadratureResult quad_E(const GaussianSmearing& f1, const GaussianSmearing& f2,
                        const QuadOptions& opt = {});
QuadratureResult quad_Delta(const GaussianSmearing& f1, const GaussianSmearing& f2,
                            const QuadOptions& opt = {});
QuadratureResult quad_GF(const GaussianSmearing& f1, const GaussianSmearing& f2,
                         const QuadOptions& opt = {});

QuadratureResult quad_kind(BiDistKind kind, const GaussianSmearing& f1, const GaussianSmearing& f2,
                           const QuadOptions& opt = {});

// lambda_a lambda_b G_F(f_a, f_b) from the erfc-weighted momentum integral.
// Requires equal T, sigma > 0 and equal Omega.
QuadratureResult quad_GF_momentum(const DetectorParams& a, const DetectorParams& b,
                                  const QuadOptions& opt = {});

struct IntegralIdentity {
  QuadratureResult lhs;
  cplx rhs;
};

// int_0^inf exp(-(g^2+s^2) r^2) sin(r l) erfi(g r) dr against its closed form.
// Requires |gamma| < |sigma|.
IntegralIdentity check_integral_identity(double gamma, double sigma, double ell,
                                         const QuadOptions& opt = {});
// Complex gamma and ell; exploratory, no convergence guarantee.
IntegralIdentity check_integral_identity_complex(cplx gamma, double sigma, cplx ell,
                                                 const QuadOptions& opt = {});

}  // namespace smear
