#include "smear/model.hpp"

#include <cmath>
#include <initializer_list>

namespace smear {

namespace {

bool all_finite(std::initializer_list<double> xs) {
  for (double x : xs)
    if (!std::isfinite(x)) return false;
  return true;
}

}  // namespace

double distance(const Vec3& a, const Vec3& b) {
  return std::hypot(a.x - b.x, a.y - b.y, a.z - b.z);
}

void GaussianSmearing::validate() const {
  if (!all_finite({T, t0, Omega, sigma, L.x, L.y, L.z}))
    throw InvalidParameter("smearing parameters must be finite");
  if (!(T > 0.0)) throw InvalidParameter("smearing width T must be positive");
  if (sigma < 0.0) throw InvalidParameter("spatial width sigma must be non-negative");
}

GaussianSmearing make_smearing(double T, double t0, double Omega, double sigma, Vec3 L) {
  GaussianSmearing g{T, t0, Omega, sigma, L};
  g.validate();
  return g;
}

PairGeometry geometry(const GaussianSmearing& a, const GaussianSmearing& b) {
  return {distance(a.L, b.L), a.t0 - b.t0};
}

std::string_view to_string(BiDistKind k) {
  switch (k) {
    case BiDistKind::Wightman: return "wightman";
    case BiDistKind::Hadamard: return "hadamard";
    case BiDistKind::Causal: return "causal";
    case BiDistKind::Retarded: return "retarded";
    case BiDistKind::Advanced: return "advanced";
    case BiDistKind::Symmetric: return "symmetric";
    case BiDistKind::Feynman: return "feynman";
  }
  return "unknown";
}

BiDistKind parse_kind(std::string_view s) {
  if (s == "wightman" || s == "W") return BiDistKind::Wightman;
  if (s == "hadamard" || s == "H") return BiDistKind::Hadamard;
  if (s == "causal" || s == "E") return BiDistKind::Causal;
  if (s == "retarded" || s == "GR") return BiDistKind::Retarded;
  if (s == "advanced" || s == "GA") return BiDistKind::Advanced;
  if (s == "symmetric" || s == "Delta") return BiDistKind::Symmetric;
  if (s == "feynman" || s == "GF") return BiDistKind::Feynman;
  throw InvalidParameter("unknown bi-distribution kind: " + std::string(s));
}

void DetectorParams::validate() const {
  if (!std::isfinite(lambda) || lambda < 0.0)
    throw InvalidParameter("coupling lambda must be finite and non-negative");
  smearing.validate();
}

DerivedScales derived_scales(const GaussianSmearing& a, const GaussianSmearing& b) {
  a.validate();
  b.validate();
  const double alpha = std::sqrt(1.0 + a.sigma * a.sigma / (a.T * a.T));
  const double ell = distance(a.L, b.L) / a.T;
  const double s2 = a.T * a.T + b.T * b.T + a.sigma * a.sigma + b.sigma * b.sigma;
  return {alpha, ell, s2};
}

}  // namespace smear
