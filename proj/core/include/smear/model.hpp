#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace smear {

// Raised for parameter sets outside an operation's domain.
class InvalidParameter : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

struct Vec3 {
  double x = 0.0, y = 0.0, z = 0.0;
};

double distance(const Vec3& a, const Vec3& b);

// One Gaussian spacetime test function
//   f(t, x) = exp(-(t - t0)^2 / 2T^2) exp(i Omega t) exp(-|x - L|^2 / 2 sigma^2) / (2 pi sigma^2)^(3/2)
// The spatial profile has unit integral; the switching is not normalised.
// sigma = 0 is the point-like limit.  Natural units, c = 1.
struct GaussianSmearing {
  double T = 1.0;
  double t0 = 0.0;
  double Omega = 0.0;
  double sigma = 0.0;
  Vec3 L{};

  // Throws InvalidParameter when T <= 0, sigma < 0 or any field is not finite.
  void validate() const;
};

GaussianSmearing make_smearing(double T, double t0, double Omega, double sigma,
                               Vec3 L = {});

// The closed forms depend on the spatial centres only through sep and on the
// temporal centres only through dt (apart from phase prefactors).
struct PairGeometry {
  double sep = 0.0;
  double dt = 0.0;
};

PairGeometry geometry(const GaussianSmearing& a, const GaussianSmearing& b);

enum class BiDistKind {
  Wightman,
  Hadamard,
  Causal,
  Retarded,
  Advanced,
  Symmetric,
  Feynman,
};

std::string_view to_string(BiDistKind k);
// Accepts the lowercase names ("wightman", "hadamard", "causal", "retarded",
// "advanced", "symmetric", "feynman") and the letters W, H, E, GR, GA, Delta, GF.
BiDistKind parse_kind(std::string_view s);

struct DetectorParams {
  double lambda = 0.0;
  GaussianSmearing smearing{};

  void validate() const;
};

struct DerivedScales {
  double alpha;   // sqrt(1 + sigma^2 / T^2) of the first smearing
  double ell;     // sep / T of the first smearing
  double Sigma2;  // T1^2 + T2^2 + sigma1^2 + sigma2^2
};

DerivedScales derived_scales(const GaussianSmearing& a, const GaussianSmearing& b);

}  // namespace smear
