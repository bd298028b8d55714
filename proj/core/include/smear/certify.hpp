#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "smear/oracle.hpp"

namespace smear {

struct CheckResult {
  std::string name;
  double max_rel_err = 0.0;  // worst normalized deviation; 0 for pure property checks
  bool pass = false;
  std::string detail;
};

// Closed forms against the quadrature oracles on n random tuples (T in
// [0.1, 10], sigma in [0, 2], t0 in [-10, 10], sep in [0.1, 30], Omega in
// [-3, 3]).  Every fifth tuple is point-like and checks only W, H and E.
// Gate per value: |cf - q| <= max(1e-8 |q|, 10 err), or both below 1e-250.
CheckResult certify_oracle_grid(std::uint64_t seed, int n = 50, const QuadOptions& opt = {},
                                unsigned jobs = 1);

// Structural identities between the closed forms, each within 1e-12 of the
// largest constituent magnitude.
CheckResult certify_identities(std::uint64_t seed, int n = 200);

// Integral identity on n draws with |gamma| < |sigma| and
// ell <= 4 sqrt(gamma^2 + sigma^2), plus a single explicit point.
CheckResult certify_integral_identity(std::uint64_t seed, int n = 20, const QuadOptions& opt = {});
CheckResult certify_integral_identity_point(double gamma, double sigma, double ell,
                                            const QuadOptions& opt = {});

// Coincident self-Wightman at Omega = 0 against 1 / (4 pi alpha^2).
CheckResult certify_self_wightman();

// Closed-form negativity against the eigenvalue negativity of the assembled
// density matrix over Omega T in [0, 6] (200 points, sep = 5T, sigma = 0.01T).
CheckResult certify_dual_negativity(unsigned jobs = 1);

// Negativity dominates signalling by at least 10x somewhere, and the ratio is
// non-decreasing past the negativity peak.
CheckResult certify_fig1_property(unsigned jobs = 1);

// Optimal-gap and large-T asymptotic forms against the exact negativity.
CheckResult certify_asymptotics();

// Trace preservation, positivity on random inputs, Choi positivity and the
// single-detector purity formula.
CheckResult certify_gapless_channel(std::uint64_t seed);

// Entanglement onset in [0.6, 0.8] |L| and no negative PT eigenvalue for
// T <= 0.3 |L| (sigma = 0.05 |L|).
CheckResult certify_fig3_onset();

// Hilbert-Schmidt distance at T = 100 |L| against its limit, and the small
// coupling form of the limit.
CheckResult certify_fig4_limits();

}  // namespace smear
