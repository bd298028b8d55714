// One line per acceptance criterion; exit status 1 if any fails.
#include <chrono>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <functional>
#include <string>
#include <vector>

#include "json.hpp"
#include "smear/certify.hpp"
#include "smear/specfun.hpp"

using namespace smear;

namespace {

CheckResult specfun_fixture(const std::string& path) {
  CheckResult r{"specfun_fixture", 0.0, false, ""};
  std::ifstream in(path);
  if (!in) {
    r.detail = "cannot open " + path;
    return r;
  }
  const auto doc = nlohmann::json::parse(in);
  const auto& rows = doc.at("rows");
  for (const auto& row : rows) {
    const std::string fn = row.at("fn");
    const cplx z(row.at("re").get<double>(), row.at("im").get<double>());
    const cplx want(std::stod(row.at("value_re").get<std::string>()), std::stod(row.at("value_im").get<std::string>()));
    const cplx got = fn == "w" ? faddeeva_w(z) : fn == "erf" ? erf_c(z) : erfi_c(z);
    const double m = std::abs(want);
    r.max_rel_err = std::max(r.max_rel_err, m > 0 ? std::abs(got - want) / m : std::abs(got));
  }
  r.pass = rows.size() == 100 && r.max_rel_err <= 1e-12;
  r.detail = std::to_string(rows.size()) + " values of erf, erfi and w";
  return r;
}

}  // namespace

int main() {
  const std::uint64_t seed = 1;
  std::vector<std::function<CheckResult()>> suites{
      [&] {
        const auto t = std::chrono::steady_clock::now();
        CheckResult r = certify_oracle_grid(seed, 50, {}, 1);
        const double s = std::chrono::duration<double>(std::chrono::steady_clock::now() - t).count();
        r.pass = r.pass && s < 60.0;
        char buf[64];
        std::snprintf(buf, sizeof buf, ", %.2f s single-threaded", s);
        r.detail += buf;
        return r;
      },
      [&] { return certify_identities(seed, 200); },
      [&] { return certify_integral_identity(seed, 20); },
      [] { return certify_self_wightman(); },
      [] { return certify_dual_negativity(); },
      [] { return certify_fig1_property(); },
      [] { return certify_asymptotics(); },
      [&] { return certify_gapless_channel(seed); },
      [] { return certify_fig3_onset(); },
      [] { return certify_fig4_limits(); },
      [] { return specfun_fixture(std::string(SMEAR_FIXTURE_DIR) + "/specfun_grid.json"); },
  };
  int failed = 0;
  for (const auto& run : suites) {
    CheckResult r;
    try {
      r = run();
    } catch (const std::exception& e) {
      r.name = "exception";
      r.detail = e.what();
      r.pass = false;
    }
    if (!r.pass) ++failed;
    std::printf("%s %-18s max_rel_err=%-10.3g %s\n", r.pass ? "PASS" : "FAIL", r.name.c_str(), r.max_rel_err,
                r.detail.c_str());
  }
  std::printf("%d of %zu criteria passed\n", static_cast<int>(suites.size()) - failed, suites.size());
  return failed ? 1 : 0;
}
