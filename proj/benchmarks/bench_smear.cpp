#include <benchmark/benchmark.h>

#include "smear/gapless.hpp"
#include "smear/oracle.hpp"
#include "smear/propagators.hpp"
#include "smear/udw.hpp"

using namespace smear;

namespace {

const GaussianSmearing f1 = make_smearing(1.0, 1.3, 0.7, 0.5, {2, 0, 0});
const GaussianSmearing f2 = make_smearing(2.0, 0.0, -0.4, 0.5, {0, 0, 0});

void BM_closed_form(benchmark::State& st) {
  const auto kind = static_cast<BiDistKind>(st.range(0));
  for (auto _ : st) benchmark::DoNotOptimize(evaluate(kind, f1, f2));
  st.SetLabel(std::string(to_string(kind)));
}
BENCHMARK(BM_closed_form)->DenseRange(0, 6);

void BM_oracle(benchmark::State& st) {
  const auto kind = static_cast<BiDistKind>(st.range(0));
  for (auto _ : st) benchmark::DoNotOptimize(quad_kind(kind, f1, f2));
  st.SetLabel(std::string(to_string(kind)));
}
BENCHMARK(BM_oracle)->DenseRange(0, 6)->Unit(benchmark::kMicrosecond);

void BM_eigh4(benchmark::State& st) {
  const GaplessStates s = ground_ground_states({1.0, 0.8, 0.05, 1.0, 0.0});
  const Mat4 pt = partial_transpose_B(s.full.m);
  for (auto _ : st) benchmark::DoNotOptimize(eig_hermitian_4(pt));
}
BENCHMARK(BM_eigh4);

void BM_harvesting_state(benchmark::State& st) {
  const HarvestingSetup s{1.0, 2.5, 1.0, 0.01, 5.0, 0.0};
  for (auto _ : st) benchmark::DoNotOptimize(harvesting_state(s));
}
BENCHMARK(BM_harvesting_state);

void BM_gapless_states(benchmark::State& st) {
  for (auto _ : st) benchmark::DoNotOptimize(ground_ground_states({0.5, 0.7, 0.05, 1.0, 0.0}));
}
BENCHMARK(BM_gapless_states);

void BM_fig1_sweep(benchmark::State& st) {
  std::vector<double> grid(200);
  for (int i = 0; i < 200; ++i) grid[i] = 6.0 * i / 199;
  const HarvestingSetup base{1.0, 0.0, 1.0, 0.01, 5.0, 0.0};
  const auto jobs = static_cast<unsigned>(st.range(0));
  for (auto _ : st) benchmark::DoNotOptimize(fig1_sweep(grid, base, jobs));
}
BENCHMARK(BM_fig1_sweep)->Arg(1)->Arg(4)->Unit(benchmark::kMillisecond)->UseRealTime();

}  // namespace

BENCHMARK_MAIN();
