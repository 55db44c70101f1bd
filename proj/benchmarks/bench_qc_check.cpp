#include <benchmark/benchmark.h>

#include <string>

#include "qcx/qc_check.hpp"
#include "qcx/zoo.hpp"

namespace {

using namespace qcx;

const char* kScenarios[] = {"helix-in-cylinder", "antipodal-longitudes", "barrel-rim"};

void BM_QuasiConvex(benchmark::State& state) {
  const char* name = kScenarios[state.range(0)];
  const ScenarioInstance in = build_scenario(name, {0.1, 0, 1});
  CheckOptions o;
  o.threads = static_cast<int>(state.range(1));
  for (auto _ : state) {
    benchmark::DoNotOptimize(check_quasi_convex(*in.space, in.subset, in.ambient, o));
  }
  state.SetLabel(name);
}
BENCHMARK(BM_QuasiConvex)
    ->ArgsProduct({{0, 1, 2}, {1, 4}})
    ->Unit(benchmark::kMillisecond);

void BM_LocalQuasiConvex(benchmark::State& state) {
  const ScenarioInstance in = build_scenario("barrel-rim", {0.1, 0, 1});
  for (auto _ : state) {
    benchmark::DoNotOptimize(
        check_local_quasi_convex(*in.space, in.subset, in.spec->lqc_radius, in.ambient));
  }
}
BENCHMARK(BM_LocalQuasiConvex)->Unit(benchmark::kMillisecond);

void BM_Extremal(benchmark::State& state) {
  const ScenarioInstance in = build_scenario("poles-extremal-iff-3pi2", {0.1, 0, 1});
  for (auto _ : state) benchmark::DoNotOptimize(check_extremal(*in.space, in.subset, in.ambient));
}
BENCHMARK(BM_Extremal)->Unit(benchmark::kMillisecond);

void BM_ZooScenario(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(run_scenario("capped-cylinder-rim", {}));
}
BENCHMARK(BM_ZooScenario)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
