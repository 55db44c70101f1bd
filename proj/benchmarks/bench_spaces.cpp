#include <benchmark/benchmark.h>

#include <numbers>
#include <random>
#include <vector>

#include "qcx/glued.hpp"
#include "qcx/net.hpp"
#include "qcx/space.hpp"

namespace {

using namespace qcx;
constexpr double kPi = std::numbers::pi;

SpaceSpec spec_for(int which) {
  switch (which) {
    case 0: return SpaceSpec::sphere(2);
    case 1: return SpaceSpec::product(SpaceSpec::circle(2 * kPi), SpaceSpec::line());
    case 2: return SpaceSpec::cone(SpaceSpec::circle(1.5 * kPi));
    case 3: return SpaceSpec::suspension(SpaceSpec::circle(kPi));
    default: return SpaceSpec::join(SpaceSpec::circle(kPi), SpaceSpec::circle(1.5 * kPi));
  }
}

void BM_Dist(benchmark::State& state) {
  const auto s = Space::build(spec_for(static_cast<int>(state.range(0))));
  std::mt19937_64 rng(9);
  std::vector<Point> pts;
  for (int i = 0; i < 256; ++i) pts.push_back(random_point(*s, rng));
  std::size_t j = 0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(s->dist(pts[j], pts[(j * 7 + 3) & 255]));
    j = (j + 1) & 255;
  }
  state.SetLabel(s->describe());
}
BENCHMARK(BM_Dist)->DenseRange(0, 4);

void BM_GeodesicMidpoint(benchmark::State& state) {
  const auto s = Space::build(spec_for(static_cast<int>(state.range(0))));
  std::mt19937_64 rng(10);
  std::vector<Point> pts;
  for (int i = 0; i < 256; ++i) pts.push_back(random_point(*s, rng));
  std::size_t j = 0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(s->geodesic_points(pts[j], pts[(j * 7 + 3) & 255], 0.5));
    j = (j + 1) & 255;
  }
  state.SetLabel(s->describe());
}
BENCHMARK(BM_GeodesicMidpoint)->DenseRange(0, 4);

void BM_BarrelGraphBuild(benchmark::State& state) {
  for (auto _ : state) {
    benchmark::DoNotOptimize(Space::build(SpaceSpec::graph_of(barrel_graph(), 0.0)));
  }
}
BENCHMARK(BM_BarrelGraphBuild)->Unit(benchmark::kMillisecond);

void BM_BuildNet(benchmark::State& state) {
  const auto s = Space::build(SpaceSpec::sphere(2));
  NetOptions o;
  o.resolution = 1.0 / static_cast<double>(state.range(0));
  o.cap = 200000;
  for (auto _ : state) benchmark::DoNotOptimize(build_net(*s, o));
}
BENCHMARK(BM_BuildNet)->Arg(10)->Arg(20)->Arg(40)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
