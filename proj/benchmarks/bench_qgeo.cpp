#include <benchmark/benchmark.h>

#include <numbers>

#include "qcx/glued.hpp"
#include "qcx/qgeo.hpp"
#include "qcx/subsets.hpp"

namespace {

using namespace qcx;

void BM_MinimizeEquatorArc(benchmark::State& state) {
  const auto sph = Space::build(SpaceSpec::sphere(2));
  const SubsetNet F = subset_equator(*sph, std::numbers::pi / 512);
  const int m = static_cast<int>(state.range(0));
  MinimizeOptions o;
  o.exact = state.range(1) != 0;
  for (auto _ : state) benchmark::DoNotOptimize(minimize_chain(*sph, F, F[0], F[256], m, o));
}
BENCHMARK(BM_MinimizeEquatorArc)
    ->ArgsProduct({{8, 32}, {0, 1}})
    ->Unit(benchmark::kMillisecond);

void BM_MinimizeBarrelRim(benchmark::State& state) {
  const auto s = Space::build(SpaceSpec::graph_of(barrel_graph(), 0.0));
  const SubsetNet F = subset_prefix(*s, "rim:");
  const Point a = graph_point(s->node_index("rim:0")), b = graph_point(s->node_index("rim:63"));
  const int m = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(minimize_chain(*s, F, a, b, m));
}
BENCHMARK(BM_MinimizeBarrelRim)->Arg(8)->Arg(32)->Unit(benchmark::kMillisecond);

void BM_DiscBoundaryCertificates(benchmark::State& state) {
  const auto s = Space::build(SpaceSpec::graph_of(disc_graph(), 0.0));
  const SubsetNet F = subset_prefix(*s, "rim:");
  const Chain c = minimize_chain(*s, F, graph_point(s->node_index("rim:0")),
                                 graph_point(s->node_index("rim:24")), 12);
  Net P;
  for (std::size_t i = 0; i < s->node_ids().size(); ++i) {
    if (s->node_ids()[i].rfind("rim:", 0) != 0) P.points.push_back(graph_point(static_cast<int>(i)));
  }
  P.mesh = build_net(*s, NetOptions{}).mesh;
  for (auto _ : state) {
    benchmark::DoNotOptimize(check_second_difference(*s, c, P));
    benchmark::DoNotOptimize(check_angle_comparison(*s, c, P));
  }
}
BENCHMARK(BM_DiscBoundaryCertificates)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
