#include <benchmark/benchmark.h>

#include <cmath>
#include <numbers>
#include <random>
#include <vector>

#include "qcx/spaceforms.hpp"

namespace {

struct Input {
  double a, b, th;
};

std::vector<Input> inputs(std::size_t n) {
  std::mt19937_64 rng(5);
  std::uniform_real_distribution<double> side(0.01, 3.0), ang(0.01, std::numbers::pi - 0.01);
  std::vector<Input> v(n);
  for (Input& i : v) i = {side(rng), side(rng), ang(rng)};
  return v;
}

void BM_ComparisonAngle(benchmark::State& state) {
  const double k = static_cast<double>(state.range(0));
  const auto in = inputs(1024);
  std::vector<double> opp;
  for (const Input& i : in) opp.push_back(qcx::side_from_angle(k, i.a, i.b, i.th));
  std::size_t j = 0;
  for (auto _ : state) {
    const Input& i = in[j];
    benchmark::DoNotOptimize(qcx::comparison_angle({k, i.a, i.b, opp[j]}));
    j = (j + 1) & 1023;
  }
}
BENCHMARK(BM_ComparisonAngle)->Arg(-1)->Arg(0)->Arg(1);

void BM_ComparisonAngleClamped(benchmark::State& state) {
  const auto in = inputs(1024);
  std::size_t j = 0;
  for (auto _ : state) {
    const Input& i = in[j];
    benchmark::DoNotOptimize(qcx::comparison_angle_clamped(1.0, i.a, i.b, i.th));
    j = (j + 1) & 1023;
  }
}
BENCHMARK(BM_ComparisonAngleClamped);

void BM_SideFromAngle(benchmark::State& state) {
  const double k = static_cast<double>(state.range(0));
  const auto in = inputs(1024);
  std::size_t j = 0;
  for (auto _ : state) {
    const Input& i = in[j];
    benchmark::DoNotOptimize(qcx::side_from_angle(k, i.a, i.b, i.th));
    j = (j + 1) & 1023;
  }
}
BENCHMARK(BM_SideFromAngle)->Arg(-1)->Arg(0)->Arg(1);

}  // namespace

BENCHMARK_MAIN();
