#include <benchmark/benchmark.h>

#include <vector>

#include "bachet/kernels.hpp"
#include "bachet/structure.hpp"
#include "bachet/theorems.hpp"

using namespace bachet;

namespace {

void BM_CharacterSumSerial(benchmark::State& state) {
  const auto p = static_cast<std::uint64_t>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(kernels::character_sum_serial(p, 1));
  state.SetItemsProcessed(state.iterations() * state.range(0));
}

void BM_CharacterSumParallel(benchmark::State& state) {
  const auto p = static_cast<std::uint64_t>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(kernels::character_sum_parallel(p, 1));
  state.SetItemsProcessed(state.iterations() * state.range(0));
}

struct GroupFixture {
  std::vector<Point> points;
  Factorization order;

  explicit GroupFixture(std::uint64_t p)
      : points(enumerate_points(BachetCurve(Prime(p), 1))), order(points.size()) {}
};

void BM_PointOrdersSerial(benchmark::State& state) {
  const GroupFixture g(static_cast<std::uint64_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(kernels::point_orders_serial(g.points, g.order));
  state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(g.points.size()));
}

void BM_PointOrdersParallel(benchmark::State& state) {
  const GroupFixture g(static_cast<std::uint64_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(kernels::point_orders_parallel(g.points, g.order));
  state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(g.points.size()));
}

void BM_ExponentSerial(benchmark::State& state) {
  const GroupFixture g(static_cast<std::uint64_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(kernels::exponent_serial(g.points, g.order));
}

void BM_ExponentParallel(benchmark::State& state) {
  const GroupFixture g(static_cast<std::uint64_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(kernels::exponent_parallel(g.points, g.order));
}

void BM_Sweep(benchmark::State& state) {
  SweepOptions options;
  options.jobs = static_cast<unsigned>(state.range(1));
  for (auto _ : state) benchmark::DoNotOptimize(sweep(static_cast<std::uint64_t>(state.range(0)), options));
}

}  // namespace

BENCHMARK(BM_CharacterSumSerial)->Arg(10007)->Arg(999983)->Unit(benchmark::kMicrosecond);
BENCHMARK(BM_CharacterSumParallel)->Arg(10007)->Arg(999983)->Unit(benchmark::kMicrosecond);
BENCHMARK(BM_PointOrdersSerial)->Arg(1009)->Arg(49999)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_PointOrdersParallel)->Arg(1009)->Arg(49999)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_ExponentSerial)->Arg(1009)->Arg(49999)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_ExponentParallel)->Arg(1009)->Arg(49999)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_Sweep)->Args({1000, 1})->Args({1000, 0})->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
