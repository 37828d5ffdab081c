// Serial reference kernels against their OpenMP counterparts.

#include <benchmark/benchmark.h>

#include <vector>

#include "catdeg/blockmonoid.hpp"
#include "catdeg/catenary.hpp"
#include "catdeg/kernels.hpp"
#include "catdeg/monoid.hpp"

namespace {

const catdeg::NumericalMonoid& sample_monoid() {
  static const auto s = catdeg::NumericalMonoid::create({11, 25, 29});
  return s;
}

void BM_ElementStatsSerial(benchmark::State& state) {
  const auto& s = sample_monoid();
  for (auto _ : state)
    benchmark::DoNotOptimize(catdeg::kernels::element_stats_serial(s, 0, state.range(0)));
}
BENCHMARK(BM_ElementStatsSerial)->Arg(400)->Arg(1200)->Unit(benchmark::kMillisecond);

void BM_ElementStatsParallel(benchmark::State& state) {
  const auto& s = sample_monoid();
  for (auto _ : state)
    benchmark::DoNotOptimize(catdeg::kernels::element_stats_parallel(s, 0, state.range(0)));
}
BENCHMARK(BM_ElementStatsParallel)->Arg(400)->Arg(1200)->Unit(benchmark::kMillisecond);

void BM_DeltaUnionSerial(benchmark::State& state) {
  const auto s = catdeg::NumericalMonoid::create({30, 52, 55});
  for (auto _ : state)
    benchmark::DoNotOptimize(catdeg::kernels::delta_union_serial(s, state.range(0)));
}
BENCHMARK(BM_DeltaUnionSerial)->Arg(1500)->Unit(benchmark::kMillisecond);

void BM_DeltaUnionParallel(benchmark::State& state) {
  const auto s = catdeg::NumericalMonoid::create({30, 52, 55});
  for (auto _ : state)
    benchmark::DoNotOptimize(catdeg::kernels::delta_union_parallel(s, state.range(0)));
}
BENCHMARK(BM_DeltaUnionParallel)->Arg(1500)->Unit(benchmark::kMillisecond);

void BM_BlockSampleSerial(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(catdeg::catenary_set_sample_serial(n, 2 * n));
}
BENCHMARK(BM_BlockSampleSerial)->Arg(5)->Arg(6)->Unit(benchmark::kMillisecond);

void BM_BlockSampleParallel(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(catdeg::catenary_set_sample(n, 2 * n));
}
BENCHMARK(BM_BlockSampleParallel)->Arg(5)->Arg(6)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
