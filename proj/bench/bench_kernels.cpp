// Serial reference kernels against their OpenMP counterparts.
// KOHN_SPECTRA_THREADS caps the OpenMP side.

#include <benchmark/benchmark.h>

#include "kohn/kernels.hpp"

using namespace kohn::kernels;

static void BM_SchattenSerial(benchmark::State& state) {
  const long c = state.range(0);
  for (auto _ : state) benchmark::DoNotOptimize(serial::schatten_sum(3, 4.5, c, c));
  state.SetItemsProcessed(state.iterations() * (c + 1) * c);
}

static void BM_SchattenOmp(benchmark::State& state) {
  const long c = state.range(0);
  for (auto _ : state) benchmark::DoNotOptimize(omp::schatten_sum(3, 4.5, c, c));
  state.SetItemsProcessed(state.iterations() * (c + 1) * c);
}

static void BM_LowerBoundSerial(benchmark::State& state) {
  const long c = state.range(0);
  for (auto _ : state) benchmark::DoNotOptimize(serial::lower_bound_sum(3, 3.0, c, c));
}

static void BM_LowerBoundOmp(benchmark::State& state) {
  const long c = state.range(0);
  for (auto _ : state) benchmark::DoNotOptimize(omp::lower_bound_sum(3, 3.0, c, c));
}

static void BM_ExactSerial(benchmark::State& state) {
  const long c = state.range(0);
  for (auto _ : state) benchmark::DoNotOptimize(serial::schatten_sum_exact(2, 3, c, c));
}

static void BM_ExactOmp(benchmark::State& state) {
  const long c = state.range(0);
  for (auto _ : state) benchmark::DoNotOptimize(omp::schatten_sum_exact(2, 3, c, c));
}

static void BM_RatioArgmaxSerial(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(serial::ratio_argmax(6, 1, state.range(0)));
}

static void BM_RatioArgmaxOmp(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(omp::ratio_argmax(6, 1, state.range(0)));
}

BENCHMARK(BM_SchattenSerial)->Arg(256)->Arg(1024)->Arg(2048)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_SchattenOmp)->Arg(256)->Arg(1024)->Arg(2048)->Unit(benchmark::kMillisecond)->UseRealTime();
BENCHMARK(BM_LowerBoundSerial)->Arg(1024)->Arg(4096)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_LowerBoundOmp)->Arg(1024)->Arg(4096)->Unit(benchmark::kMillisecond)->UseRealTime();
BENCHMARK(BM_ExactSerial)->Arg(32)->Arg(64)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_ExactOmp)->Arg(32)->Arg(64)->Unit(benchmark::kMillisecond)->UseRealTime();
BENCHMARK(BM_RatioArgmaxSerial)->Arg(10000)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_RatioArgmaxOmp)->Arg(10000)->Unit(benchmark::kMillisecond)->UseRealTime();

BENCHMARK_MAIN();
