#include <benchmark/benchmark.h>

#include "hodograph/specfun.hpp"

namespace sf = hodograph::specfun;

static void BM_KummerSeries(benchmark::State& state) {
  const double z = static_cast<double>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(sf::kummer_m(0.7, 2.3, z));
}
BENCHMARK(BM_KummerSeries)->Arg(1)->Arg(10)->Arg(40);

static void BM_KummerTerminating(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(sf::kummer_m(-12.0, 8.0, 14.0));
}
BENCHMARK(BM_KummerTerminating);

static void BM_Tricomi(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(sf::tricomi_psi(0.7, 2.3, 3.0));
}
BENCHMARK(BM_Tricomi);

static void BM_Laguerre(benchmark::State& state) {
  const int k = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(sf::laguerre(k, 7.0, 3.5));
}
BENCHMARK(BM_Laguerre)->Arg(2)->Arg(12);

static void BM_Ei(benchmark::State& state) {
  const double x = static_cast<double>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(sf::expint_ei(x));
}
BENCHMARK(BM_Ei)->Arg(-5)->Arg(1)->Arg(30);

BENCHMARK_MAIN();
