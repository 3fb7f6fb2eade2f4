#include <benchmark/benchmark.h>

#include <numbers>

#include "hodograph/mapper.hpp"
#include "hodograph/momentum.hpp"

using namespace hodograph;

namespace {

struct Sector {
  ModelParams p;
  MappedSolution s;
  SectorDomain d;
};

Sector sector() {
  Sector c;
  c.s.radial = make_radial(c.p, RadialKind::KummerPlus, 2.0);
  c.s.angular = AngularFactor{2.0, 0.0, 1.0};
  const double rt = c.p.rho_T(), deg = std::numbers::pi / 180.0;
  c.d = SectorDomain{1.8 * rt, 2.4 * rt, -12.0 * deg, 12.0 * deg};
  return c;
}

}  // namespace

static void BM_ForwardMap(benchmark::State& state) {
  const Sector c = sector();
  const double rho = 2.0 * c.p.rho_T();
  for (auto _ : state) benchmark::DoNotOptimize(forward_map(c.p, c.s.radial, c.s.angular, rho, 0.1));
}
BENCHMARK(BM_ForwardMap);

static void BM_InvertMap(benchmark::State& state) {
  const Sector c = sector();
  const double rho = 2.0 * c.p.rho_T();
  const MapPoint img = forward_map(c.p, c.s.radial, c.s.angular, rho, 0.1);
  const MomentumPoint seed{1.02 * rho, 0.11};
  for (auto _ : state) benchmark::DoNotOptimize(invert_map(c.p, c.s.radial, c.s.angular, {img.x, img.y}, seed));
}
BENCHMARK(BM_InvertMap);

static void BM_SampleFields(benchmark::State& state) {
  const Sector c = sector();
  const auto n = static_cast<std::size_t>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(sample_fields(c.p, c.s, c.d, n, n, 1.0));
  state.SetItemsProcessed(state.iterations() * static_cast<long>(n * n));
}
BENCHMARK(BM_SampleFields)->Arg(41)->Arg(161);

BENCHMARK_MAIN();
