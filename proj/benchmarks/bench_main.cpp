#include <benchmark/benchmark.h>

#include "coulomb/gale.hpp"
#include "coulomb/monopole.hpp"
#include "coulomb/plethystic.hpp"

using namespace coulomb;

namespace {

HSRequest bouquet(int n, int order, EngineStrategy strategy) {
  HSRequest r;
  r.quiver = build_bouquet_quiver(n);
  r.order = order;
  r.ungauge = "b1";
  r.strategy = strategy;
  return r;
}

void BM_BouquetTree(benchmark::State& state) {
  const HSRequest r = bouquet(static_cast<int>(state.range(0)), 4, EngineStrategy::TreeMessages);
  for (auto _ : state) benchmark::DoNotOptimize(coulomb_hilbert_series(r));
}
BENCHMARK(BM_BouquetTree)->Arg(3)->Arg(4)->Arg(5)->Unit(benchmark::kMillisecond);

void BM_BouquetLattice(benchmark::State& state) {
  const HSRequest r = bouquet(static_cast<int>(state.range(0)), 4, EngineStrategy::LatticeSum);
  for (auto _ : state) benchmark::DoNotOptimize(coulomb_hilbert_series(r));
}
BENCHMARK(BM_BouquetLattice)->Arg(2)->Arg(3)->Unit(benchmark::kMillisecond);

void BM_NilpotentOrder(benchmark::State& state) {
  HSRequest r;
  r.quiver = build_linear_nilpotent_quiver(4);
  r.order = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(coulomb_hilbert_series(r));
}
BENCHMARK(BM_NilpotentOrder)->Arg(6)->Arg(10)->Arg(14)->Unit(benchmark::kMillisecond);

void BM_DnBouquet(benchmark::State& state) {
  HSRequest r;
  r.quiver = build_dn_implosion_quiver(static_cast<int>(state.range(0)));
  r.order = 2;
  for (auto _ : state) benchmark::DoNotOptimize(coulomb_hilbert_series(r));
}
BENCHMARK(BM_DnBouquet)->Arg(3)->Arg(4)->Unit(benchmark::kMillisecond);

void BM_PlethysticLog(benchmark::State& state) {
  const TruncatedSeries s = expand_inverse(1, static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(plethystic_log(s, s.order()));
}
BENCHMARK(BM_PlethysticLog)->Arg(20)->Arg(60);

void BM_GaleDual(benchmark::State& state) {
  const ToricConfig c = ToricConfig::from_columns(3, {{1, 0, 0}, {0, 1, 0}, {0, 0, 1}, {1, 1, 1}, {2, -1, 3}, {-1, 4, 2},
                                                      {5, 2, -3}, {1, -2, 7}});
  for (auto _ : state) benchmark::DoNotOptimize(gale_dual(c));
}
BENCHMARK(BM_GaleDual);

}  // namespace

BENCHMARK_MAIN();
