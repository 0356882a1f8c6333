#include <benchmark/benchmark.h>

#include "sperner/restrictions.hpp"
#include "sperner/weight.hpp"

namespace {

using namespace sperner;

void BM_weight_sperner(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const RestrictionSystem sys = sperner_system(n);
  for (auto _ : state) {
    WeightResult res = weight(sys);
    benchmark::DoNotOptimize(res.w);
  }
}
BENCHMARK(BM_weight_sperner)->Arg(12)->Arg(16)->Arg(20);

void BM_weight_tilted(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const RestrictionSystem sys = tilted_system(n, 1, 2);
  for (auto _ : state) {
    WeightResult res = weight(sys);
    benchmark::DoNotOptimize(res.w);
  }
}
BENCHMARK(BM_weight_tilted)->Arg(12)->Arg(16)->Arg(20);

void BM_tilted_system_build(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state) {
    RestrictionSystem sys = tilted_system(n, 2, 3);
    benchmark::DoNotOptimize(sys.edges);
  }
}
BENCHMARK(BM_tilted_system_build)->Arg(20)->Arg(40);

}  // namespace
