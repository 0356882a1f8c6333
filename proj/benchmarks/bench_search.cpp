#include <benchmark/benchmark.h>

#include "sperner/restrictions.hpp"
#include "sperner/search.hpp"

namespace {

using namespace sperner;

void BM_build_violation_graph(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const PairCondition cond = sperner_system(n);
  for (auto _ : state) {
    ViolationGraph g = build_violation_graph(cond, n);
    benchmark::DoNotOptimize(g.edge_count);
  }
}
BENCHMARK(BM_build_violation_graph)->Arg(8)->Arg(10);

void BM_max_family_sperner(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const PairCondition cond = sperner_system(n);
  for (auto _ : state) {
    ExtremalResult res = max_family(cond, n);
    benchmark::DoNotOptimize(res.size);
  }
}
BENCHMARK(BM_max_family_sperner)->Arg(4)->Arg(6)->Arg(8);

void BM_max_family_ordered(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const PairCondition cond = OrderedTilted{n};
  for (auto _ : state) {
    ExtremalResult res = max_family(cond, n);
    benchmark::DoNotOptimize(res.size);
  }
}
BENCHMARK(BM_max_family_ordered)->Arg(5)->Arg(7);

void BM_exhaustive_oracle(benchmark::State& state) {
  const PairCondition cond = sperner_system(3);
  for (auto _ : state) {
    long best = exhaustive_oracle(cond, 3);
    benchmark::DoNotOptimize(best);
  }
}
BENCHMARK(BM_exhaustive_oracle);

}  // namespace
