#include <benchmark/benchmark.h>

#include <cstdint>
#include <vector>

#include "sperner/family.hpp"
#include "sperner/rng.hpp"
#include "sperner/subset.hpp"

namespace {

using namespace sperner;

std::vector<SubsetWord> random_sets(int n, int count, std::uint64_t seed) {
  Rng rng(seed);
  std::vector<SubsetWord> out;
  out.reserve(count);
  for (int i = 0; i < count; ++i) {
    SubsetWord s(n);
    for (int e = 1; e <= n; ++e)
      if (rng.bernoulli(0.5)) s.insert(e);
    out.push_back(s);
  }
  return out;
}

void BM_diff_size(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const std::vector<SubsetWord> sets = random_sets(n, 256, 1);
  std::size_t i = 0;
  for (auto _ : state) {
    const int d = diff_size(sets[i & 255], sets[(i + 1) & 255]);
    benchmark::DoNotOptimize(d);
    ++i;
  }
}
BENCHMARK(BM_diff_size)->Arg(64)->Arg(576)->Arg(10002);

void BM_pair_violates_ordered(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const std::vector<SubsetWord> sets = random_sets(n, 256, 2);
  std::size_t i = 0;
  for (auto _ : state) {
    const bool v = pair_violates_ordered(sets[i & 255], sets[(i + 1) & 255]);
    benchmark::DoNotOptimize(v);
    ++i;
  }
}
BENCHMARK(BM_pair_violates_ordered)->Arg(64)->Arg(576)->Arg(10002);

void BM_colex_less(benchmark::State& state) {
  const std::vector<SubsetWord> sets = random_sets(576, 256, 3);
  std::size_t i = 0;
  for (auto _ : state) {
    const bool lt = colex_less(sets[i & 255], sets[(i + 1) & 255]);
    benchmark::DoNotOptimize(lt);
    ++i;
  }
}
BENCHMARK(BM_colex_less);

void BM_insert_erase(benchmark::State& state) {
  SubsetWord s(576);
  int e = 1;
  for (auto _ : state) {
    s.insert(e);
    s.erase(e);
    e = e % 576 + 1;
    benchmark::DoNotOptimize(s);
  }
}
BENCHMARK(BM_insert_erase);

}  // namespace
