#include <benchmark/benchmark.h>

#include <cstdint>
#include <vector>

#include "sperner/chain.hpp"
#include "sperner/subset.hpp"

namespace {

using namespace sperner;

void BM_sample_chain(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  std::uint64_t seed = 0;
  for (auto _ : state) {
    ChainSample cs = sample_chain(n, 0, 0, seed++);
    benchmark::DoNotOptimize(cs.chain.back());
  }
}
BENCHMARK(BM_sample_chain)->Arg(144)->Arg(576)->Arg(10002);

void BM_sample_chain_stats(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  std::uint64_t seed = 0;
  for (auto _ : state) {
    std::vector<ZoneStats> stats = sample_chain_stats(n, 0, 0, seed++);
    benchmark::DoNotOptimize(stats.back().r);
  }
}
BENCHMARK(BM_sample_chain_stats)->Arg(576)->Arg(10002);

void BM_chain_log_probability(benchmark::State& state) {
  const int n = 10002, m1 = n / 3;
  std::vector<int> elems;
  for (int e = 1; e <= m1 / 2; ++e) elems.push_back(e);
  for (int e = m1 + 1; e <= m1 + (n - m1) / 2 + 16; ++e) elems.push_back(e);
  const SubsetWord a = SubsetWord::from_elements(n, elems);
  for (auto _ : state) {
    long double lp = chain_log_probability(n, 0, 0, a, 4);
    benchmark::DoNotOptimize(lp);
  }
}
BENCHMARK(BM_chain_log_probability);

void BM_micro_point_probability(benchmark::State& state) {
  const MicroChainParams mp{6, 12, 2, 1, 2, 1, 2};
  const SubsetWord a = SubsetWord::from_mask(18, 0b000000111111000111);
  for (auto _ : state) {
    mpq_class p = chain_point_probability(mp, a, 1);
    benchmark::DoNotOptimize(p);
  }
}
BENCHMARK(BM_micro_point_probability);

}  // namespace
