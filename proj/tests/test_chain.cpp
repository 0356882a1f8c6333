#include <doctest.h>

#include <algorithm>
#include <array>
#include <cmath>
#include <cstdint>
#include <limits>
#include <map>
#include <stdexcept>
#include <vector>

#include "sperner/chain.hpp"
#include "sperner/family.hpp"
#include "sperner/rng.hpp"
#include "sperner/subset.hpp"
#include "support.hpp"

using namespace sperner;

namespace {

bool same_sample(const ChainSample& a, const ChainSample& b) {
  return a.n == b.n && a.K == b.K && a.u == b.u && a.v == b.v && a.s1 == b.s1 &&
         a.s2 == b.s2 && a.chain == b.chain;
}

// Test-local replay of the documented random stream: U tuple, S1 Bernoulli
// bits over the left part ascending (skipping U), V tuple, S2 bits over the
// right part ascending (skipping V).  Builds the chain from the definition
// C_k = (U \ {u_1..u_k}) ∪ S1 ∪ {v_{2K-2k+1}..v_{2K}} ∪ S2.
ChainSample replay_chain(int n, double p1, double p2, int K, std::uint64_t seed) {
  const int m1 = n / 3, m2 = n - m1;
  Rng rng(seed);
  ChainSample cs;
  cs.n = n;
  cs.m1 = m1;
  cs.m2 = m2;
  cs.K = K;
  cs.seed = seed;
  cs.s1 = SubsetWord(n);
  cs.s2 = SubsetWord(n);
  cs.u = rng.distinct_tuple(1, m1, K);
  std::vector<int> skip = cs.u;
  std::sort(skip.begin(), skip.end());
  for (int e = 1; e <= m1; ++e) {
    if (std::binary_search(skip.begin(), skip.end(), e)) continue;
    if (rng.bernoulli(p1)) cs.s1.insert(e);
  }
  cs.v = rng.distinct_tuple(m1 + 1, n, 2 * K);
  skip = cs.v;
  std::sort(skip.begin(), skip.end());
  for (int e = m1 + 1; e <= n; ++e) {
    if (std::binary_search(skip.begin(), skip.end(), e)) continue;
    if (rng.bernoulli(p2)) cs.s2.insert(e);
  }
  for (int k = 0; k <= K; ++k) {
    SubsetWord ck = set_union(cs.s1, cs.s2);
    for (int t = k; t < K; ++t) ck.insert(cs.u[t]);
    for (int t = 2 * K - 2 * k; t < 2 * K; ++t) ck.insert(cs.v[t]);
    cs.chain.push_back(ck);
  }
  return cs;
}

// Exhaustive micro-oracle at (m1=4, m2=6, K=1): walks every outcome of
// (ordered U, S1, ordered V, S2) and accumulates the exact distribution of
// C_k.  Left and right are combined, so this is the full joint law.
std::vector<std::map<std::uint64_t, mpq_class>> micro_oracle_4_6_1(long p1_num, long p1_den,
                                                                   long p2_num, long p2_den) {
  const int m1 = 4, m2 = 6, K = 1, n = m1 + m2;
  std::vector<std::map<std::uint64_t, mpq_class>> dist(K + 1);
  for (int u1 = 1; u1 <= m1; ++u1) {
    mpq_class w_u(1, m1);  // uniform 1-tuple
    std::vector<int> rest1;
    for (int e = 1; e <= m1; ++e)
      if (e != u1) rest1.push_back(e);
    for (int s1_bits = 0; s1_bits < (1 << 3); ++s1_bits) {
      mpq_class w_s1(1);
      std::uint64_t s1_mask = 0;
      for (int b = 0; b < 3; ++b) {
        if (s1_bits >> b & 1) {
          w_s1 *= mpq_class(p1_num, p1_den);
          s1_mask |= std::uint64_t{1} << (rest1[b] - 1);
        } else {
          w_s1 *= mpq_class(p1_den - p1_num, p1_den);
        }
      }
      for (int v1 = m1 + 1; v1 <= n; ++v1)
        for (int v2 = m1 + 1; v2 <= n; ++v2) {
          if (v1 == v2) continue;
          mpq_class w_v(1, m2 * (m2 - 1));  // uniform ordered 2-tuple
          std::vector<int> rest2;
          for (int e = m1 + 1; e <= n; ++e)
            if (e != v1 && e != v2) rest2.push_back(e);
          for (int s2_bits = 0; s2_bits < (1 << 4); ++s2_bits) {
            mpq_class w_s2(1);
            std::uint64_t s2_mask = 0;
            for (int b = 0; b < 4; ++b) {
              if (s2_bits >> b & 1) {
                w_s2 *= mpq_class(p2_num, p2_den);
                s2_mask |= std::uint64_t{1} << (rest2[b] - 1);
              } else {
                w_s2 *= mpq_class(p2_den - p2_num, p2_den);
              }
            }
            const mpq_class w = w_u * w_s1 * w_v * w_s2;
            // C_0 = {u1} ∪ S1 ∪ S2;  C_1 = S1 ∪ {v1, v2} ∪ S2.
            const std::uint64_t c0 =
                (std::uint64_t{1} << (u1 - 1)) | s1_mask | s2_mask;
            const std::uint64_t c1 = s1_mask | (std::uint64_t{1} << (v1 - 1)) |
                                     (std::uint64_t{1} << (v2 - 1)) | s2_mask;
            dist[0][c0] += w;
            dist[1][c1] += w;
          }
        }
    }
  }
  return dist;
}

}  // namespace

TEST_SUITE("chain") {

TEST_CASE("fixed seed 42 at n = 576 reproduces exactly") {
  ChainSample a = sample_chain(576, 0, 0, 42);
  ChainSample b = sample_chain(576, 0, 0, 42);
  CHECK(same_sample(a, b));
  CHECK(a.seed == 42);
  ChainSample c = sample_chain(576, 0, 0, 43);
  CHECK(!same_sample(a, c));
}

TEST_CASE("sample_chain follows the documented stream order") {
  for (std::uint64_t seed : {0ull, 7ull, 42ull}) {
    ChainSample got = sample_chain(576, 1, -1, seed);
    // n = 576: p1 = 1/2 + 6/24, p2 = 1/2 - 3/24, K = floor(24/12) = 2.
    ChainSample want = replay_chain(576, 0.75, 0.375, 2, seed);
    CHECK(same_sample(got, want));
  }
}

TEST_CASE("chain invariants on random draws") {
  for (std::uint64_t seed = 0; seed < 12; ++seed) {
    const int n = (seed % 2 == 0) ? 144 : 576;
    const int i = (n == 576) ? static_cast<int>(seed % 3) - 1 : 0;
    ChainSample cs = sample_chain(n, i, 0, seed);
    const int K = cs.K, m1 = cs.m1;
    CHECK(K == (n == 144 ? 1 : 2));
    REQUIRE(static_cast<int>(cs.chain.size()) == K + 1);
    REQUIRE(static_cast<int>(cs.u.size()) == K);
    REQUIRE(static_cast<int>(cs.v.size()) == 2 * K);

    for (int e : cs.u) CHECK((1 <= e && e <= m1));
    for (int e : cs.v) CHECK((m1 + 1 <= e && e <= n));
    for (int e : cs.u) CHECK(!cs.s1.contains(e));
    for (int e : cs.v) CHECK(!cs.s2.contains(e));
    CHECK(prefix_count(cs.s1, m1) == cs.s1.size());  // S1 lives left
    CHECK(prefix_count(cs.s2, m1) == 0);             // S2 lives right

    const int base = cs.s1.size() + cs.s2.size();
    for (int k = 0; k <= K; ++k) CHECK(cs.chain[k].size() == base + K + k);

    // Pairwise difference sets match the definition, and every pair is a
    // forbidden ordered pattern.
    for (int k = 0; k < K; ++k)
      for (int l = k + 1; l <= K; ++l) {
        SubsetWord fwd = set_minus(cs.chain[k], cs.chain[l]);
        SubsetWord bwd = set_minus(cs.chain[l], cs.chain[k]);
        std::vector<int> want_fwd(cs.u.begin() + k, cs.u.begin() + l);
        std::sort(want_fwd.begin(), want_fwd.end());
        std::vector<int> want_bwd(cs.v.begin() + (2 * K - 2 * l),
                                  cs.v.begin() + (2 * K - 2 * k));
        std::sort(want_bwd.begin(), want_bwd.end());
        CHECK(fwd.elements() == want_fwd);
        CHECK(bwd.elements() == want_bwd);
        CHECK(pair_violates_ordered(cs.chain[k], cs.chain[l]));
      }

    // End-to-end part deltas: left loses K, right gains 2K.
    CHECK(prefix_count(cs.chain[K], m1) - prefix_count(cs.chain[0], m1) == -K);
    const int right_first = cs.chain[0].size() - prefix_count(cs.chain[0], m1);
    const int right_last = cs.chain[K].size() - prefix_count(cs.chain[K], m1);
    CHECK(right_last - right_first == 2 * K);
  }
}

TEST_CASE("chain parameter validation") {
  CHECK_THROWS_AS(sample_chain(100, 0, 0, 1), std::invalid_argument);   // not divisible
  CHECK_THROWS_AS(sample_chain(142, 0, 0, 1), std::invalid_argument);
  CHECK_THROWS_AS(sample_chain(576, 2, 0, 1), std::invalid_argument);   // index bound 1
  CHECK_THROWS_AS(sample_chain(144, 1, 0, 1), std::invalid_argument);   // p1 would hit 1
}

TEST_CASE("stats path consumes the identical stream") {
  for (std::uint64_t seed : {1ull, 9ull, 77ull}) {
    ChainSample cs = sample_chain(576, 0, 1, seed);
    std::vector<ZoneStats> stats = sample_chain_stats(576, 0, 1, seed);
    REQUIRE(stats.size() == cs.chain.size());
    for (std::size_t k = 0; k < stats.size(); ++k) {
      ZoneStats direct = zone_of(cs.chain[k]);
      CHECK(stats[k].r == direct.r);
      CHECK(stats[k].s == direct.s);
    }
  }
}

TEST_CASE("zone estimates match a manual substream replay") {
  const int n = 576, k = 1;
  const ZoneIndex z{0, 0};
  const long trials = 200;
  ZoneEstimate est = estimate_zone_prob(n, z, k, trials, 5);
  long hits = 0;
  for (long t = 0; t < trials; ++t) {
    // Replay trial t of the estimator: substream (5, t), counting stats.
    Rng rng = Rng::substream(5, static_cast<std::uint64_t>(t));
    const int m1 = n / 3, m2 = n - m1, K = 2;
    std::vector<int> u = rng.distinct_tuple(1, m1, K);
    std::vector<int> skip = u;
    std::sort(skip.begin(), skip.end());
    int c1 = 0;
    for (int e = 1; e <= m1; ++e) {
      if (std::binary_search(skip.begin(), skip.end(), e)) continue;
      if (rng.bernoulli(0.5)) ++c1;
    }
    std::vector<int> v = rng.distinct_tuple(m1 + 1, n, 2 * K);
    skip = v;
    std::sort(skip.begin(), skip.end());
    int c2 = 0;
    for (int e = m1 + 1; e <= n; ++e) {
      if (std::binary_search(skip.begin(), skip.end(), e)) continue;
      if (rng.bernoulli(0.5)) ++c2;
    }
    const long r = (K - k) + c1 - m1 / 2;
    const long s = 2 * k + c2 - m2 / 2;
    if (stats_in_zone(n, r, s, z)) ++hits;
  }
  CHECK(est.estimate == doctest::Approx(static_cast<double>(hits) / trials).epsilon(1e-12));
  CHECK(est.trials == trials);
}

TEST_CASE("zone estimate bounds and determinism") {
  ZoneEstimate a = estimate_zone_prob(576, ZoneIndex{1, 1}, 2, 20000, 11);
  ZoneEstimate b = estimate_zone_prob(576, ZoneIndex{1, 1}, 2, 20000, 11);
  CHECK(a.estimate == b.estimate);
  CHECK(a.estimate >= 0.0);
  CHECK(a.estimate <= 1.0);
  CHECK(a.std_error <= 0.004);  // <= 0.5 / sqrt(20000)
  CHECK_THROWS_AS(estimate_zone_prob(576, ZoneIndex{0, 0}, 3, 10, 0), std::invalid_argument);
  CHECK_THROWS_AS(estimate_zone_prob(576, ZoneIndex{0, 0}, 1, 0, 0), std::invalid_argument);
}

TEST_CASE("micro point probabilities equal the exhaustive joint law") {
  for (auto [p1n, p1d, p2n, p2d] :
       std::vector<std::array<long, 4>>{{1, 2, 1, 2}, {2, 3, 1, 3}}) {
    MicroChainParams mp{4, 6, 1, p1n, p1d, p2n, p2d};
    auto oracle = micro_oracle_4_6_1(p1n, p1d, p2n, p2d);
    for (int k = 0; k <= 1; ++k) {
      mpq_class total(0);
      for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << 10); ++mask) {
        SubsetWord a = SubsetWord::from_mask(10, mask);
        mpq_class mine = chain_point_probability(mp, a, k);
        auto it = oracle[k].find(mask);
        mpq_class want = (it == oracle[k].end()) ? mpq_class(0) : it->second;
        CHECK(mine == want);
        total += mine;
      }
      CHECK(total == 1);  // normalization is exact
    }
  }
}

TEST_CASE("micro sampler frequency sits within 3 SE of the exact law") {
  MicroChainParams mp{4, 6, 1, 1, 2, 1, 3};
  auto oracle = micro_oracle_4_6_1(1, 2, 1, 3);
  // Most likely value of C_1 under the exact law.
  std::uint64_t target = 0;
  mpq_class best(0);
  for (const auto& [mask, p] : oracle[1])
    if (p > best) {
      best = p;
      target = mask;
    }
  const double p = best.get_d();
  const long trials = 20000;
  long hits = 0;
  for (long t = 0; t < trials; ++t) {
    ChainSample cs = sample_micro_chain(mp, static_cast<std::uint64_t>(t));
    if (cs.chain[1].low_mask() == target) ++hits;
  }
  const double p_hat = static_cast<double>(hits) / trials;
  const double se = std::sqrt(p * (1.0 - p) / trials);
  CHECK(std::abs(p_hat - p) <= 3.0 * se);
}

TEST_CASE("micro parameter validation") {
  CHECK_THROWS_AS(sample_micro_chain(MicroChainParams{4, 6, 5, 1, 2, 1, 2}, 0),
                  std::invalid_argument);
  CHECK_THROWS_AS(sample_micro_chain(MicroChainParams{4, 6, 1, 1, 1, 1, 2}, 0),
                  std::invalid_argument);
  CHECK_THROWS_AS(sample_micro_chain(MicroChainParams{4, 6, 1, 0, 2, 1, 2}, 0),
                  std::invalid_argument);
  MicroChainParams mp{4, 6, 1, 1, 2, 1, 2};
  CHECK_THROWS_AS(chain_point_probability(mp, SubsetWord(9), 0), std::invalid_argument);
  CHECK_THROWS_AS(chain_point_probability(mp, SubsetWord(10), 2), std::invalid_argument);
}

TEST_CASE("log probability agrees with the exact law at n = 144") {
  // n = 144, i = j = 0 is the same process as micro (48, 96, 1, 1/2, 1/2).
  MicroChainParams mp{48, 96, 1, 1, 2, 1, 2};
  for (std::uint64_t seed = 0; seed < 6; ++seed) {
    ChainSample cs = sample_chain(144, 0, 0, seed);
    for (int k = 0; k <= cs.K; ++k) {
      const mpq_class exact = chain_point_probability(mp, cs.chain[k], k);
      REQUIRE(exact > 0);
      const long double expect =
          std::log(mpf_class(exact, 256).get_d());
      const long double got = chain_log_probability(144, 0, 0, cs.chain[k], k);
      CHECK(std::abs(static_cast<double>(got - expect)) < 1e-9);
    }
  }
  // Unreachable point: fewer left elements than the K - k survivors demand.
  SubsetWord none(144);
  CHECK(chain_log_probability(144, 0, 0, none, 0) ==
        -std::numeric_limits<long double>::infinity());
  CHECK(chain_point_probability(mp, SubsetWord(144), 0) == 0);
}

TEST_CASE("same-zone probability ratios stay under alpha at n = 576") {
  const int n = 576, m1 = 192, m2 = 384, K = 2;
  const long L = 24;
  Rng rng(321);
  for (int trial = 0; trial < 400; ++trial) {
    const int i = static_cast<int>(rng.bounded(3)) - 1;
    const int j = static_cast<int>(rng.bounded(3)) - 1;
    const int k = static_cast<int>(rng.bounded(K + 1));
    // Two stat pairs uniform in the zone's windows.
    long r[2], s[2];
    for (int t = 0; t < 2; ++t) {
      r[t] = 2 * i * L - L + static_cast<long>(rng.bounded(2 * L));
      s[t] = 2 * j * L - L + static_cast<long>(rng.bounded(2 * L));
    }
    long double lp[2];
    for (int t = 0; t < 2; ++t) {
      const int aL = static_cast<int>(m1 / 2 + r[t]);
      const int aR = static_cast<int>(m2 / 2 + s[t]);
      std::vector<int> elems;
      for (int e = 1; e <= aL; ++e) elems.push_back(e);
      for (int e = m1 + 1; e <= m1 + aR; ++e) elems.push_back(e);
      lp[t] = chain_log_probability(n, i, j, SubsetWord::from_elements(n, elems), k);
      CHECK(lp[t] > -std::numeric_limits<long double>::infinity());
    }
    CHECK(std::abs(static_cast<double>(lp[0] - lp[1])) <=
          static_cast<double>(alpha_log(n)));
  }
}

TEST_CASE("alpha_log inverts to n") {
  for (long n : {3L, 576L, 10002L}) {
    const long double u = alpha_log(n) / 120.0L;
    CHECK(std::abs(static_cast<double>(std::exp(u * u)) - static_cast<double>(n)) <
          1e-6 * static_cast<double>(n));
  }
  CHECK_THROWS_AS(alpha_log(1), std::invalid_argument);
}

}  // TEST_SUITE
