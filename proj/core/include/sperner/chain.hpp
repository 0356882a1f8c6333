#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <vector>

#include "sperner/subset.hpp"

namespace sperner {

// --- Zones -----------------------------------------------------------------
//
// For n divisible by 6, a set D over [n] has statistics
//   r_D = |D ∩ [n/3]|       - n/6
//   s_D = |D ∩ [n/3+1, n]|  - n/3.
// With L = floor(sqrt(n)), zone (i, j) collects the sets whose statistics
// fall in the half-open integer windows
//   2iL - L <= r_D <= 2iL + L - 1   and   2jL - L <= s_D <= 2jL + L - 1,
// so consecutive windows tile the line exactly.  Zone indices are limited to
// |i|, |j| <= floor(sqrt(ln n) / 2).

struct ZoneIndex {
  int i = 0;
  int j = 0;
};

struct ZoneStats {
  long r = 0;
  long s = 0;
};

ZoneStats zone_of(const SubsetWord& d);      // requires ground divisible by 6
int zone_index_bound(int n);                 // floor(sqrt(ln n) / 2)
bool in_zone(const SubsetWord& d, const ZoneIndex& z);
bool stats_in_zone(int n, long r, long s, const ZoneIndex& z);

// --- The random chain ------------------------------------------------------
//
// Parameters for zone (i, j) of the cube on [n] (n divisible by 6):
//   K = floor(sqrt(n)/12),
//   U  uniform K-subset of [n/3],          S1 ~ Bernoulli(p1) off U,
//   V  uniform 2K-subset of [n/3+1, n],    S2 ~ Bernoulli(p2) off V,
//   p1 = 1/2 + 6i/sqrt(n),  p2 = 1/2 + 3j/sqrt(n),
// with uniform orderings u_1..u_K of U and v_1..v_2K of V.  The chain is
//   C_k = (U \ {u_1..u_k}) ∪ S1 ∪ {v_{2K-2k+1}..v_{2K}} ∪ S2,  k = 0..K,
// so C_k \ C_l = {u_{k+1},..,u_l} and C_l \ C_k = {v_{2K-2l+1},..,v_{2K-2k}}
// for k < l: every pair of the chain is a forbidden 1:2 ordered pattern.

struct ChainSample {
  int n = 0;  // ground size (m1 + m2)
  int m1 = 0, m2 = 0, K = 0;
  std::uint64_t seed = 0;  // the seed this sample was drawn from
  std::vector<int> u;  // ordered K-tuple in [1, m1]
  std::vector<int> v;  // ordered 2K-tuple in [m1+1, m1+m2]
  SubsetWord s1, s2;
  std::vector<SubsetWord> chain;  // C_0..C_K
};

// Scaled-down process with explicit parameters and exact rational Bernoulli
// probabilities, small enough for exhaustive enumeration.
struct MicroChainParams {
  int m1 = 0, m2 = 0, K = 0;
  long p1_num = 1, p1_den = 2;
  long p2_num = 1, p2_den = 2;
};

ChainSample sample_chain(int n, int i, int j, std::uint64_t seed);
ChainSample sample_micro_chain(const MicroChainParams& params, std::uint64_t seed);

// Per-k zone statistics of one full-scale chain draw, consuming the exact
// random stream of sample_chain for the same substream (no sets built).
std::vector<ZoneStats> sample_chain_stats(int n, int i, int j, std::uint64_t seed);

struct ZoneEstimate {
  double estimate = 0.0;
  double std_error = 0.0;
  long trials = 0;
};

// Monte Carlo frequency of in_zone(C_k, z) over independent chain draws;
// trial t uses the substream (seed, t), so the estimate does not depend on
// execution order.
ZoneEstimate estimate_zone_prob(int n, const ZoneIndex& z, int k, long trials,
                                std::uint64_t seed);

// Exact P(C_k = A) for the micro process, from the closed form
//   [C(m1-aL, k) C(aL, K-k) / (C(m1, K) C(K, k))]
//     * p1^(aL-K+k) (1-p1)^(m1-aL-k)
//   * [C(m2-aR, 2K-2k) C(aR, 2k) / (C(m2, 2K) C(2K, 2k))]
//     * p2^(aR-2k) (1-p2)^(m2-aR-2K+2k)
// with aL = |A ∩ [m1]|, aR = |A ∩ [m1+1, m1+m2]| (hypergeometric placement
// of the ordered tuples times the Bernoulli mass of S1, S2).
mpq_class chain_point_probability(const MicroChainParams& params, const SubsetWord& a, int k);

// ln P(C_k = A) for the full-scale process in zone (i, j); -infinity when
// the point is unreachable.
long double chain_log_probability(int n, int i, int j, const SubsetWord& a, int k);

// ln alpha(n) = 120 * sqrt(ln n): same-zone points of the same chain index
// have probability ratios bounded by alpha(n).
long double alpha_log(long n);

}  // namespace sperner
