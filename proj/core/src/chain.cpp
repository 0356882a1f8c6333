#include "sperner/chain.hpp"

#include "sperner/lattice.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

#include "sperner/rng.hpp"

namespace sperner {

// --- zones -----------------------------------------------------------------

ZoneStats zone_of(const SubsetWord& d) {
  const int n = d.ground();
  if (n <= 0 || n % 6 != 0) throw std::invalid_argument("zone_of: ground must be divisible by 6");
  ZoneStats st;
  long left = prefix_count(d, n / 3);
  st.r = left - n / 6;
  st.s = (d.size() - left) - n / 3;
  return st;
}

int zone_index_bound(int n) {
  if (n < 2) throw std::invalid_argument("zone_index_bound: requires n >= 2");
  return static_cast<int>(std::floor(std::sqrt(std::log(static_cast<double>(n))) / 2.0));
}

bool stats_in_zone(int n, long r, long s, const ZoneIndex& z) {
  if (n <= 0 || n % 6 != 0)
    throw std::invalid_argument("stats_in_zone: ground must be divisible by 6");
  const int bound = zone_index_bound(n);
  if (std::abs(z.i) > bound || std::abs(z.j) > bound)
    throw std::invalid_argument("zone index out of range");
  const long L = isqrt_floor(n);
  const long rc = 2 * static_cast<long>(z.i) * L, sc = 2 * static_cast<long>(z.j) * L;
  return rc - L <= r && r <= rc + L - 1 && sc - L <= s && s <= sc + L - 1;
}

bool in_zone(const SubsetWord& d, const ZoneIndex& z) {
  ZoneStats st = zone_of(d);
  return stats_in_zone(d.ground(), st.r, st.s, z);
}

// --- sampling --------------------------------------------------------------

namespace {

struct FullScaleParams {
  int m1, m2, K;
  double p1, p2;
};

FullScaleParams full_scale_params(int n, int i, int j) {
  if (n < 144 || n % 6 != 0)
    throw std::invalid_argument("chain process: requires n divisible by 6 with n >= 144");
  const int bound = zone_index_bound(n);
  if (std::abs(i) > bound || std::abs(j) > bound)
    throw std::invalid_argument("zone index out of range");
  FullScaleParams p;
  p.m1 = n / 3;
  p.m2 = 2 * (n / 3);
  p.K = static_cast<int>(isqrt_floor(n) / 12);
  if (p.K < 1) throw std::invalid_argument("chain process: K < 1 at this n");
  const double rt = std::sqrt(static_cast<double>(n));
  p.p1 = 0.5 + 6.0 * i / rt;
  p.p2 = 0.5 + 3.0 * j / rt;
  if (p.p1 <= 0.0 || p.p1 >= 1.0 || p.p2 <= 0.0 || p.p2 >= 1.0)
    throw std::invalid_argument("chain process: Bernoulli rate outside (0,1)");
  return p;
}

void check_micro(const MicroChainParams& mp) {
  if (mp.m1 < 1 || mp.m2 < 1 || mp.K < 0 || mp.K > mp.m1 || 2 * mp.K > mp.m2)
    throw std::invalid_argument("micro chain: requires 0 <= K <= m1 and 2K <= m2");
  if (mp.p1_den <= 0 || mp.p1_num <= 0 || mp.p1_num >= mp.p1_den || mp.p2_den <= 0 ||
      mp.p2_num <= 0 || mp.p2_num >= mp.p2_den)
    throw std::invalid_argument("micro chain: Bernoulli ratios must lie strictly in (0,1)");
}

// One draw of (U, S1, V, S2).  The stream order is pinned — U tuple, S1 bits
// over [1, m1] ascending (skipping U), V tuple, S2 bits over [m1+1, m1+m2]
// ascending (skipping V) — and shared by the set-building and counting paths.
template <class Bern1, class Bern2, class SinkS1, class SinkS2>
void draw_once(int m1, int m2, int K, Rng& rng, Bern1&& bern1, Bern2&& bern2,
               std::vector<int>& u_out, std::vector<int>& v_out, SinkS1&& sink1,
               SinkS2&& sink2) {
  u_out = rng.distinct_tuple(1, m1, K);
  std::vector<int> sorted_u = u_out;
  std::sort(sorted_u.begin(), sorted_u.end());
  std::size_t skip = 0;
  for (int e = 1; e <= m1; ++e) {
    if (skip < sorted_u.size() && sorted_u[skip] == e) {
      ++skip;
      continue;
    }
    if (bern1(rng)) sink1(e);
  }
  v_out = rng.distinct_tuple(m1 + 1, m1 + m2, 2 * K);
  std::vector<int> sorted_v = v_out;
  std::sort(sorted_v.begin(), sorted_v.end());
  skip = 0;
  for (int e = m1 + 1; e <= m1 + m2; ++e) {
    if (skip < sorted_v.size() && sorted_v[skip] == e) {
      ++skip;
      continue;
    }
    if (bern2(rng)) sink2(e);
  }
}

template <class Bern1, class Bern2>
ChainSample build_sample(int m1, int m2, int K, Rng& rng, Bern1&& bern1, Bern2&& bern2) {
  ChainSample cs;
  cs.n = m1 + m2;
  cs.m1 = m1;
  cs.m2 = m2;
  cs.K = K;
  cs.s1 = SubsetWord(cs.n);
  cs.s2 = SubsetWord(cs.n);
  draw_once(
      m1, m2, K, rng, bern1, bern2, cs.u, cs.v, [&cs](int e) { cs.s1.insert(e); },
      [&cs](int e) { cs.s2.insert(e); });
  cs.chain.reserve(K + 1);
  SubsetWord base = set_union(cs.s1, cs.s2);
  for (int k = 0; k <= K; ++k) {
    SubsetWord ck = base;
    for (int t = k; t < K; ++t) ck.insert(cs.u[t]);          // u_{k+1}..u_K
    for (int t = 2 * K - 2 * k; t < 2 * K; ++t) ck.insert(cs.v[t]);  // last 2k of v
    cs.chain.push_back(std::move(ck));
  }
  return cs;
}

}  // namespace

ChainSample sample_chain(int n, int i, int j, std::uint64_t seed) {
  FullScaleParams p = full_scale_params(n, i, j);
  Rng rng(seed);
  const double p1 = p.p1, p2 = p.p2;
  ChainSample cs = build_sample(
      p.m1, p.m2, p.K, rng, [p1](Rng& r) { return r.bernoulli(p1); },
      [p2](Rng& r) { return r.bernoulli(p2); });
  cs.seed = seed;
  return cs;
}

ChainSample sample_micro_chain(const MicroChainParams& params, std::uint64_t seed) {
  check_micro(params);
  Rng rng(seed);
  const auto& mp = params;
  ChainSample cs = build_sample(
      mp.m1, mp.m2, mp.K, rng,
      [&mp](Rng& r) {
        return r.bernoulli_ratio(static_cast<std::uint64_t>(mp.p1_num),
                                 static_cast<std::uint64_t>(mp.p1_den));
      },
      [&mp](Rng& r) {
        return r.bernoulli_ratio(static_cast<std::uint64_t>(mp.p2_num),
                                 static_cast<std::uint64_t>(mp.p2_den));
      });
  cs.seed = seed;
  return cs;
}

namespace {

// Counting-only draw with the identical stream; returns (|S1|, |S2|).
std::pair<int, int> draw_counts(const FullScaleParams& p, Rng& rng) {
  int c1 = 0, c2 = 0;
  std::vector<int> u, v;
  const double p1 = p.p1, p2 = p.p2;
  draw_once(
      p.m1, p.m2, p.K, rng, [p1](Rng& r) { return r.bernoulli(p1); },
      [p2](Rng& r) { return r.bernoulli(p2); }, u, v, [&c1](int) { ++c1; },
      [&c2](int) { ++c2; });
  return {c1, c2};
}

}  // namespace

std::vector<ZoneStats> sample_chain_stats(int n, int i, int j, std::uint64_t seed) {
  FullScaleParams p = full_scale_params(n, i, j);
  Rng rng(seed);
  auto [c1, c2] = draw_counts(p, rng);
  std::vector<ZoneStats> stats(p.K + 1);
  for (int k = 0; k <= p.K; ++k) {
    stats[k].r = (p.K - k) + c1 - p.m1 / 2;
    stats[k].s = 2 * k + c2 - p.m2 / 2;
  }
  return stats;
}

ZoneEstimate estimate_zone_prob(int n, const ZoneIndex& z, int k, long trials,
                                std::uint64_t seed) {
  FullScaleParams p = full_scale_params(n, z.i, z.j);
  if (k < 0 || k > p.K) throw std::invalid_argument("estimate_zone_prob: k outside [0, K]");
  if (trials < 1) throw std::invalid_argument("estimate_zone_prob: trials must be positive");
  long hits = 0;
  for (long t = 0; t < trials; ++t) {
    Rng rng = Rng::substream(seed, static_cast<std::uint64_t>(t));
    auto [c1, c2] = draw_counts(p, rng);
    long r = (p.K - k) + c1 - p.m1 / 2;
    long s = 2 * k + c2 - p.m2 / 2;
    if (stats_in_zone(n, r, s, z)) ++hits;
  }
  ZoneEstimate est;
  est.trials = trials;
  est.estimate = static_cast<double>(hits) / static_cast<double>(trials);
  est.std_error = std::sqrt(est.estimate * (1.0 - est.estimate) / static_cast<double>(trials));
  return est;
}

// --- exact probabilities ---------------------------------------------------

namespace {

mpq_class pow_ratio(long num, long den, long e) {
  mpz_class n_pow, d_pow;
  mpz_ui_pow_ui(n_pow.get_mpz_t(), static_cast<unsigned long>(num),
                static_cast<unsigned long>(e));
  mpz_ui_pow_ui(d_pow.get_mpz_t(), static_cast<unsigned long>(den),
                static_cast<unsigned long>(e));
  mpq_class q(n_pow);
  q /= mpq_class(d_pow);
  return q;
}

}  // namespace

mpq_class chain_point_probability(const MicroChainParams& params, const SubsetWord& a, int k) {
  check_micro(params);
  const int m1 = params.m1, m2 = params.m2, K = params.K;
  if (a.ground() != m1 + m2) throw std::invalid_argument("ground-set mismatch");
  if (k < 0 || k > K) throw std::invalid_argument("chain_point_probability: k outside [0, K]");

  const int aL = prefix_count(a, m1);
  const int aR = a.size() - aL;
  // Feasibility of C_k = A: the K-k survivors of U fit inside the left part,
  // the k removed ones outside it; the 2k kept v's fit inside the right part,
  // the 2K-2k discarded ones outside it.
  if (K - k > aL || k > m1 - aL || 2 * k > aR || 2 * K - 2 * k > m2 - aR) return mpq_class(0);

  mpq_class left(binomial(m1 - aL, k) * binomial(aL, K - k));
  left /= mpq_class(binomial(m1, K) * binomial(K, k));
  left *= pow_ratio(params.p1_num, params.p1_den, aL - (K - k));
  left *= pow_ratio(params.p1_den - params.p1_num, params.p1_den, m1 - aL - k);

  mpq_class right(binomial(m2 - aR, 2 * K - 2 * k) * binomial(aR, 2 * k));
  right /= mpq_class(binomial(m2, 2 * K) * binomial(2 * K, 2 * k));
  right *= pow_ratio(params.p2_num, params.p2_den, aR - 2 * k);
  right *= pow_ratio(params.p2_den - params.p2_num, params.p2_den, m2 - aR - 2 * K + 2 * k);

  mpq_class out = left * right;
  out.canonicalize();
  return out;
}

namespace {

long double lbinom(long n, long k) {
  if (k < 0 || k > n) return -std::numeric_limits<long double>::infinity();
  return std::lgamma(static_cast<long double>(n + 1)) -
         std::lgamma(static_cast<long double>(k + 1)) -
         std::lgamma(static_cast<long double>(n - k + 1));
}

}  // namespace

long double chain_log_probability(int n, int i, int j, const SubsetWord& a, int k) {
  FullScaleParams p = full_scale_params(n, i, j);
  if (a.ground() != n) throw std::invalid_argument("ground-set mismatch");
  if (k < 0 || k > p.K) throw std::invalid_argument("chain_log_probability: k outside [0, K]");
  const long aL = prefix_count(a, p.m1);
  const long aR = a.size() - aL;
  const long K = p.K;
  if (K - k > aL || k > p.m1 - aL || 2 * k > aR || 2 * K - 2 * k > p.m2 - aR)
    return -std::numeric_limits<long double>::infinity();

  const long double lp1 = std::log(static_cast<long double>(p.p1));
  const long double lq1 = std::log(1.0L - static_cast<long double>(p.p1));
  const long double lp2 = std::log(static_cast<long double>(p.p2));
  const long double lq2 = std::log(1.0L - static_cast<long double>(p.p2));

  long double left = lbinom(p.m1 - aL, k) + lbinom(aL, K - k) - lbinom(p.m1, K) -
                     lbinom(K, k) + (aL - (K - k)) * lp1 + (p.m1 - aL - k) * lq1;
  long double right = lbinom(p.m2 - aR, 2 * K - 2 * k) + lbinom(aR, 2 * k) -
                      lbinom(p.m2, 2 * K) - lbinom(2 * K, 2 * k) + (aR - 2 * k) * lp2 +
                      (p.m2 - aR - 2 * K + 2 * k) * lq2;
  return left + right;
}

long double alpha_log(long n) {
  if (n < 2) throw std::invalid_argument("alpha_log: requires n >= 2");
  return 120.0L * std::sqrt(std::log(static_cast<long double>(n)));
}

}  // namespace sperner
