#pragma once

#include <cstdint>
#include <random>
#include <vector>

namespace sperner {

// Deterministic randomness for every sampling routine in the library.
//
// std::mt19937_64 output is pinned by the standard, and all derived draws
// below (bounded ints, Bernoulli, tuple sampling) are implemented here rather
// than via std::*_distribution, whose algorithms are implementation-defined.
// Hence a (seed, stream) pair yields byte-identical samples on any platform.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : gen_(mix(seed)) {}

  // Substream r of a master seed; used so that trial r of a Monte Carlo run
  // is independent of execution order.
  static Rng substream(std::uint64_t seed, std::uint64_t stream) {
    return Rng(mix(seed) ^ mix(stream * 0x9e3779b97f4a7c15ull + 0x2545f4914f6cdd1dull));
  }

  std::uint64_t next_u64() { return gen_(); }

  // Uniform integer in [0, m); m >= 1.  Rejection sampling, bias-free.
  std::uint64_t bounded(std::uint64_t m) {
    std::uint64_t threshold = (0 - m) % m;  // 2^64 mod m
    for (;;) {
      std::uint64_t r = gen_();
      if (r >= threshold) return r % m;
    }
  }

  // Bernoulli(p) from the top 53 bits; deterministic given the double p.
  bool bernoulli(double p) {
    if (p <= 0.0) { gen_(); return false; }
    if (p >= 1.0) { gen_(); return true; }
    const double r = static_cast<double>(gen_() >> 11) * 0x1.0p-53;
    return r < p;
  }

  // Exact Bernoulli(num/den) for rational probabilities.
  bool bernoulli_ratio(std::uint64_t num, std::uint64_t den) {
    return bounded(den) < num;
  }

  // Uniform ordered k-tuple of distinct elements of {lo, ..., hi}; the tuple
  // is a uniform k-subset together with a uniform ordering of it.
  std::vector<int> distinct_tuple(int lo, int hi, int k) {
    std::vector<int> out;
    out.reserve(k);
    for (int t = 0; t < k; ++t) {
      for (;;) {
        int cand = lo + static_cast<int>(bounded(static_cast<std::uint64_t>(hi - lo + 1)));
        bool dup = false;
        for (int prev : out)
          if (prev == cand) { dup = true; break; }
        if (!dup) { out.push_back(cand); break; }
      }
    }
    return out;
  }

 private:
  static std::uint64_t mix(std::uint64_t x) {
    // splitmix64 finalizer
    x += 0x9e3779b97f4a7c15ull;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ull;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebull;
    return x ^ (x >> 31);
  }

  std::mt19937_64 gen_;
};

}  // namespace sperner
