#pragma once

#include <bit>
#include <cstdint>
#include <vector>

namespace sperner {

// Minimal fixed-size bitset over a 0-based universe, used for adjacency rows
// and candidate sets in the exact searches.
struct BitRow {
  explicit BitRow(std::size_t bits = 0) : nbits(bits), w((bits + 63) / 64, 0) {}

  std::size_t nbits;
  std::vector<std::uint64_t> w;

  bool test(std::size_t i) const { return (w[i >> 6] >> (i & 63)) & 1u; }
  void set(std::size_t i) { w[i >> 6] |= std::uint64_t{1} << (i & 63); }
  void reset(std::size_t i) { w[i >> 6] &= ~(std::uint64_t{1} << (i & 63)); }

  std::size_t count() const {
    std::size_t c = 0;
    for (std::uint64_t x : w) c += std::popcount(x);
    return c;
  }
  bool any() const {
    for (std::uint64_t x : w)
      if (x) return true;
    return false;
  }

  void and_assign(const BitRow& o) {
    for (std::size_t i = 0; i < w.size(); ++i) w[i] &= o.w[i];
  }
  void andnot_assign(const BitRow& o) {
    for (std::size_t i = 0; i < w.size(); ++i) w[i] &= ~o.w[i];
  }
  void or_assign(const BitRow& o) {
    for (std::size_t i = 0; i < w.size(); ++i) w[i] |= o.w[i];
  }

  // True iff this is a subset of o.
  bool subset_of(const BitRow& o) const {
    for (std::size_t i = 0; i < w.size(); ++i)
      if (w[i] & ~o.w[i]) return false;
    return true;
  }

  bool intersects(const BitRow& o) const {
    for (std::size_t i = 0; i < w.size(); ++i)
      if (w[i] & o.w[i]) return true;
    return false;
  }

  // First set bit at index >= from; npos when none.
  static constexpr std::size_t npos = ~std::size_t{0};
  std::size_t find_next(std::size_t from) const {
    if (from >= nbits) return npos;
    std::size_t wi = from >> 6;
    std::uint64_t cur = w[wi] & (~std::uint64_t{0} << (from & 63));
    for (;;) {
      if (cur) return (wi << 6) + static_cast<std::size_t>(std::countr_zero(cur));
      if (++wi >= w.size()) return npos;
      cur = w[wi];
    }
  }
  std::size_t find_first() const { return find_next(0); }
};

}  // namespace sperner
