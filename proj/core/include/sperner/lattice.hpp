#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <iterator>

#include "sperner/subset.hpp"

namespace sperner {

// Arbitrary-precision nonnegative counts (family sizes, weights, bounds).
using BigCount = mpz_class;

// binomial(n, k), exact; 0 when k < 0 or k > n.  Valid for n up to 1e6.
BigCount binomial(long n, long k);

// Colex enumeration of the k-subsets of [n].  Supported for n <= 64 (the
// enumeration is intended for small ground sets; materializing a layer of a
// larger cube is never needed here).  The stream starts at {1,...,k} and
// visits all binomial(n,k) subsets in strictly increasing colex order.
class LayerRange {
 public:
  LayerRange(int n, int k);

  class iterator {
   public:
    using value_type = SubsetWord;
    using difference_type = std::ptrdiff_t;
    using iterator_category = std::input_iterator_tag;

    SubsetWord operator*() const { return SubsetWord::from_mask(n_, mask_); }
    iterator& operator++();
    iterator operator++(int) {
      iterator t = *this;
      ++*this;
      return t;
    }
    bool operator==(const iterator& o) const { return mask_ == o.mask_ && done_ == o.done_; }
    bool operator!=(const iterator& o) const { return !(*this == o); }

   private:
    friend class LayerRange;
    iterator(int n, std::uint64_t mask, bool done) : n_(n), mask_(mask), done_(done) {}
    int n_;
    std::uint64_t mask_;
    bool done_;
  };

  iterator begin() const;
  iterator end() const;

 private:
  int n_, k_;
};

inline LayerRange layer_iter(int n, int k) { return LayerRange(n, k); }

// Largest r with r*r <= n.
long isqrt_floor(long n);

}  // namespace sperner
