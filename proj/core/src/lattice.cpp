#include "sperner/lattice.hpp"

#include <cmath>
#include <stdexcept>

namespace sperner {

BigCount binomial(long n, long k) {
  if (n < 0) throw std::invalid_argument("binomial: negative n");
  if (k < 0 || k > n) return 0;
  BigCount r;
  mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
  return r;
}

LayerRange::LayerRange(int n, int k) : n_(n), k_(k) {
  if (n < 0 || k < 0) throw std::invalid_argument("layer_iter: negative argument");
  if (n > 64) throw std::invalid_argument("layer_iter: ground sets above 64 are not enumerable");
}

LayerRange::iterator LayerRange::begin() const {
  if (k_ > n_) return end();
  std::uint64_t first = (k_ == 64) ? ~std::uint64_t{0} : ((std::uint64_t{1} << k_) - 1);
  return iterator(n_, first, false);
}

LayerRange::iterator LayerRange::end() const { return iterator(n_, 0, true); }

LayerRange::iterator& LayerRange::iterator::operator++() {
  // Gosper's hack: next-larger word with the same popcount.  Numeric order on
  // characteristic words is exactly colex order on the subsets.
  if (done_) return *this;
  if (mask_ == 0) {  // the single k=0 subset
    done_ = true;
    mask_ = 0;
    return *this;
  }
  std::uint64_t c = mask_ & -mask_;
  std::uint64_t r = mask_ + c;
  std::uint64_t next = (((r ^ mask_) >> 2) / c) | r;
  bool overflow = (r < mask_) ||  // carried off the top
                  (n_ < 64 && (next >> n_) != 0);
  if (overflow) {
    done_ = true;
    mask_ = 0;
  } else {
    mask_ = next;
  }
  return *this;
}

long isqrt_floor(long n) {
  if (n < 0) throw std::invalid_argument("isqrt_floor: negative argument");
  long r = static_cast<long>(std::sqrt(static_cast<double>(n)));
  while (r > 0 && r * r > n) --r;
  while ((r + 1) * (r + 1) <= n) ++r;
  return r;
}

}  // namespace sperner
