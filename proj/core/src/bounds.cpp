#include "sperner/bounds.hpp"

#include <bit>
#include <cmath>
#include <cstdint>
#include <stdexcept>
#include <vector>

namespace sperner {

namespace {

// Fills the rendering fields of a bound from its natural log.
void render(FrBound& b) {
  const long double log10v = b.log_e / std::log(10.0L);
  b.log10_value = static_cast<double>(log10v);
  const long double e10 = std::floor(log10v);
  b.exponent10 = static_cast<long>(e10);
  b.mantissa = static_cast<double>(std::pow(10.0L, log10v - e10));
  if (b.mantissa >= 10.0) {  // guard the boundary of the floor
    b.mantissa /= 10.0;
    b.exponent10 += 1;
  }
}

}  // namespace

FrBound fr_bound(long t, long l) {
  if (t < 1) throw std::invalid_argument("fr_bound: requires t >= 1");
  if (l < 0 || 3 * l > t)
    throw std::invalid_argument("fr_bound: bound not applicable (requires 0 <= l <= t/3)");
  const long double branch_eps = t * std::log(1.0L - 1.0L / 1600.0L);
  const long double branch_gauss =
      -static_cast<long double>(l) * l / (16.0L * static_cast<long double>(t));
  FrBound b;
  if (branch_eps >= branch_gauss) {
    b.log_e = branch_eps;
    b.branch = "(1-1/1600)^t";
  } else {
    b.log_e = branch_gauss;
    b.branch = "exp(-l^2/(16t))";
  }
  b.log_e += t * std::log(4.0L);
  render(b);
  return b;
}

long fr_brute(int s, int l) {
  if (s < 1 || s > 4) throw std::invalid_argument("fr_brute: requires 1 <= s <= 4");
  if (l < 0) throw std::invalid_argument("fr_brute: requires l >= 0");
  const int pts = 1 << s;
  // meet[a] = bitset over b of "|a ∩ b| == l".
  std::vector<std::uint32_t> hits(pts, 0);
  for (int a = 0; a < pts; ++a)
    for (int b = 0; b < pts; ++b)
      if (std::popcount(static_cast<unsigned>(a & b)) == l) hits[a] |= 1u << b;
  long best = 0;
  const std::uint64_t families = std::uint64_t{1} << pts;
  for (std::uint64_t fam = 0; fam < families; ++fam) {
    std::uint32_t blocked = 0;
    for (std::uint64_t rest = fam; rest; rest &= rest - 1)
      blocked |= hits[std::countr_zero(rest)];
    const long allowed = pts - std::popcount(blocked);
    const long prod = static_cast<long>(std::popcount(fam)) * allowed;
    if (prod > best) best = prod;
  }
  return best;
}

namespace {

double log2_of(const BigCount& v) {
  if (v <= 0) throw std::invalid_argument("log2_of: requires a positive count");
  long exp2 = 0;
  const double mant = mpz_get_d_2exp(&exp2, v.get_mpz_t());
  return static_cast<double>(exp2) + std::log2(mant);
}

}  // namespace

PaperBound paper_bound_thm1(int n, int p, int q) {
  if (n < 1) throw std::invalid_argument("paper_bound_thm1: requires n >= 1");
  if (q <= p || p < 0) throw std::invalid_argument("paper_bound_thm1: requires q > p >= 0");
  PaperBound b;
  BigCount value = BigCount(q - p) * binomial(n, n / 2);
  b.log2_value = log2_of(value);
  BigCount full = BigCount(1) << n;
  b.vacuous = value >= full;
  b.value = std::move(value);
  return b;
}

PaperBound paper_bound_thm2(long n, const BigCount& w) {
  if (n < 1) throw std::invalid_argument("paper_bound_thm2: requires n >= 1");
  if (w < 0) throw std::invalid_argument("paper_bound_thm2: negative weight");
  PaperBound b;
  // log2(w + 2^200 * 2^n / n^(2/3)) via log-sum-exp in base 2.
  const double log2_tail =
      200.0 + static_cast<double>(n) - (2.0 / 3.0) * std::log2(static_cast<double>(n));
  double combined;
  if (w == 0) {
    combined = log2_tail;
  } else {
    const double log2_w = log2_of(w);
    const double hi = std::max(log2_w, log2_tail), lo = std::min(log2_w, log2_tail);
    combined = hi + std::log2(1.0 + std::exp2(lo - hi));
  }
  b.log2_value = combined;
  b.vacuous = combined >= static_cast<double>(n);
  return b;
}

bool thm3_vacuous_from_ln(long double ln_n) {
  return std::log(100.0L) + 120.0L * std::sqrt(ln_n) >= 0.5L * ln_n;
}

PaperBound paper_bound_thm3(long n) {
  if (n < 2) throw std::invalid_argument("paper_bound_thm3: requires n >= 2");
  PaperBound b;
  const long double ln_n = std::log(static_cast<long double>(n));
  const long double log2e = 1.0L / std::log(2.0L);
  b.log2_value = static_cast<double>(std::log2(100.0L) + 120.0L * std::sqrt(ln_n) * log2e +
                                     static_cast<long double>(n) - 0.5L * std::log2(static_cast<long double>(n)));
  b.vacuous = thm3_vacuous_from_ln(ln_n);
  return b;
}

}  // namespace sperner
