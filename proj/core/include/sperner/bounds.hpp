#pragma once

#include <optional>
#include <string>

#include "sperner/lattice.hpp"

namespace sperner {

// max{(1 - 1/1600)^t, e^{-l^2/(16t)}} * 4^t, evaluated in log domain.
// Applicable for 0 <= l <= t/3 (error otherwise); this is the mass bound for
// cross-pairs avoiding one fixed intersection size l on a ground set of
// size t.
struct FrBound {
  long double log_e = 0;   // natural log of the bound
  double log10_value = 0;
  double mantissa = 0;     // bound = mantissa * 10^exponent10, 1 <= mantissa < 10
  long exponent10 = 0;
  std::string branch;      // which argument of the max won
};

FrBound fr_bound(long t, long l);

// Exact micro analogue on [s], s <= 4: the maximum over all A ⊆ P[s] of
// |A| * |{b ⊆ [s] : |a ∩ b| != l for every a in A}|, by full enumeration of
// the 2^(2^s) choices of A.  Requires l >= 0; for l > s the constraint is
// vacuous and the value is 4^s.
long fr_brute(int s, int l);

// Headline size bounds, with a vacuity flag (bound >= 2^n carries no
// information).  Values too large for exact integers are reported in log2.
struct PaperBound {
  std::optional<BigCount> value;  // exact when available (thm1)
  double log2_value = 0;
  bool vacuous = false;
};

// (q - p) * C(n, floor(n/2)): the tilted extremal bound.
PaperBound paper_bound_thm1(int n, int p, int q);

// w + 2^200 * 2^n / n^(2/3): the stick-out refinement over a system of
// weight w.  Informative only at astronomical n (vacuous whenever
// n^(2/3) <= 2^200, i.e. for every n below 2^300).
PaperBound paper_bound_thm2(long n, const BigCount& w);

// 100 * e^(120*sqrt(ln n)) * 2^n / sqrt(n): the ordered variant bound.
PaperBound paper_bound_thm3(long n);

// The thm3 vacuity comparison ln(100) + 120*sqrt(ln n) >= (1/2) ln n,
// parameterized on ln n so the crossing (near ln n ~ 57600) is testable.
bool thm3_vacuous_from_ln(long double ln_n);

}  // namespace sperner
