#pragma once

#include <optional>
#include <vector>

#include "sperner/subset.hpp"

namespace sperner {

// Base-8 words over [m] versus subsets of [3m]: digit i of the word is
// y_i = x_i + 2*x_{i+m} + 4*x_{i+2m}, a bijection P[3m] <-> {0..7}^m.
std::vector<int> dhj_encode(const SubsetWord& x, int m);
SubsetWord dhj_decode(int m, const std::vector<int>& word);

// A combinatorial line template over {0..k-1}^m: fixed digits plus at least
// one active coordinate (kStar) that all move together through 0..k-1.
struct DhjLine {
  static constexpr int kStar = -1;
  std::vector<int> tmpl;  // size m; entries in {0..k-1} or kStar

  std::vector<int> active() const;  // 1-based active coordinates, ascending
};

// The k points of the line, in t = 0..k-1 order.
std::vector<std::vector<int>> line_points(const DhjLine& line, int k);

// First combinatorial line fully inside S, scanning all (k+1)^m - k^m
// templates in lexicographic order (symbols 0 < 1 < ... < k-1 < *).
std::optional<DhjLine> find_combinatorial_line(const std::vector<std::vector<int>>& s, int k,
                                               int m);

// The forbidden pair carried by a line over {0..7}^m: A decodes the t = 1
// point, B the t = 6 point.  check reports whether (A, B) matches the
// ordered pattern |B\A| = 2|A\B| with every element of A\B below every
// element of B\A (it always does; the flag is re-derived, not assumed).
struct DhjForbiddenPair {
  SubsetWord a, b;
  bool check = false;
};
DhjForbiddenPair dhj_forbidden_pair(const DhjLine& line, int m);

}  // namespace sperner
