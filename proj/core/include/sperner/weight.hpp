#pragma once

#include <vector>

#include "sperner/lattice.hpp"
#include "sperner/restrictions.hpp"

namespace sperner {

struct WeightResult {
  BigCount w;               // max over independent layer sets of sum C(n, i)
  std::vector<int> layers;  // the certificate I, ascending
};

// w(G): the extremal mass reachable by stacking full layers, i.e. the
// maximum of sum_{i in I} C(n,i) over independent sets I of the layer graph.
// Exact branch and bound (vertices in descending binomial weight order,
// sum-of-remaining-weights bound); ties between optimal certificates are
// broken toward the lexicographically smallest I in ascending layer order.
WeightResult weight(const RestrictionSystem& sys);

}  // namespace sperner
