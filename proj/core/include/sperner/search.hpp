#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "sperner/bitrow.hpp"
#include "sperner/family.hpp"
#include "sperner/restrictions.hpp"

namespace sperner {

// The conflict graph over all of P[n]: vertices are subsets in
// (layer, colex) order; an edge joins every pair that violates the condition
// in either orientation.  A maximum family is a maximum independent set.
struct ViolationGraph {
  int n = 0;
  std::vector<std::uint32_t> vertex_mask;  // subset bits, element e at bit e-1
  std::vector<BitRow> adj;
  std::size_t edge_count = 0;

  std::size_t vertices() const { return vertex_mask.size(); }
};

// Default cap n <= 14; callers may raise max_n (up to 20) knowingly.
ViolationGraph build_violation_graph(const PairCondition& cond, int n, int max_n = 14);

struct ExtremalResult {
  long size = 0;
  bool optimal = false;
  std::uint64_t nodes = 0;
  long elapsed_ms = 0;
  SetFamily certificate;
};

// Exact maximum independent set on a violation graph.  Branch and bound with
// a greedy clique-cover upper bound, branching on the highest-degree
// candidate (canonical tie-breaks), seeded by a greedy incumbent.  A budget
// of >= 0 milliseconds bounds the search; on expiry the best family found so
// far is returned with optimal = false.  budget_ms = nullopt means no limit.
ExtremalResult max_family(const PairCondition& cond, int n,
                          std::optional<long> budget_ms = std::nullopt, int max_n = 14);

// Ground truth for tiny n: scans all 2^(2^n) families with the pairwise
// checker and returns the exact maximum size.  Requires n <= 4.
long exhaustive_oracle(const PairCondition& cond, int n);

}  // namespace sperner
