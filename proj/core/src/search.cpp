#include "sperner/search.hpp"

#include <algorithm>
#include <bit>
#include <chrono>
#include <numeric>
#include <stdexcept>

namespace sperner {

namespace {

// All subsets of [n] as masks, sorted by (popcount, numeric) — numeric order
// on masks is colex order within a layer.
std::vector<std::uint32_t> canonical_vertices(int n) {
  std::vector<std::uint32_t> masks(std::size_t{1} << n);
  std::iota(masks.begin(), masks.end(), 0u);
  std::stable_sort(masks.begin(), masks.end(), [](std::uint32_t a, std::uint32_t b) {
    int pa = std::popcount(a), pb = std::popcount(b);
    return pa != pb ? pa < pb : a < b;
  });
  return masks;
}

}  // namespace

ViolationGraph build_violation_graph(const PairCondition& cond, int n, int max_n) {
  if (max_n > 20) throw std::invalid_argument("build_violation_graph: max_n capped at 20");
  if (n < 0 || n > max_n)
    throw std::invalid_argument("build_violation_graph: n exceeds the configured cap");
  if (condition_ground(cond) != n) throw std::invalid_argument("ground-set mismatch");

  ViolationGraph g;
  g.n = n;
  g.vertex_mask = canonical_vertices(n);
  const std::size_t v = g.vertex_mask.size();
  g.adj.assign(v, BitRow(v));

  PairChecker checker(cond);
  std::vector<SubsetWord> verts;
  verts.reserve(v);
  for (std::uint32_t m : g.vertex_mask) verts.push_back(SubsetWord::from_mask(n, m));

  for (std::size_t a = 0; a < v; ++a) {
    for (std::size_t b = a + 1; b < v; ++b) {
      if (checker.violates_unordered(verts[a], verts[b])) {
        g.adj[a].set(b);
        g.adj[b].set(a);
        ++g.edge_count;
      }
    }
  }
  return g;
}

namespace {

struct MisSearch {
  const ViolationGraph& g;
  const std::vector<int>& order;  // descending degree, ties by vertex index
  std::chrono::steady_clock::time_point deadline;
  bool has_deadline = false;
  bool expired = false;
  std::uint64_t nodes = 0;
  long best = -1;
  std::vector<int> best_set;
  std::vector<int> chosen;
  std::vector<BitRow> cover_scratch;

  // Greedy clique cover of cand: each clique contributes at most one vertex
  // to any independent set, so the number of cliques bounds the MIS size.
  long clique_cover_ub(const BitRow& cand) {
    cover_scratch.clear();
    long cliques = 0;
    for (std::size_t u = cand.find_first(); u != BitRow::npos; u = cand.find_next(u + 1)) {
      bool placed = false;
      for (auto& members : cover_scratch) {
        if (members.subset_of(g.adj[u])) {  // u adjacent to the whole clique
          members.set(u);
          placed = true;
          break;
        }
      }
      if (!placed) {
        cover_scratch.emplace_back(g.vertices());
        cover_scratch.back().set(u);
        ++cliques;
      }
    }
    return cliques;
  }

  bool out_of_time() {
    if (!has_deadline) return false;
    if ((nodes & 1023) == 0 && std::chrono::steady_clock::now() >= deadline) expired = true;
    return expired;
  }

  void record_if_better() {
    if (static_cast<long>(chosen.size()) > best) {
      best = static_cast<long>(chosen.size());
      best_set = chosen;
    }
  }

  void rec(BitRow cand) {
    ++nodes;
    if (out_of_time()) {
      record_if_better();
      return;
    }
    if (!cand.any()) {
      record_if_better();
      return;
    }
    if (static_cast<long>(chosen.size()) + clique_cover_ub(cand) <= best) return;
    int v = -1;
    for (int u : order)
      if (cand.test(u)) { v = u; break; }
    // include v
    {
      BitRow c2 = cand;
      c2.reset(v);
      c2.andnot_assign(g.adj[v]);
      chosen.push_back(v);
      rec(std::move(c2));
      chosen.pop_back();
      if (expired) { record_if_better(); return; }
    }
    // exclude v
    cand.reset(v);
    rec(std::move(cand));
  }
};

}  // namespace

ExtremalResult max_family(const PairCondition& cond, int n, std::optional<long> budget_ms,
                          int max_n) {
  const auto t0 = std::chrono::steady_clock::now();
  ViolationGraph g = build_violation_graph(cond, n, max_n);
  const std::size_t v = g.vertices();

  std::vector<long> degree(v);
  for (std::size_t u = 0; u < v; ++u) degree[u] = static_cast<long>(g.adj[u].count());
  std::vector<int> order(v);
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(),
                   [&degree](int a, int b) { return degree[a] > degree[b]; });

  MisSearch search{g, order};
  if (budget_ms) {
    search.has_deadline = true;
    search.deadline = t0 + std::chrono::milliseconds(*budget_ms);
  }

  // Greedy incumbent along the static order.
  {
    BitRow cand(v);
    for (std::size_t u = 0; u < v; ++u) cand.set(u);
    std::vector<int> greedy;
    for (int u : order) {
      if (!cand.test(u)) continue;
      greedy.push_back(u);
      cand.reset(u);
      cand.andnot_assign(g.adj[u]);
    }
    search.best = static_cast<long>(greedy.size());
    search.best_set = std::move(greedy);
  }

  BitRow all(v);
  for (std::size_t u = 0; u < v; ++u) all.set(u);
  search.rec(std::move(all));

  ExtremalResult res;
  res.size = search.best;
  res.optimal = !search.expired;
  res.nodes = search.nodes;
  std::vector<SubsetWord> members;
  members.reserve(search.best_set.size());
  for (int u : search.best_set) members.push_back(SubsetWord::from_mask(n, g.vertex_mask[u]));
  res.certificate = SetFamily::from_members(n, std::move(members));
  res.elapsed_ms = static_cast<long>(std::chrono::duration_cast<std::chrono::milliseconds>(
                                         std::chrono::steady_clock::now() - t0)
                                         .count());
  return res;
}

long exhaustive_oracle(const PairCondition& cond, int n) {
  if (n < 0 || n > 4)
    throw std::invalid_argument("exhaustive_oracle: supported for n <= 4 only");
  if (condition_ground(cond) != n) throw std::invalid_argument("ground-set mismatch");
  const int pts = 1 << n;
  PairChecker checker(cond);
  std::vector<SubsetWord> verts;
  verts.reserve(pts);
  for (int m = 0; m < pts; ++m)
    verts.push_back(SubsetWord::from_mask(n, static_cast<std::uint32_t>(m)));
  // Memoized pairwise checks (the checker is still the only judge).
  std::vector<bool> conflict(static_cast<std::size_t>(pts) * pts, false);
  for (int a = 0; a < pts; ++a)
    for (int b = a + 1; b < pts; ++b) {
      bool bad = checker.violates_unordered(verts[a], verts[b]);
      conflict[static_cast<std::size_t>(a) * pts + b] = bad;
      conflict[static_cast<std::size_t>(b) * pts + a] = bad;
    }

  long best = 0;
  const std::uint64_t families = std::uint64_t{1} << pts;
  for (std::uint64_t fam = 0; fam < families; ++fam) {
    int size = std::popcount(fam);
    if (size <= best) continue;
    bool ok = true;
    for (std::uint64_t rest = fam; ok && rest; rest &= rest - 1) {
      int a = std::countr_zero(rest);
      for (std::uint64_t rest2 = rest & (rest - 1); rest2; rest2 &= rest2 - 1) {
        int b = std::countr_zero(rest2);
        if (conflict[static_cast<std::size_t>(a) * pts + b]) {
          ok = false;
          break;
        }
      }
    }
    if (ok) best = size;
  }
  return best;
}

}  // namespace sperner
