#include "sperner/weight.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

#include "sperner/bitrow.hpp"

namespace sperner {

namespace {

struct LayerGraph {
  int n;
  std::vector<BigCount> wt;   // wt[v] = C(n, v)
  std::vector<BitRow> adj;    // symmetric, no loops
  std::vector<int> order;     // descending weight, ties by ascending index
};

LayerGraph build(const RestrictionSystem& sys) {
  LayerGraph g;
  g.n = sys.n;
  const int v = sys.n + 1;
  g.wt.reserve(v);
  for (int i = 0; i < v; ++i) g.wt.push_back(binomial(sys.n, i));
  g.adj.assign(v, BitRow(v));
  for (const Edge& e : sys.edges) {
    g.adj[e.i].set(e.j);
    g.adj[e.j].set(e.i);
  }
  g.order.resize(v);
  std::iota(g.order.begin(), g.order.end(), 0);
  std::stable_sort(g.order.begin(), g.order.end(),
                   [&g](int a, int b) { return g.wt[a] > g.wt[b]; });
  return g;
}

// Exact max weight of an independent set inside `cand`, given `base` already
// chosen.  `best` is updated in place (weight only, no certificate).
struct Bounder {
  const LayerGraph& g;
  BigCount best;

  void rec(BitRow cand, const BigCount& cur, const BigCount& avail) {
    if (cur + avail <= best) return;  // cannot strictly improve
    // Next candidate in static order.
    int v = -1;
    for (int u : g.order)
      if (cand.test(u)) { v = u; break; }
    if (v < 0) {
      if (cur > best) best = cur;
      return;
    }
    BitRow inc = cand;
    inc.reset(v);
    BigCount lost = g.wt[v];  // weight leaving `avail` when excluding v
    // include v
    {
      BitRow c2 = inc;
      BigCount a2 = avail - g.wt[v];
      for (std::size_t u = c2.find_first(); u != BitRow::npos; u = c2.find_next(u + 1))
        if (g.adj[v].test(u)) a2 -= g.wt[u];
      c2.andnot_assign(g.adj[v]);
      rec(std::move(c2), cur + g.wt[v], a2);
    }
    // exclude v
    rec(std::move(inc), cur, avail - lost);
  }
};

BigCount max_weight_within(const LayerGraph& g, const BitRow& cand, const BigCount& seed_best) {
  BigCount avail = 0;
  for (std::size_t u = cand.find_first(); u != BitRow::npos; u = cand.find_next(u + 1))
    avail += g.wt[u];
  Bounder b{g, seed_best};
  b.rec(cand, 0, avail);
  return b.best;
}

}  // namespace

WeightResult weight(const RestrictionSystem& sys) {
  RestrictionSystem canon = canonicalize_system(sys);
  LayerGraph g = build(canon);
  const int v = canon.n + 1;

  BitRow all(v);
  for (int i = 0; i < v; ++i) all.set(i);
  const BigCount w_star = max_weight_within(g, all, -1);

  // Lexicographically smallest optimal certificate, grown layer by layer:
  // take the smallest next layer whose forced inclusion still reaches w*.
  WeightResult out;
  out.w = w_star;
  BigCount chosen_weight = 0;
  BitRow cand = all;
  int next_min = 0;
  while (chosen_weight < w_star) {
    bool advanced = false;
    for (int j = next_min; j < v; ++j) {
      if (!cand.test(j)) continue;
      BitRow rest(v);
      for (int u = j + 1; u < v; ++u)
        if (cand.test(u)) rest.set(u);
      rest.andnot_assign(g.adj[j]);
      BigCount reach = chosen_weight + g.wt[j] + max_weight_within(g, rest, -1);
      if (reach == w_star) {
        out.layers.push_back(j);
        chosen_weight += g.wt[j];
        cand = rest;
        next_min = j + 1;
        advanced = true;
        break;
      }
    }
    if (!advanced) throw std::logic_error("weight: certificate reconstruction failed");
  }
  return out;
}

}  // namespace sperner
