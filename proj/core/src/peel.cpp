#include "sperner/peel.hpp"

#include <deque>
#include <stdexcept>
#include <unordered_map>

namespace sperner {

namespace {
int single_layer_of(const SetFamily& f) {
  int layer = -1;
  for (int i = 0; i <= f.ground(); ++i) {
    if (f.bucket(i).empty()) continue;
    if (layer >= 0) throw std::invalid_argument("peel/walk: family must sit in one layer");
    layer = i;
  }
  return layer;
}
}  // namespace

SetFamily peel(const SetFamily& b, int theta) {
  if (theta < 0) throw std::invalid_argument("peel: negative threshold");
  int layer = single_layer_of(b);
  if (layer < 0) return SetFamily(b.ground());

  const std::vector<SubsetWord> ms = b.members();
  std::unordered_map<SubsetWord, int, SubsetWordHash> index;
  index.reserve(ms.size() * 2);
  for (std::size_t i = 0; i < ms.size(); ++i) index.emplace(ms[i], static_cast<int>(i));

  // Neighbor lists via single swaps: M - a + b for a in M, b outside.
  std::vector<std::vector<int>> nbrs(ms.size());
  for (std::size_t i = 0; i < ms.size(); ++i) {
    SubsetWord probe = ms[i];
    for (int a : ms[i].elements()) {
      probe.erase(a);
      for (int e = 1; e <= b.ground(); ++e) {
        if (ms[i].contains(e)) continue;
        probe.insert(e);
        auto it = index.find(probe);
        if (it != index.end()) nbrs[i].push_back(it->second);
        probe.erase(e);
      }
      probe.insert(a);
    }
  }

  std::vector<int> degree(ms.size());
  std::vector<bool> alive(ms.size(), true);
  std::deque<int> queue;
  for (std::size_t i = 0; i < ms.size(); ++i) {
    degree[i] = static_cast<int>(nbrs[i].size());
    if (degree[i] < theta) queue.push_back(static_cast<int>(i));
  }
  while (!queue.empty()) {
    int v = queue.front();
    queue.pop_front();
    if (!alive[v]) continue;
    alive[v] = false;
    for (int u : nbrs[v]) {
      if (!alive[u]) continue;
      if (--degree[u] < theta && degree[u] == theta - 1) queue.push_back(u);
    }
  }

  std::vector<SubsetWord> out;
  for (std::size_t i = 0; i < ms.size(); ++i)
    if (alive[i]) out.push_back(ms[i]);
  return SetFamily::from_members(b.ground(), std::move(out));
}

WalkResult neighbor_walk(const SetFamily& d, const SubsetWord& start, int x) {
  if (!d.contains(start)) throw std::invalid_argument("neighbor_walk: start not in family");
  if (x < 0 || x > start.size())
    throw std::invalid_argument("neighbor_walk: x outside [0, |start|]");
  single_layer_of(d);  // validates

  const std::vector<SubsetWord> ms = d.members();  // colex order within the layer
  WalkResult res;
  res.path.push_back(start);
  SubsetWord cur = start;
  while (diff_size(cur, start) < x) {
    bool stepped = false;
    for (const SubsetWord& e : ms) {
      if (!is_neighbor(e, cur)) continue;
      // Single swap: the added element must leave `start`, the removed one
      // must come from it; then |D_l \ start| grows by exactly one.
      if (subset_of(set_minus(e, cur), start)) continue;   // added element in start
      if (!subset_of(set_minus(cur, e), start)) continue;  // removed element outside
      cur = e;
      res.path.push_back(cur);
      stepped = true;
      break;
    }
    if (!stepped) return res;  // stuck; complete stays false
  }
  res.complete = true;
  return res;
}

}  // namespace sperner
