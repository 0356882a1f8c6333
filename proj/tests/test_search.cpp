#include <doctest.h>

#include <bit>
#include <cstdint>
#include <stdexcept>
#include <vector>

#include "sperner/lattice.hpp"
#include "sperner/rng.hpp"
#include "sperner/search.hpp"
#include "sperner/weight.hpp"
#include "support.hpp"

using namespace sperner;

namespace {

// Index of a subset mask in the (layer, colex) vertex order.
std::size_t vertex_index(const ViolationGraph& g, std::uint32_t mask) {
  for (std::size_t v = 0; v < g.vertices(); ++v)
    if (g.vertex_mask[v] == mask) return v;
  throw std::logic_error("mask not found");
}

}  // namespace

TEST_SUITE("search") {

TEST_CASE("violation graph of the sperner condition at n = 2") {
  ViolationGraph g = build_violation_graph(sperner_system(2), 2);
  REQUIRE(g.vertices() == 4);
  // Edges are exactly the strict containments: 5 of them
  // (∅⊂{1}, ∅⊂{2}, ∅⊂{1,2}, {1}⊂{1,2}, {2}⊂{1,2}).
  CHECK(g.edge_count == 5);
  const std::size_t v1 = vertex_index(g, 0b01);
  const std::size_t v2 = vertex_index(g, 0b10);
  CHECK(!g.adj[v1].test(v2));
  CHECK(!g.adj[v2].test(v1));
}

TEST_CASE("violation graph of the ordered condition at n = 3") {
  ViolationGraph g = build_violation_graph(OrderedTilted{3}, 3);
  REQUIRE(g.vertices() == 8);
  CHECK(g.edge_count == 1);  // only {1} against {2,3}
  const std::size_t a = vertex_index(g, 0b001);
  const std::size_t b = vertex_index(g, 0b110);
  CHECK(g.adj[a].test(b));
  CHECK(g.adj[b].test(a));
}

TEST_CASE("empty condition gives an edgeless graph") {
  ViolationGraph g = build_violation_graph(RestrictionSystem{3, {}}, 3);
  CHECK(g.vertices() == 8);
  CHECK(g.edge_count == 0);
  for (const BitRow& row : g.adj) CHECK(!row.any());
}

TEST_CASE("vertex order is layer then colex") {
  ViolationGraph g = build_violation_graph(sperner_system(3), 3);
  for (std::size_t v = 1; v < g.vertices(); ++v) {
    const int pa = std::popcount(g.vertex_mask[v - 1]);
    const int pb = std::popcount(g.vertex_mask[v]);
    CHECK((pa < pb || (pa == pb && g.vertex_mask[v - 1] < g.vertex_mask[v])));
  }
}

TEST_CASE("graph caps") {
  CHECK_THROWS_AS(build_violation_graph(sperner_system(15), 15), std::invalid_argument);
  CHECK_THROWS_AS(build_violation_graph(sperner_system(21), 21, 21), std::invalid_argument);
  CHECK_THROWS_AS(max_family(sperner_system(15), 15), std::invalid_argument);
}

TEST_CASE("sperner maxima are the middle binomials") {
  for (int n = 1; n <= 7; ++n) {
    ExtremalResult res = max_family(sperner_system(n), n);
    CHECK(res.optimal);
    CHECK(BigCount(res.size) == binomial(n, n / 2));
    CHECK(res.certificate.size() == res.size);
    CHECK(!verify(res.certificate, PairCondition(sperner_system(n))).has_value());
  }
}

TEST_CASE("ordered-tilted frozen maxima at n = 3 and n = 4") {
  ExtremalResult r3 = max_family(OrderedTilted{3}, 3);
  CHECK(r3.optimal);
  CHECK(r3.size == 7);

  ExtremalResult r4 = max_family(OrderedTilted{4}, 4);
  CHECK(r4.optimal);
  CHECK(r4.size == 12);
}

TEST_CASE("exhaustive oracle documented values") {
  CHECK(exhaustive_oracle(RestrictionSystem{3, {}}, 3) == 8);
  CHECK(exhaustive_oracle(OrderedTilted{3}, 3) == 7);
  CHECK(exhaustive_oracle(TiltedRatio{4, 1, 2}, 4) == max_family(TiltedRatio{4, 1, 2}, 4).size);
  CHECK_THROWS_AS(exhaustive_oracle(sperner_system(5), 5), std::invalid_argument);
}

TEST_CASE("oracle agreement on random systems at n <= 4") {
  Rng rng(161803);
  for (int trial = 0; trial < 8; ++trial) {
    const int n = 2 + static_cast<int>(rng.bounded(3));
    RestrictionSystem sys = testsupport::random_system(rng, n, 0.5);
    ExtremalResult res = max_family(sys, n);
    CHECK(res.optimal);
    CHECK(res.size == exhaustive_oracle(sys, n));
  }
}

TEST_CASE("certificates verify and search is deterministic") {
  Rng rng(2718);
  for (int trial = 0; trial < 10; ++trial) {
    const int n = 3 + static_cast<int>(rng.bounded(5));
    RestrictionSystem sys = testsupport::random_system(rng, n, 0.6);
    ExtremalResult a = max_family(sys, n);
    ExtremalResult b = max_family(sys, n);
    CHECK(a.size == b.size);
    CHECK(a.nodes == b.nodes);
    CHECK(a.certificate.members() == b.certificate.members());
    CHECK(a.certificate.size() == a.size);
    CHECK(!verify_gx(a.certificate, sys).has_value());
  }
}

TEST_CASE("size is at least the layered weight bound") {
  Rng rng(13);
  for (int trial = 0; trial < 10; ++trial) {
    const int n = 2 + static_cast<int>(rng.bounded(5));
    RestrictionSystem sys = testsupport::random_system(rng, n, 0.5);
    ExtremalResult res = max_family(sys, n);
    CHECK(res.optimal);
    CHECK(BigCount(res.size) >= weight(sys).w);
  }
}

TEST_CASE("an expired budget reports a non-optimal incumbent") {
  // The ordered condition at n = 12 is far too large to close in 0 ms; the
  // run must still return a valid family and flag optimal = false.
  ExtremalResult res = max_family(OrderedTilted{12}, 12, 0);
  CHECK(!res.optimal);
  CHECK(res.size >= 1);
  CHECK(res.certificate.size() == res.size);
  CHECK(!verify(res.certificate, PairCondition(OrderedTilted{12})).has_value());
}

}  // TEST_SUITE
