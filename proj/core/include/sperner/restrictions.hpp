#pragma once

#include <optional>
#include <string>
#include <variant>
#include <vector>

namespace sperner {

// One forbidden difference between two layers of the cube on [n]:
// for A in layer i and B in layer j (i < j), the pair is forbidden when
// |A \ B| == x.  The constraint can only bite for x in [0, min(i, n-j)].
struct Edge {
  int i = 0;
  int j = 0;
  int x = 0;
  bool operator==(const Edge&) const = default;
};

// A layer graph with forbidden differences on its edges, the pairwise
// restriction shape behind every layered condition in this library.
// Canonical form: edges sorted ascending by (i, j), one edge per pair.
struct RestrictionSystem {
  int n = 0;
  std::vector<Edge> edges;
};

struct ValidationReport {
  bool ok = true;
  std::string message;             // empty when ok
  std::optional<Edge> offender;    // first offending edge, when edge-level
};

// Checks 0 <= i < j <= n, uniqueness of (i,j), and x in [0, min(i, n-j)];
// reports the first offender in canonical edge order.
ValidationReport validate_system(const RestrictionSystem& sys);

// Sorts edges into canonical order; throws std::invalid_argument if the
// system fails validation.
RestrictionSystem canonicalize_system(RestrictionSystem sys);

// Antichain condition: every pair of layers i < j carries x = 0
// (a containment between members of distinct layers is forbidden).
RestrictionSystem sperner_system(int n);

// The p:q tilted condition as a restriction system: an edge (i, j) exists
// iff (q-p) divides p*(j-i) and x = p*(j-i)/(q-p) lies in [0, min(i, n-j)].
// Requires gcd(p, q) == 1 and q > p >= 0; p == q has no finite forbidden
// difference and is rejected.
RestrictionSystem tilted_system(int n, int p, int q);

// JSON round-trip.  Schema: {"n": int, "edges": [{"i":..,"j":..,"x":..}]}.
// parse_system validates and canonicalizes; malformed input or an invalid
// edge throws std::invalid_argument with the offending detail.
RestrictionSystem parse_system(const std::string& json_text);
std::string serialize_system(const RestrictionSystem& sys);

// Pairwise conditions a family can be checked against.  The tilted and
// ordered-tilted conditions are intrinsically pairwise; the first is
// equivalent to its restriction-system form, the second has none.
struct TiltedRatio {
  int n = 0;
  int p = 0;
  int q = 1;
};

struct OrderedTilted {
  int n = 0;
};

using PairCondition = std::variant<RestrictionSystem, TiltedRatio, OrderedTilted>;

// Validates ratio parameters (gcd 1, q > p >= 0); throws on failure.
TiltedRatio make_tilted_ratio(int n, int p, int q);

int condition_ground(const PairCondition& cond);
std::string condition_name(const PairCondition& cond);

}  // namespace sperner
