#pragma once

#include <gmpxx.h>

#include <optional>
#include <string>
#include <vector>

#include "sperner/lattice.hpp"
#include "sperner/restrictions.hpp"
#include "sperner/subset.hpp"

namespace sperner {

// A finite family of subsets of [n], bucketed by layer.  Canonical member
// order is (layer ascending, colex within a layer); duplicates are rejected.
class SetFamily {
 public:
  explicit SetFamily(int n = 0);
  static SetFamily from_members(int n, std::vector<SubsetWord> members);

  int ground() const { return n_; }
  long size() const { return size_; }
  const std::vector<SubsetWord>& bucket(int layer) const;
  // All members in canonical order.
  std::vector<SubsetWord> members() const;
  bool contains(const SubsetWord& a) const;

 private:
  int n_ = 0;
  long size_ = 0;
  std::vector<std::vector<SubsetWord>> buckets_;
};

// Why a verification failed: the layer edge that fired, the ratio that was
// matched, or the ordered pattern.
struct Violation {
  enum class Kind { edge, ratio, ordered };
  SubsetWord a, b;
  Kind kind = Kind::edge;
  Edge edge{};     // meaningful when kind == edge
  int p = 0, q = 0;  // meaningful when kind == ratio
};

// Pass iff empty.
using Verdict = std::optional<Violation>;

// Checks F against a restriction system: for every edge (i,j,x) in canonical
// order, no A in layer i and B in layer j may have |A\B| == x.  Returns the
// first violation under (edge order, colex A, colex B), or Pass.
Verdict verify_gx(const SetFamily& f, const RestrictionSystem& sys);

// Checks the p:q tilted condition: no distinct members A, B with
// q|A\B| == p|B\A|.  Scan order: ordered member pairs (A, B) in canonical
// family order.
Verdict verify_tilted(const SetFamily& f, int p, int q);

// Checks the ordered variant: no pair A, B with d = |A\B| >= 1,
// |B\A| == 2d, and max(A\B) < min(B\A).
Verdict verify_ordered_tilted(const SetFamily& f);

// Dispatch on a PairCondition.
Verdict verify(const SetFamily& f, const PairCondition& cond);

// Ordered pair predicates behind the verifiers (and the violation graph).
bool pair_violates_tilted(int p, int q, const SubsetWord& a, const SubsetWord& b);
bool pair_violates_ordered(const SubsetWord& a, const SubsetWord& b);

// Evaluates one ordered pair against any condition; for restriction systems
// an edge index is built once per checker.
class PairChecker {
 public:
  explicit PairChecker(PairCondition cond);
  // Violation for the ordered pair (a, b), if any.
  Verdict check(const SubsetWord& a, const SubsetWord& b) const;
  // Either orientation.
  Verdict check_unordered(const SubsetWord& a, const SubsetWord& b) const;
  // Boolean-only variants (no witness built; cheap in hot loops).
  bool violates(const SubsetWord& a, const SubsetWord& b) const;
  bool violates_unordered(const SubsetWord& a, const SubsetWord& b) const;
  const PairCondition& condition() const { return cond_; }

 private:
  PairCondition cond_;
  std::vector<int> gx_x_;  // (n+1)^2 dense x lookup, -1 = no edge
};

// Union of the full layers listed in I (ascending, distinct, within [0,n]).
// Materialization is capped: n <= 30 and at most 2^24 members.
SetFamily layered_family(int n, const std::vector<int>& layers);

// The tilted counterexample family over even n:
//   { A : |A| <= n/2 and |A ∩ [n/2]| > n/4 + beta*sqrt(n)/2 },
// with the threshold decided in exact rational arithmetic (strict >).
SetFamily counterexample_family(int n, const mpq_class& beta);

// |counterexample_family(n, beta)| without materializing:
//   sum over a > n/4 + beta*sqrt(n)/2 of C(n/2,a) * sum_{b<=n/2-a} C(n/2,b).
BigCount count_counterexample(int n, const mpq_class& beta);

// Membership threshold test used by both: a > n/4 + (beta/2)*sqrt(n)?
bool counterexample_first_half_admits(int n, const mpq_class& beta, int a);

// Text round-trip.  First line "n=<int>", then one member per line in the
// comma-separated form of SubsetWord ("" for the empty set).  Serialization
// is canonical; parsing rejects duplicates and out-of-range elements.
SetFamily parse_family(const std::string& text);
std::string serialize_family(const SetFamily& f);

}  // namespace sperner
