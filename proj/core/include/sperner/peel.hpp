#pragma once

#include <vector>

#include "sperner/family.hpp"
#include "sperner/subset.hpp"

namespace sperner {

// Iteratively removes members with fewer than theta neighbors (symmetric
// difference exactly 2) inside the surviving subfamily, until stable.  The
// result is the unique maximal subfamily of minimum internal degree >= theta
// (the property is union-closed, so the fixed point does not depend on
// removal order).  All members of b must share one layer.
SetFamily peel(const SetFamily& b, int theta);

struct WalkResult {
  std::vector<SubsetWord> path;  // path[0] = start
  bool complete = false;         // reached |D_l \ D_0| == x
};

// Greedy neighbor walk inside d, starting at start (a member of d): each
// step moves to the colex-first member E adjacent to the current set D_l
// with E \ D_l outside start and D_l \ E inside start, so |D_l \ start|
// grows by one per step.  Stops after x steps, or earlier with
// complete = false if no eligible neighbor exists.
WalkResult neighbor_walk(const SetFamily& d, const SubsetWord& start, int x);

}  // namespace sperner
