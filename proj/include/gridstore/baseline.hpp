#ifndef GRIDSTORE_BASELINE_HPP_
#define GRIDSTORE_BASELINE_HPP_

#include "gridstore/grid.hpp"

namespace gridstore {

// Best-first comparison planner. A load with departure rank d aims for row
// ceil(d/c), leftmost reachable cell, moving further back when the placement
// would cut empty cells off from the front row. At departure each blocker on
// the fewest-blockers route leaves the grid (temporary retrieve), the target
// leaves, and the blockers come back along the same route (temporary store).
Plan plan_baseline(const Instance& instance);

// True when every empty cell reaches an empty front-row cell through empty
// cells. A grid with no empty cells counts as connected.
bool empty_region_connected(const Workspace& state);

}  // namespace gridstore

#endif  // GRIDSTORE_BASELINE_HPP_
