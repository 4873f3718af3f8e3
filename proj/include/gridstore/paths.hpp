#ifndef GRIDSTORE_PATHS_HPP_
#define GRIDSTORE_PATHS_HPP_

#include <optional>
#include <vector>

#include "gridstore/grid.hpp"

namespace gridstore {

// Path from some front-row cell to `target` through empty cells. `target`
// may hold the moving load. Minimum length first, then column-adjacent
// paths, then lexicographic order of the cell sequence.
std::optional<Path> access_path(const Workspace& state, Cell target);

// Like access_path but without the column-adjacent preference.
std::optional<Path> shortest_access_path(const Workspace& state, Cell target);

// Retrieval route: reverse of access_path(state, from).
std::optional<Path> exit_path(const Workspace& state, Cell from);

// Shortest path from `from` to the empty cell `to`; lexicographic tie-break.
std::optional<Path> shortest_path(const Workspace& state, Cell from, Cell to);

// Route from `from` to the front row that first minimizes the number of
// occupied cells crossed, then the number of cells.
struct BlockedRoute {
  Path path;
  std::vector<std::size_t> blocker_indices;  // positions in path, ascending
};
BlockedRoute min_blocker_route(const Workspace& state, Cell from);

// Action builders over a path chosen by the helpers above.
Action store_action(Load load, Path path);
Action retrieve_action(Load load, Path path);
Action relocate_action(Load load, Path path);

}  // namespace gridstore

#endif  // GRIDSTORE_PATHS_HPP_
