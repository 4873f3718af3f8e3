#include "gridstore/baseline.hpp"

#include <deque>
#include <string>

#include "gridstore/paths.hpp"

namespace gridstore {

bool empty_region_connected(const Workspace& state) {
  const auto& grid = state.grid();
  std::vector<bool> seen(static_cast<std::size_t>(grid.cell_count()), false);
  std::deque<Cell> queue;
  for (int col = 1; col <= grid.cols; ++col) {
    Cell cell{1, col};
    if (state.empty(cell)) {
      seen[state.index(cell)] = true;
      queue.push_back(cell);
    }
  }
  while (!queue.empty()) {
    Cell cell = queue.front();
    queue.pop_front();
    for (Cell next : neighbors(grid, cell)) {
      auto idx = state.index(next);
      if (seen[idx] || !state.empty(next)) continue;
      seen[idx] = true;
      queue.push_back(next);
    }
  }
  for (std::size_t i = 0; i < seen.size(); ++i) {
    if (!seen[i] && state.empty(state.cell_at(i))) return false;
  }
  return true;
}

namespace {

bool keeps_access(Workspace& state, Load load, Cell cell) {
  state.place(load, cell);
  bool ok = empty_region_connected(state);
  state.remove(load);
  return ok;
}

std::optional<Action> place_load(Workspace& state, Load load, int rank) {
  const auto& grid = state.grid();
  const int designated = std::min((rank + grid.cols - 1) / grid.cols, grid.rows);
  std::vector<int> rows;
  for (int row = designated; row <= grid.rows; ++row) rows.push_back(row);
  for (int row = designated - 1; row >= 1; --row) rows.push_back(row);

  for (int row : rows) {
    for (int col = 1; col <= grid.cols; ++col) {
      Cell cell{row, col};
      if (!state.empty(cell)) continue;
      auto path = shortest_access_path(state, cell);
      if (!path) continue;
      // Only the leftmost reachable cell of a row is a candidate.
      if (keeps_access(state, load, cell)) return store_action(load, std::move(*path));
      break;
    }
  }
  // Last resort: any reachable cell that keeps the empty region connected.
  for (int row : rows) {
    for (int col = 1; col <= grid.cols; ++col) {
      Cell cell{row, col};
      if (!state.empty(cell)) continue;
      auto path = shortest_access_path(state, cell);
      if (path && keeps_access(state, load, cell)) return store_action(load, std::move(*path));
    }
  }
  return std::nullopt;
}

}  // namespace

Plan plan_baseline(const Instance& instance) {
  validate_instance(instance);
  const auto rank = ranks_of(instance.departure);
  Workspace state(instance.grid);
  Plan plan;

  for (Load load : instance.arrival) {
    auto action = place_load(state, load, rank[load]);
    if (!action) throw Error(ErrorCode::NoPlacement, "no placement keeps the grid accessible for load " + std::to_string(load));
    apply_action(state, *action);
    plan.actions.push_back(std::move(*action));
  }

  for (Load load : instance.departure) {
    auto route = min_blocker_route(state, *state.find(load));
    const auto& path = route.path;
    const auto& blockers = route.blocker_indices;
    std::vector<Load> carried;
    for (auto it = blockers.rbegin(); it != blockers.rend(); ++it) {
      Load blocker = state.at(path[*it]);
      Action out{ActionKind::Retrieve, blocker, Path(path.begin() + static_cast<long>(*it), path.end()), true};
      apply_action(state, out);
      plan.actions.push_back(std::move(out));
      carried.push_back(blocker);
    }
    Action leave = retrieve_action(load, path);
    apply_action(state, leave);
    plan.actions.push_back(std::move(leave));
    // Farthest from the exit goes back first.
    for (std::size_t k = 0; k < blockers.size(); ++k) {
      Load blocker = carried[blockers.size() - 1 - k];
      Path back(path.rbegin(), path.rbegin() + static_cast<long>(path.size() - blockers[k]));
      Action in{ActionKind::Store, blocker, std::move(back), true};
      apply_action(state, in);
      plan.actions.push_back(std::move(in));
    }
  }
  return plan;
}

}  // namespace gridstore
