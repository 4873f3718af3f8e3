#include "gridstore/online.hpp"

#include <algorithm>
#include <deque>
#include <numeric>
#include <stdexcept>

#include "gridstore/paths.hpp"

namespace gridstore {

Rational Rational::of(std::int64_t num, std::int64_t den) {
  if (den <= 0) throw Error(ErrorCode::InvalidArgument, "rational denominator must be positive");
  std::int64_t g = std::gcd(num, den);
  if (g == 0) g = 1;
  return Rational{num / g, den / g};
}

Rational max_density(int k) {
  if (k < 1) throw Error(ErrorCode::InvalidArgument, "depth must be at least 1");
  return Rational::of(2 * static_cast<std::int64_t>(k), 2 * static_cast<std::int64_t>(k) + 1);
}

AisleLayout aisle_layout(const GridSpec& grid, int k) { return aisle_layout(grid, k, 0); }

AisleLayout aisle_layout(const GridSpec& grid, int k, int buffer) {
  if (k < 1) throw Error(ErrorCode::InvalidArgument, "depth must be at least 1");
  const int group = 2 * k + 1;
  if (grid.cols < group) throw Error(ErrorCode::TooNarrow, "aisle layout needs at least 2k+1 columns");

  AisleLayout layout{grid, k, {}, {}, {}};
  std::vector<std::pair<int, int>> groups;  // (first column, aisle column)
  for (int first = 1; first <= grid.cols; first += group) {
    int width = std::min(group, grid.cols - first + 1);
    int aisle = first + std::min(k + 1, width) - 1;
    layout.aisle_columns.insert(aisle);
    groups.emplace_back(first, aisle);
  }

  const int leftmost = *layout.aisle_columns.begin();
  for (int row = grid.rows; row >= 1 && static_cast<int>(layout.buffer_cells.size()) < buffer; --row) {
    for (int col : {leftmost - 1, leftmost + 1}) {
      Cell cell{row, col};
      if (static_cast<int>(layout.buffer_cells.size()) < buffer && in_bounds(grid, cell) && !layout.is_aisle(cell)) {
        layout.buffer_cells.push_back(cell);
      }
    }
  }
  if (static_cast<int>(layout.buffer_cells.size()) < buffer) {
    throw Error(ErrorCode::TooNarrow, "not enough aisle-adjacent cells for the buffer");
  }

  auto aisle_distance = [&](int col) {
    int best = grid.cols;
    for (int aisle : layout.aisle_columns) best = std::min(best, std::abs(aisle - col));
    return best;
  };
  for (std::size_t g = 0; g < groups.size(); ++g) {
    int first = groups[g].first;
    int last = g + 1 < groups.size() ? groups[g + 1].first - 1 : grid.cols;
    std::vector<Cell> cells;
    for (int col = first; col <= last; ++col) {
      if (layout.aisle_columns.contains(col)) continue;
      for (int row = 1; row <= grid.rows; ++row) {
        Cell cell{row, col};
        if (std::find(layout.buffer_cells.begin(), layout.buffer_cells.end(), cell) == layout.buffer_cells.end()) {
          cells.push_back(cell);
        }
      }
    }
    // Farthest from the aisle first, so lateral access through nearer cells stays open.
    std::stable_sort(cells.begin(), cells.end(), [&](Cell a, Cell b) {
      int da = aisle_distance(a.col);
      int db = aisle_distance(b.col);
      if (da != db) return da > db;
      if (a.row != b.row) return a.row > b.row;
      return a.col < b.col;
    });
    layout.storage_cells.insert(layout.storage_cells.end(), cells.begin(), cells.end());
  }
  layout.storage_cells.insert(layout.storage_cells.end(), layout.buffer_cells.begin(), layout.buffer_cells.end());
  return layout;
}

int capacity_with_budget(const GridSpec& grid, int budget) {
  auto layout = aisle_layout(grid, budget);
  return static_cast<int>(layout.storage_cells.size()) - (budget - 1);
}

OnlinePolicy::OnlinePolicy(GridSpec grid, int n, int budget)
    : layout_(aisle_layout(grid, budget, budget - 1)), state_(grid), n_(n), budget_(budget) {
  if (n < 0 || n > capacity_with_budget(grid, budget)) {
    throw Error(ErrorCode::CapacityExceeded, "n = " + std::to_string(n) + " exceeds the capacity for budget " + std::to_string(budget));
  }
}

bool OnlinePolicy::aisles_empty() const {
  for (int col : layout_.aisle_columns) {
    for (int row = 1; row <= layout_.grid.rows; ++row) {
      if (!state_.empty({row, col})) return false;
    }
  }
  return true;
}

Action OnlinePolicy::on_arrival(Load load) {
  if (stored_ >= n_) throw Error(ErrorCode::CapacityExceeded, "more arrivals than announced loads");
  if (state_.contains(load)) throw Error(ErrorCode::LoadAlreadyPresent, "load " + std::to_string(load) + " already stored");
  for (Cell cell : layout_.storage_cells) {
    if (!state_.empty(cell)) continue;
    auto path = access_path(state_, cell);
    if (!path) continue;
    Action action = store_action(load, std::move(*path));
    apply_action(state_, action);
    ++stored_;
    return action;
  }
  throw Error(ErrorCode::CapacityExceeded, "no reachable storage cell left");
}

std::vector<int> OnlinePolicy::aisle_distances() const {
  const auto& grid = layout_.grid;
  std::vector<int> dist(static_cast<std::size_t>(grid.cell_count()), -1);
  std::deque<Cell> queue;
  for (int col : layout_.aisle_columns) {
    for (int row = 1; row <= grid.rows; ++row) {
      Cell cell{row, col};
      if (!state_.empty(cell)) continue;
      dist[state_.index(cell)] = 0;
      queue.push_back(cell);
    }
  }
  while (!queue.empty()) {
    Cell cell = queue.front();
    queue.pop_front();
    for (Cell next : neighbors(grid, cell)) {
      auto idx = state_.index(next);
      if (dist[idx] >= 0 || !state_.empty(next)) continue;
      dist[idx] = dist[state_.index(cell)] + 1;
      queue.push_back(next);
    }
  }
  return dist;
}

bool OnlinePolicy::holes_reachable() const {
  auto dist = aisle_distances();
  for (std::size_t i = 0; i < dist.size(); ++i) {
    if (dist[i] < 0 && state_.empty(state_.cell_at(i))) return false;
  }
  return true;
}

std::optional<Cell> OnlinePolicy::parking_cell(Cell from, const std::set<Cell>& reserved) const {
  const auto& grid = layout_.grid;
  std::vector<int> reach(static_cast<std::size_t>(grid.cell_count()), -1);
  std::deque<Cell> queue{from};
  reach[state_.index(from)] = 0;
  while (!queue.empty()) {
    Cell cell = queue.front();
    queue.pop_front();
    for (Cell next : neighbors(grid, cell)) {
      auto idx = state_.index(next);
      if (reach[idx] >= 0 || !state_.empty(next)) continue;
      reach[idx] = reach[state_.index(cell)] + 1;
      queue.push_back(next);
    }
  }
  // Filling the hole farthest from the aisles never cuts another hole off.
  const auto depth = aisle_distances();
  std::optional<Cell> best;
  auto better = [&](Cell a, Cell b) {
    int da = depth[state_.index(a)];
    int db = depth[state_.index(b)];
    if (da != db) return da > db;
    return std::pair{a.col, a.row} < std::pair{b.col, b.row};
  };
  for (std::size_t i = 0; i < reach.size(); ++i) {
    Cell cell = state_.cell_at(i);
    if (reach[i] <= 0 || reserved.contains(cell) || layout_.is_aisle(cell)) continue;
    if (!best || better(cell, *best)) best = cell;
  }
  return best;
}

namespace {

BlockedRoute route_along(const Workspace& state, Path path) {
  BlockedRoute route{std::move(path), {}};
  for (std::size_t i = 1; i < route.path.size(); ++i) {
    if (!state.empty(route.path[i])) route.blocker_indices.push_back(i);
  }
  return route;
}

// Sideways along the load's row into an aisle and up, straight up its own
// column, or whatever route has the fewest blockers.
std::vector<BlockedRoute> candidate_routes(const Workspace& state, const AisleLayout& layout, Cell from) {
  std::vector<BlockedRoute> routes{min_blocker_route(state, from)};
  Path up;
  for (int row = from.row; row >= 1; --row) up.push_back({row, from.col});
  routes.push_back(route_along(state, std::move(up)));
  for (int aisle : layout.aisle_columns) {
    if (aisle == from.col) continue;
    Path path;
    const int step = aisle > from.col ? 1 : -1;
    for (int col = from.col; col != aisle; col += step) path.push_back({from.row, col});
    for (int row = from.row; row >= 1; --row) path.push_back({row, aisle});
    routes.push_back(route_along(state, std::move(path)));
  }
  std::stable_sort(routes.begin(), routes.end(), [](const BlockedRoute& a, const BlockedRoute& b) {
    if (a.blocker_indices.size() != b.blocker_indices.size()) return a.blocker_indices.size() < b.blocker_indices.size();
    return a.path.size() < b.path.size();
  });
  return routes;
}

}  // namespace

std::optional<std::vector<Action>> OnlinePolicy::try_route(Load load, Cell where, const BlockedRoute& route) {
  const Workspace saved = state_;
  std::set<Cell> reserved(route.path.begin(), route.path.end());
  std::vector<Action> actions;
  // Blockers nearest the exit leave first.
  for (auto it = route.blocker_indices.rbegin(); it != route.blocker_indices.rend(); ++it) {
    Cell from = route.path[*it];
    auto parking = parking_cell(from, reserved);
    std::optional<Path> path;
    if (parking) path = shortest_path(state_, from, *parking);
    if (!path) {
      state_ = saved;
      return std::nullopt;
    }
    Action action = relocate_action(state_.at(from), std::move(*path));
    apply_action(state_, action);
    actions.push_back(std::move(action));
  }
  auto path = exit_path(state_, where);
  if (!path) {
    state_ = saved;
    return std::nullopt;
  }
  Action action = retrieve_action(load, std::move(*path));
  apply_action(state_, action);
  actions.push_back(std::move(action));
  return actions;
}

std::vector<Action> OnlinePolicy::carry_out(Load load, Cell where) {
  auto route = min_blocker_route(state_, where);
  const auto& path = route.path;
  std::vector<Action> actions;
  std::vector<Load> carried;
  for (auto it = route.blocker_indices.rbegin(); it != route.blocker_indices.rend(); ++it) {
    Load blocker = state_.at(path[*it]);
    Action out{ActionKind::Retrieve, blocker, Path(path.begin() + static_cast<long>(*it), path.end()), true};
    apply_action(state_, out);
    actions.push_back(std::move(out));
    carried.push_back(blocker);
  }
  Action leave = retrieve_action(load, path);
  apply_action(state_, leave);
  actions.push_back(std::move(leave));
  for (std::size_t k = 0; k < carried.size(); ++k) {
    const auto idx = route.blocker_indices[k];
    Path back(path.rbegin(), path.rbegin() + static_cast<long>(path.size() - idx));
    Action in{ActionKind::Store, carried[carried.size() - 1 - k], std::move(back), true};
    apply_action(state_, in);
    actions.push_back(std::move(in));
  }
  return actions;
}

std::vector<Action> OnlinePolicy::on_departure(Load load) {
  auto where = state_.find(load);
  if (!where) throw Error(ErrorCode::UnknownLoad, "load " + std::to_string(load) + " is not stored");
  --stored_;

  const auto routes = candidate_routes(state_, layout_, *where);
  const Workspace saved = state_;
  std::optional<std::vector<Action>> fallback;
  std::optional<Workspace> fallback_state;
  for (const auto& route : routes) {
    auto actions = try_route(load, *where, route);
    if (!actions) continue;
    const bool in_budget = actions->size() <= static_cast<std::size_t>(budget_);
    // Prefer routes after which every hole can still be reached from an aisle.
    if (in_budget && holes_reachable()) return std::move(*actions);
    if (!fallback || (in_budget && fallback->size() > static_cast<std::size_t>(budget_))) {
      fallback = std::move(actions);
      fallback_state = state_;
    }
    state_ = saved;
  }
  if (fallback) {
    state_ = *fallback_state;
    return std::move(*fallback);
  }
  // Nowhere inside the grid to park: blockers step out and come back.
  return carry_out(load, *where);
}

Plan plan_online(const Instance& instance, int budget) {
  validate_instance(instance);
  OnlinePolicy policy(instance.grid, static_cast<int>(instance.load_count()), budget);
  Plan plan;
  for (Load load : instance.arrival) plan.actions.push_back(policy.on_arrival(load));
  for (Load load : instance.departure) {
    for (auto& action : policy.on_departure(load)) plan.actions.push_back(std::move(action));
  }
  return plan;
}

}  // namespace gridstore
