#include "gridstore/paths.hpp"

#include <algorithm>
#include <deque>
#include <limits>
#include <queue>
#include <tuple>

namespace gridstore {
namespace {

constexpr int kUnreached = std::numeric_limits<int>::max();

// BFS distances (in steps) from `source` over cells that are empty or equal to `exempt`.
std::vector<int> bfs_from(const Workspace& state, Cell source, std::optional<Cell> exempt) {
  const auto& grid = state.grid();
  std::vector<int> dist(static_cast<std::size_t>(grid.cell_count()), kUnreached);
  auto passable = [&](Cell c) { return state.empty(c) || (exempt && c == *exempt); };
  if (!passable(source)) return dist;
  std::deque<Cell> queue{source};
  dist[state.index(source)] = 0;
  while (!queue.empty()) {
    Cell cell = queue.front();
    queue.pop_front();
    int next_dist = dist[state.index(cell)] + 1;
    for (Cell next : neighbors(grid, cell)) {
      auto idx = state.index(next);
      if (dist[idx] != kUnreached || !passable(next)) continue;
      dist[idx] = next_dist;
      queue.push_back(next);
    }
  }
  return dist;
}

// Walks from `start` down the distance field, taking the smallest cell at each step.
Path descend(const Workspace& state, const std::vector<int>& dist, Cell start) {
  Path path{start};
  Cell cell = start;
  while (dist[state.index(cell)] > 0) {
    int want = dist[state.index(cell)] - 1;
    std::optional<Cell> best;
    for (Cell next : neighbors(state.grid(), cell)) {
      if (dist[state.index(next)] == want && (!best || next < *best)) best = next;
    }
    cell = *best;
    path.push_back(cell);
  }
  return path;
}

bool clear(const Workspace& state, const Path& path, Cell exempt) {
  for (Cell c : path) {
    if (!in_bounds(state.grid(), c)) return false;
    if (c != exempt && !state.empty(c)) return false;
  }
  return true;
}

// Candidate column-adjacent paths into `target`: straight up its column, or up a
// neighboring column to some row then one lateral step and vertically to the target.
std::vector<Path> column_adjacent_candidates(const GridSpec& grid, Cell target) {
  std::vector<Path> out;
  Path straight;
  for (int row = 1; row <= target.row; ++row) straight.push_back({row, target.col});
  out.push_back(std::move(straight));
  for (int side : {-1, 1}) {
    int entry = target.col + side;
    if (entry < 1 || entry > grid.cols) continue;
    for (int turn = 1; turn <= grid.rows; ++turn) {
      Path path;
      for (int row = 1; row <= turn; ++row) path.push_back({row, entry});
      int step = target.row >= turn ? 1 : -1;
      for (int row = turn; row != target.row + step; row += step) path.push_back({row, target.col});
      out.push_back(std::move(path));
    }
  }
  return out;
}

struct FrontStart {
  int length = kUnreached;  // in cells
  Cell cell;
};

FrontStart best_front_start(const Workspace& state, const std::vector<int>& dist) {
  FrontStart best;
  for (int col = 1; col <= state.grid().cols; ++col) {
    Cell cell{1, col};
    int d = dist[state.index(cell)];
    if (d == kUnreached) continue;
    if (d + 1 < best.length) best = FrontStart{d + 1, cell};
  }
  return best;
}

}  // namespace

std::optional<Path> shortest_access_path(const Workspace& state, Cell target) {
  auto dist = bfs_from(state, target, target);
  auto start = best_front_start(state, dist);
  if (start.length == kUnreached) return std::nullopt;
  return descend(state, dist, start.cell);
}

std::optional<Path> access_path(const Workspace& state, Cell target) {
  auto dist = bfs_from(state, target, target);
  auto start = best_front_start(state, dist);
  if (start.length == kUnreached) return std::nullopt;

  std::optional<Path> best;
  for (auto& candidate : column_adjacent_candidates(state.grid(), target)) {
    if (static_cast<int>(candidate.size()) != start.length) continue;
    if (!clear(state, candidate, target)) continue;
    if (!best || candidate < *best) best = std::move(candidate);
  }
  if (best) return best;
  return descend(state, dist, start.cell);
}

std::optional<Path> exit_path(const Workspace& state, Cell from) {
  auto path = access_path(state, from);
  if (path) std::reverse(path->begin(), path->end());
  return path;
}

std::optional<Path> shortest_path(const Workspace& state, Cell from, Cell to) {
  if (from == to || !state.empty(to)) return std::nullopt;
  auto dist = bfs_from(state, to, from);
  if (dist[state.index(from)] == kUnreached) return std::nullopt;
  return descend(state, dist, from);
}

BlockedRoute min_blocker_route(const Workspace& state, Cell from) {
  const auto& grid = state.grid();
  using Cost = std::pair<int, int>;  // (blockers, cells)
  const Cost kInf{kUnreached, kUnreached};
  std::vector<Cost> cost(static_cast<std::size_t>(grid.cell_count()), kInf);
  auto weight = [&](Cell c) { return (c != from && !state.empty(c)) ? 1 : 0; };

  using Entry = std::tuple<Cost, std::size_t>;
  std::priority_queue<Entry, std::vector<Entry>, std::greater<>> queue;
  for (int col = 1; col <= grid.cols; ++col) {
    Cell cell{1, col};
    Cost c{weight(cell), 1};
    cost[state.index(cell)] = c;
    queue.emplace(c, state.index(cell));
  }
  while (!queue.empty()) {
    auto [c, idx] = queue.top();
    queue.pop();
    if (c != cost[idx]) continue;
    for (Cell next : neighbors(grid, state.cell_at(idx))) {
      Cost nc{c.first + weight(next), c.second + 1};
      auto nidx = state.index(next);
      if (nc < cost[nidx]) {
        cost[nidx] = nc;
        queue.emplace(nc, nidx);
      }
    }
  }

  BlockedRoute route;
  route.path.push_back(from);
  Cell cell = from;
  while (!is_front(cell)) {
    Cost want = cost[state.index(cell)];
    want.first -= weight(cell);
    want.second -= 1;
    std::optional<Cell> best;
    for (Cell next : neighbors(grid, cell)) {
      if (cost[state.index(next)] == want && (!best || next < *best)) best = next;
    }
    cell = *best;
    route.path.push_back(cell);
  }
  for (std::size_t i = 1; i < route.path.size(); ++i) {
    if (!state.empty(route.path[i])) route.blocker_indices.push_back(i);
  }
  return route;
}

Action store_action(Load load, Path path) { return Action{ActionKind::Store, load, std::move(path), false}; }
Action retrieve_action(Load load, Path path) { return Action{ActionKind::Retrieve, load, std::move(path), false}; }
Action relocate_action(Load load, Path path) { return Action{ActionKind::Relocate, load, std::move(path), false}; }

}  // namespace gridstore
