#include "gridstore/lookahead.hpp"

#include <algorithm>
#include <string>

#include "gridstore/offline.hpp"
#include "gridstore/paths.hpp"

namespace gridstore {

std::vector<Cell> LPathLayout::corner_cells() const {
  std::vector<Cell> out;
  for (std::size_t i = 0; i < paths.size(); ++i) {
    if (corner[i]) out.push_back(paths[i][*corner[i]]);
  }
  return out;
}

LPathLayout build_L_paths(const GridSpec& grid) {
  const int r = grid.rows;
  const int c = grid.cols;
  if (r > c) throw Error(ErrorCode::ShapeError, "L-path layout needs rows <= cols");
  LPathLayout layout{grid, {}, {}};
  for (int col = 1; col <= c - r; ++col) {
    Path path;
    for (int row = 1; row <= r; ++row) path.push_back({row, col});
    layout.paths.push_back(std::move(path));
    layout.corner.push_back(std::nullopt);
  }
  for (int j = 0; j < r; ++j) {
    const int left = c - r + 1 + j;
    const int top = r - j;
    Path path;
    for (int row = 1; row <= top; ++row) path.push_back({row, left});
    for (int col = left + 1; col <= c; ++col) path.push_back({top, col});
    std::optional<std::size_t> corner;
    if (path.size() >= 3) corner = static_cast<std::size_t>(top - 1);
    layout.paths.push_back(std::move(path));
    layout.corner.push_back(corner);
  }
  return layout;
}

namespace {

void retrieve_in_departure_order(const Instance& instance, Workspace& state, Plan& plan) {
  for (Load load : instance.departure) {
    auto path = exit_path(state, *state.find(load));
    if (!path) throw Error(ErrorCode::NoPath, "no retrieval path for load " + std::to_string(load));
    plan.actions.push_back(retrieve_action(load, std::move(*path)));
    state.remove(load);
  }
}

// Empty cells reachable from `from`, nearest first, then lexicographic.
std::vector<Cell> parking_candidates(const Workspace& state, Cell from) {
  const GridSpec& grid = state.grid();
  std::vector<int> dist(static_cast<std::size_t>(grid.cell_count()), -1);
  std::vector<Cell> frontier{from};
  std::vector<std::pair<int, Cell>> found;
  dist[state.index(from)] = 0;
  for (std::size_t head = 0; head < frontier.size(); ++head) {
    Cell at = frontier[head];
    for (Cell next : neighbors(grid, at)) {
      if (!state.empty(next) || dist[state.index(next)] >= 0) continue;
      dist[state.index(next)] = dist[state.index(at)] + 1;
      frontier.push_back(next);
      found.emplace_back(dist[state.index(next)], next);
    }
  }
  std::sort(found.begin(), found.end());
  std::vector<Cell> out;
  for (const auto& entry : found) out.push_back(entry.second);
  return out;
}

// Retrieves loads departing after `last_gone` up to and including `until` on a
// scratch copy; true when each one finds a free exit.
bool drains_until(const Instance& instance, Workspace scratch, Load last_gone, Load until) {
  auto it = std::find(instance.departure.begin(), instance.departure.end(), last_gone);
  for (++it; it != instance.departure.end(); ++it) {
    if (!exit_path(scratch, *scratch.find(*it))) return false;
    scratch.remove(*it);
    if (*it == until) break;
  }
  return true;
}

}  // namespace

Plan plan_sparse_lookahead1(ArrivalStream& stream, const Instance& instance) {
  validate_instance(instance);
  const int r = instance.grid.rows;
  const int c = instance.grid.cols;
  const auto n = static_cast<long>(instance.load_count());
  if (n > static_cast<long>(r) * (c - 1) + 1) {
    throw Error(ErrorCode::TooDense, "sparse strategy holds at most r(c-1)+1 loads");
  }
  if (stream.total() != instance.load_count()) throw Error(ErrorCode::CountMismatch, "stream length differs from the instance");

  const auto rank = ranks_of(instance.departure);
  std::vector<int> filled(static_cast<std::size_t>(c) + 1, 0);
  Workspace state(instance.grid);
  Plan plan;
  while (stream.remaining() > 0) {
    Load load = stream.next();
    const int q = rank[load];
    Cell cell{1, c};
    if (q > 1) {
      cell.col = c - 1 - (q - 2) / r;
      cell.row = r - filled[cell.col]++;
    }
    Path path;
    for (int row = 1; row <= cell.row; ++row) path.push_back({row, cell.col});
    plan.actions.push_back(store_action(load, std::move(path)));
    state.place(load, cell);
  }
  retrieve_in_departure_order(instance, state, plan);
  return plan;
}

Plan plan_L_lookahead1(ArrivalStream& stream, const Instance& instance, int skip) {
  validate_instance(instance);
  const int r = instance.grid.rows;
  const int c = instance.grid.cols;
  if (r > c) throw Error(ErrorCode::ShapeError, "L-path strategy needs rows <= cols");
  if (skip < 0 || skip > r - 1) throw Error(ErrorCode::CountMismatch, "skip must lie in [0, r-1]");
  if (instance.load_count() != static_cast<std::size_t>(r * c - skip)) {
    throw Error(ErrorCode::CountMismatch, "L-path strategy needs exactly r*c - skip loads");
  }
  if (stream.total() != instance.load_count()) throw Error(ErrorCode::CountMismatch, "stream length differs from the instance");

  const auto layout = build_L_paths(instance.grid);
  const auto& paths = layout.paths;
  const std::size_t count = paths.size();

  // Innermost corners are left empty first.
  std::vector<bool> skipped(count, false);
  for (std::size_t i = count; i-- > 0 && skip > 0;) {
    if (layout.corner[i]) {
      skipped[i] = true;
      --skip;
    }
  }
  std::vector<int> capacity(count);
  for (std::size_t i = 0; i < count; ++i) capacity[i] = static_cast<int>(paths[i].size()) - (skipped[i] ? 1 : 0);

  // Earliest departures go to the innermost paths.
  const auto n = instance.load_count();
  std::vector<std::size_t> path_of_rank(n + 1, 0);
  {
    std::size_t i = count - 1;
    int used = 0;
    for (std::size_t q = 1; q <= n; ++q) {
      while (used == capacity[i]) {
        --i;
        used = 0;
      }
      path_of_rank[q] = i;
      ++used;
    }
  }

  std::vector<long> next_slot(count);
  auto advance = [&](std::size_t i) {
    while (next_slot[i] >= 0 && skipped[i] && static_cast<std::size_t>(next_slot[i]) == *layout.corner[i]) --next_slot[i];
  };
  for (std::size_t i = 0; i < count; ++i) {
    next_slot[i] = static_cast<long>(paths[i].size()) - 1;
    advance(i);
  }

  const auto rank = ranks_of(instance.departure);
  Workspace state(instance.grid);
  Plan plan;
  while (stream.remaining() > 0) {
    Load load = stream.next();
    std::size_t i = path_of_rank[rank[load]];
    auto slot = static_cast<std::size_t>(next_slot[i]--);
    advance(i);
    Path path(paths[i].begin(), paths[i].begin() + static_cast<long>(slot) + 1);
    Cell cell = path.back();
    plan.actions.push_back(store_action(load, std::move(path)));
    state.place(load, cell);
  }

  for (Load load : instance.departure) {
    Cell cell = *state.find(load);
    if (auto path = exit_path(state, cell)) {
      plan.actions.push_back(retrieve_action(load, std::move(*path)));
      state.remove(load);
      continue;
    }
    // Blocked corner: move the load underneath to the nearest empty cell that
    // frees the corner and keeps every load leaving before it retrievable.
    Cell below{cell.row - 1, cell.col};
    bool done = false;
    if (in_bounds(instance.grid, below) && !state.empty(below)) {
      const Load blocker = state.at(below);
      for (Cell parking : parking_candidates(state, below)) {
        auto move = shortest_path(state, below, parking);
        if (!move) continue;
        Workspace trial = state;
        trial.remove(blocker);
        trial.place(blocker, parking);
        auto out = exit_path(trial, cell);
        if (!out) continue;
        trial.remove(load);
        if (!drains_until(instance, trial, load, blocker)) continue;
        plan.actions.push_back(relocate_action(blocker, std::move(*move)));
        plan.actions.push_back(retrieve_action(load, std::move(*out)));
        state = std::move(trial);
        done = true;
        break;
      }
    }
    if (!done) throw Error(ErrorCode::NoPath, "no retrieval route for load " + std::to_string(load));
  }
  return plan;
}

Plan plan_lookahead_full(ArrivalStream& stream, const Instance& instance) {
  return plan_from_arrangement(instance, assign_streaming_arrangement(instance, stream));
}

std::string_view strategy_name(Strategy strategy) {
  switch (strategy) {
    case Strategy::Sparse: return "sparse";
    case Strategy::LPaths: return "lpaths";
    case Strategy::FullLookahead: return "lookahead";
    case Strategy::None: return "none";
  }
  return "none";
}

StrategyChoice choose_strategy(const Instance& instance) {
  const long r = instance.grid.rows;
  const long c = instance.grid.cols;
  const auto n = static_cast<long>(instance.load_count());
  if (n <= r * (c - 1) + 1) return {Strategy::Sparse, 0, "n <= r(c-1)+1"};
  const long skip = r * c - n;
  if (r <= c && skip <= r - 1) return {Strategy::LPaths, static_cast<int>(skip), "r <= c with " + std::to_string(skip) + " spare cells"};
  if (c >= 3 && (!instance.lookahead || *instance.lookahead >= 3 * r - 1)) {
    return {Strategy::FullLookahead, 0, "c >= 3 and lookahead >= 3r-1"};
  }
  return {Strategy::None, 0, "too dense for lookahead-1 strategies and lookahead below 3r-1 or c < 3"};
}

Plan plan_with_strategy(const Instance& instance) {
  auto choice = choose_strategy(instance);
  switch (choice.strategy) {
    case Strategy::Sparse: {
      ArrivalStream stream(instance.arrival, 1);
      return plan_sparse_lookahead1(stream, instance);
    }
    case Strategy::LPaths: {
      ArrivalStream stream(instance.arrival, 1);
      return plan_L_lookahead1(stream, instance, choice.skip);
    }
    case Strategy::FullLookahead: {
      auto window = instance.lookahead ? static_cast<std::size_t>(*instance.lookahead) : instance.load_count();
      ArrivalStream stream(instance.arrival, window);
      return plan_lookahead_full(stream, instance);
    }
    case Strategy::None:
      break;
  }
  throw Error(ErrorCode::NoPlacement, "no guaranteed strategy: " + choice.reason);
}

}  // namespace gridstore
