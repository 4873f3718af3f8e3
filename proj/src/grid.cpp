#include "gridstore/grid.hpp"

#include <algorithm>
#include <deque>
#include <limits>
#include <map>
#include <set>

namespace gridstore {

Workspace::Workspace(GridSpec grid) : grid_(grid), cells_(static_cast<std::size_t>(grid.cell_count()), kNoLoad) {}

Workspace::Workspace(GridSpec grid, const Arrangement& arrangement) : Workspace(grid) {
  for (const auto& [load, cell] : arrangement.placement) place(load, cell);
}

std::optional<Cell> Workspace::find(Load load) const {
  if (load <= 0 || static_cast<std::size_t>(load) >= where_.size()) return std::nullopt;
  return where_[load];
}

void Workspace::place(Load load, Cell cell) {
  if (load <= 0) throw Error(ErrorCode::InvalidArgument, "load labels are positive");
  if (!in_bounds(grid_, cell)) throw Error(ErrorCode::OutOfBounds, "cell " + to_string(cell) + " out of bounds");
  if (!empty(cell)) throw Error(ErrorCode::CellOccupied, "cell " + to_string(cell) + " occupied");
  if (contains(load)) throw Error(ErrorCode::LoadAlreadyPresent, "load " + std::to_string(load) + " already placed");
  if (static_cast<std::size_t>(load) >= where_.size()) where_.resize(static_cast<std::size_t>(load) + 1);
  where_[load] = cell;
  cells_[index(cell)] = load;
  ++count_;
}

void Workspace::remove(Load load) {
  auto cell = find(load);
  if (!cell) throw Error(ErrorCode::LoadNotPresent, "load " + std::to_string(load) + " not present");
  cells_[index(*cell)] = kNoLoad;
  where_[load].reset();
  --count_;
}

Arrangement Workspace::arrangement() const {
  Arrangement out;
  for (std::size_t load = 1; load < where_.size(); ++load) {
    if (where_[load]) out.placement.emplace(static_cast<Load>(load), *where_[load]);
  }
  return out;
}

std::vector<Cell> neighbors(const GridSpec& grid, Cell cell) {
  std::vector<Cell> out;
  out.reserve(4);
  const Cell candidates[] = {{cell.row - 1, cell.col}, {cell.row, cell.col - 1},
                             {cell.row, cell.col + 1}, {cell.row + 1, cell.col}};
  for (Cell c : candidates) {
    if (in_bounds(grid, c)) out.push_back(c);
  }
  return out;
}

std::string describe(const Violation& violation) {
  std::string out(error_code_name(violation.code));
  out += " at path index " + std::to_string(violation.path_index);
  if (violation.cell) out += " cell " + to_string(*violation.cell);
  if (!violation.detail.empty()) out += ": " + violation.detail;
  return out;
}

std::optional<Violation> validate_action(const Workspace& state, const Action& action) {
  const auto& path = action.path;
  const auto& grid = state.grid();
  if (path.empty()) return Violation{ErrorCode::EmptyPath, 0, std::nullopt, "path has no cells"};

  std::optional<Cell> origin;
  if (action.kind == ActionKind::Store) {
    if (state.contains(action.load)) {
      return Violation{ErrorCode::LoadAlreadyPresent, 0, state.find(action.load),
                       "load " + std::to_string(action.load) + " is already stored"};
    }
  } else {
    origin = state.find(action.load);
    if (!origin) {
      return Violation{ErrorCode::LoadNotPresent, 0, std::nullopt,
                       "load " + std::to_string(action.load) + " is not in the workspace"};
    }
  }

  for (std::size_t i = 0; i < path.size(); ++i) {
    if (!in_bounds(grid, path[i])) return Violation{ErrorCode::OutOfBounds, i, path[i], ""};
    if (i > 0 && !are_adjacent(path[i - 1], path[i])) return Violation{ErrorCode::NotAdjacentStep, i, path[i], ""};
  }

  const std::size_t last = path.size() - 1;
  switch (action.kind) {
    case ActionKind::Store:
      if (!is_front(path.front())) return Violation{ErrorCode::WrongEndpoint, 0, path.front(), "store must enter from the front row"};
      break;
    case ActionKind::Retrieve:
      if (path.front() != *origin) return Violation{ErrorCode::WrongEndpoint, 0, path.front(), "retrieve must start at the load's cell"};
      if (!is_front(path.back())) return Violation{ErrorCode::WrongEndpoint, last, path.back(), "retrieve must exit through the front row"};
      break;
    case ActionKind::Relocate:
      if (path.front() != *origin) return Violation{ErrorCode::WrongEndpoint, 0, path.front(), "relocate must start at the load's cell"};
      if (path.back() == *origin) return Violation{ErrorCode::WrongEndpoint, last, path.back(), "relocate must change the load's cell"};
      break;
  }

  for (std::size_t i = 0; i < path.size(); ++i) {
    if (origin && path[i] == *origin) continue;
    if (!state.empty(path[i])) {
      return Violation{ErrorCode::CellOccupied, i, path[i], "occupied by load " + std::to_string(state.at(path[i]))};
    }
  }
  return std::nullopt;
}

void apply_action(Workspace& state, const Action& action) {
  if (auto violation = validate_action(state, action)) {
    throw Error(violation->code, describe(*violation));
  }
  switch (action.kind) {
    case ActionKind::Store:
      state.place(action.load, action.destination());
      break;
    case ActionKind::Retrieve:
      state.remove(action.load);
      break;
    case ActionKind::Relocate:
      state.remove(action.load);
      state.place(action.load, action.destination());
      break;
  }
}

Metrics execute_plan(const Instance& instance, const Plan& plan) {
  validate_instance(instance);
  const auto& actions = plan.actions;
  if (actions.empty()) throw PlanError(ErrorCode::IncompletePlan, 0, "plan has no actions");

  const std::size_t n = instance.load_count();
  Workspace state(instance.grid);
  std::size_t next_store = 0;
  std::size_t next_retrieve = 0;
  std::set<Load> out_of_grid;
  std::vector<std::size_t> per_load(n + 1, 0);
  Metrics metrics;
  std::size_t episode = 0;
  std::size_t closed_episode = 0;
  bool returning = false;
  std::optional<std::size_t> last_store;

  for (std::size_t i = 0; i < actions.size(); ++i) {
    const Action& action = actions[i];
    if (action.load < 1 || static_cast<std::size_t>(action.load) > n) {
      throw PlanError(ErrorCode::UnknownLoad, i, "action " + std::to_string(i) + ": unknown load " + std::to_string(action.load));
    }
    if (action.kind == ActionKind::Store && !action.temporary) {
      if (next_store >= n || instance.arrival[next_store] != action.load) {
        std::string expected = next_store < n ? std::to_string(instance.arrival[next_store]) : "none";
        throw PlanError(ErrorCode::OrderViolation, i,
                        "action " + std::to_string(i) + ": expected store of " + expected + ", got " + std::to_string(action.load));
      }
    } else if (action.kind == ActionKind::Retrieve && !action.temporary) {
      if (next_store < n) {
        throw PlanError(ErrorCode::OrderViolation, i,
                        "action " + std::to_string(i) + ": retrieve of " + std::to_string(action.load) +
                            " before storage of " + std::to_string(instance.arrival[next_store]));
      }
      if (next_retrieve >= n || instance.departure[next_retrieve] != action.load) {
        std::string expected = next_retrieve < n ? std::to_string(instance.departure[next_retrieve]) : "none";
        throw PlanError(ErrorCode::OrderViolation, i,
                        "action " + std::to_string(i) + ": expected retrieve of " + expected + ", got " + std::to_string(action.load));
      }
    } else if (action.kind == ActionKind::Store && action.temporary) {
      if (!out_of_grid.contains(action.load)) {
        throw PlanError(ErrorCode::OrderViolation, i,
                        "action " + std::to_string(i) + ": temporary store of load " + std::to_string(action.load) + " that never left");
      }
    } else if (action.kind == ActionKind::Relocate && action.temporary) {
      throw PlanError(ErrorCode::InvalidArgument, i, "action " + std::to_string(i) + ": relocations cannot be temporary");
    }

    if (auto violation = validate_action(state, action)) {
      throw PlanError(violation->code, i, "action " + std::to_string(i) + ": " + describe(*violation));
    }
    apply_action(state, action);

    const auto cells = static_cast<std::int64_t>(action.path.size());
    metrics.total_distance += cells;
    ++metrics.total_actions;
    ++per_load[action.load];
    switch (action.kind) {
      case ActionKind::Store:
        ++metrics.stores;
        metrics.store_distance += cells;
        if (action.temporary) {
          out_of_grid.erase(action.load);
        } else {
          ++next_store;
          last_store = i;
        }
        break;
      case ActionKind::Retrieve:
        ++metrics.retrieves;
        metrics.retrieve_distance += cells;
        if (action.temporary) out_of_grid.insert(action.load);
        else ++next_retrieve;
        break;
      case ActionKind::Relocate:
        ++metrics.relocations;
        metrics.relocate_distance += cells;
        break;
    }
    if (action.temporary) ++metrics.temporary_actions;

    // Blockers returning right after a departure belong to that departure's episode.
    if (next_store == n && !(action.kind == ActionKind::Store && !action.temporary)) {
      if (returning && action.kind == ActionKind::Store) {
        ++closed_episode;
      } else {
        returning = false;
        ++episode;
        if (action.kind == ActionKind::Retrieve && !action.temporary) {
          closed_episode = episode;
          episode = 0;
          returning = true;
        }
      }
      metrics.max_retrieval_episode_actions = std::max(metrics.max_retrieval_episode_actions, closed_episode);
    }
  }

  if (next_store != n || next_retrieve != n || !out_of_grid.empty()) {
    throw PlanError(ErrorCode::IncompletePlan, actions.size(),
                    "plan stored " + std::to_string(next_store) + "/" + std::to_string(n) + " and retrieved " +
                        std::to_string(next_retrieve) + "/" + std::to_string(n) + " loads");
  }
  metrics.max_actions_per_load = *std::max_element(per_load.begin(), per_load.end());
  metrics.retrieval_phase_actions = actions.size() - (last_store ? *last_store + 1 : 0);
  return metrics;
}

bool is_column_adjacent(std::span<const Cell> path) {
  int horizontal = 0;
  for (std::size_t i = 1; i < path.size(); ++i) {
    if (path[i].row == path[i - 1].row) {
      if (path[i].col - path[i - 1].col != 1 && path[i - 1].col - path[i].col != 1) return false;
      ++horizontal;
    }
  }
  return horizontal <= 1;
}

namespace {

// Position of each load in seq; throws LabelMismatch unless seq lists exactly the arranged loads.
std::map<Load, std::size_t> check_labels(const Arrangement& arrangement, const std::vector<Load>& seq) {
  if (seq.size() != arrangement.placement.size()) {
    throw Error(ErrorCode::LabelMismatch, "sequence and arrangement hold different numbers of loads");
  }
  std::map<Load, std::size_t> position;
  for (std::size_t i = 0; i < seq.size(); ++i) {
    if (!arrangement.placement.contains(seq[i]) || !position.emplace(seq[i], i).second) {
      throw Error(ErrorCode::LabelMismatch, "load " + std::to_string(seq[i]) + " does not match the arrangement");
    }
  }
  return position;
}

}  // namespace

bool satisfies_departure(const Arrangement& arrangement, const std::vector<Load>& seq) {
  const auto& placement = arrangement.placement;
  const auto position = check_labels(arrangement, seq);
  std::map<Cell, Load> occupant;
  for (const auto& [load, cell] : placement) occupant.emplace(cell, load);

  for (std::size_t i = 0; i < seq.size(); ++i) {
    Cell cell = placement.at(seq[i]);
    if (is_front(cell)) continue;
    const Cell around[] = {{cell.row - 1, cell.col}, {cell.row + 1, cell.col},
                           {cell.row, cell.col - 1}, {cell.row, cell.col + 1}};
    bool ok = false;
    for (Cell c : around) {
      auto it = occupant.find(c);
      if (it != occupant.end() && position.at(it->second) < i) {
        ok = true;
        break;
      }
    }
    if (!ok) return false;
  }
  return true;
}

bool satisfies_departure(const GridSpec& grid, const Arrangement& arrangement, const std::vector<Load>& seq) {
  check_labels(arrangement, seq);
  Workspace state(grid, arrangement);
  const auto size = static_cast<std::size_t>(grid.cell_count());
  std::vector<bool> open(size, false);
  std::vector<Cell> stack;
  auto flood = [&](Cell from) {
    open[state.index(from)] = true;
    stack.push_back(from);
    while (!stack.empty()) {
      Cell at = stack.back();
      stack.pop_back();
      for (Cell next : neighbors(grid, at)) {
        if (open[state.index(next)] || !state.empty(next)) continue;
        open[state.index(next)] = true;
        stack.push_back(next);
      }
    }
  };
  for (int col = 1; col <= grid.cols; ++col) {
    Cell front{1, col};
    if (state.empty(front) && !open[state.index(front)]) flood(front);
  }
  for (Load load : seq) {
    Cell cell = *state.find(load);
    bool ok = is_front(cell);
    for (Cell next : neighbors(grid, cell)) ok = ok || open[state.index(next)];
    if (!ok) return false;
    state.remove(load);
    flood(cell);
  }
  return true;
}

std::vector<Load> reverse_sequence(const std::vector<Load>& seq) { return {seq.rbegin(), seq.rend()}; }

int compute_depth(const GridSpec& grid, const Arrangement& arrangement) {
  if (arrangement.placement.empty()) return 0;
  Workspace state(grid, arrangement);
  const std::size_t size = static_cast<std::size_t>(grid.cell_count());
  constexpr int kInf = std::numeric_limits<int>::max();

  // dist[v]: fewest occupied cells on a path from v to the front row, v included.
  std::vector<int> dist(size, kInf);
  std::deque<std::size_t> queue;
  for (int col = 1; col <= grid.cols; ++col) {
    Cell cell{1, col};
    std::size_t idx = state.index(cell);
    dist[idx] = state.empty(cell) ? 0 : 1;
    if (dist[idx] == 0) queue.push_front(idx);
    else queue.push_back(idx);
  }
  while (!queue.empty()) {
    std::size_t idx = queue.front();
    queue.pop_front();
    Cell cell = state.cell_at(idx);
    for (Cell next : neighbors(grid, cell)) {
      std::size_t nidx = state.index(next);
      int weight = state.empty(next) ? 0 : 1;
      if (dist[idx] + weight < dist[nidx]) {
        dist[nidx] = dist[idx] + weight;
        if (weight == 0) queue.push_front(nidx);
        else queue.push_back(nidx);
      }
    }
  }

  int worst = 0;
  for (const auto& [load, cell] : arrangement.placement) {
    int blockers = 0;
    if (!is_front(cell)) {
      blockers = kInf;
      for (Cell next : neighbors(grid, cell)) blockers = std::min(blockers, dist[state.index(next)]);
    }
    worst = std::max(worst, blockers);
  }
  return worst + 1;
}

}  // namespace gridstore
