#ifndef GRIDSTORE_GRID_HPP_
#define GRIDSTORE_GRID_HPP_

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "gridstore/types.hpp"

namespace gridstore {

// Mutable occupancy of the workspace: which load sits in which cell.
class Workspace {
 public:
  explicit Workspace(GridSpec grid);
  Workspace(GridSpec grid, const Arrangement& arrangement);

  const GridSpec& grid() const { return grid_; }

  Load at(Cell cell) const { return cells_[index(cell)]; }
  bool empty(Cell cell) const { return at(cell) == kNoLoad; }
  std::optional<Cell> find(Load load) const;
  bool contains(Load load) const { return find(load).has_value(); }
  std::size_t load_count() const { return count_; }

  void place(Load load, Cell cell);
  void remove(Load load);

  Arrangement arrangement() const;
  std::size_t index(Cell cell) const {
    return static_cast<std::size_t>((cell.row - 1) * grid_.cols + (cell.col - 1));
  }
  Cell cell_at(std::size_t index) const {
    return Cell{static_cast<int>(index) / grid_.cols + 1, static_cast<int>(index) % grid_.cols + 1};
  }

 private:
  GridSpec grid_;
  std::vector<Load> cells_;
  std::vector<std::optional<Cell>> where_;
  std::size_t count_ = 0;
};

struct Violation {
  ErrorCode code = ErrorCode::CellOccupied;
  std::size_t path_index = 0;
  std::optional<Cell> cell;
  std::string detail;
};

std::string describe(const Violation& violation);

// A plan violation found during replay, tagged with the offending action.
class PlanError : public Error {
 public:
  PlanError(ErrorCode code, std::size_t action_index, const std::string& message)
      : Error(code, message), action_index_(action_index) {}

  std::size_t action_index() const { return action_index_; }

 private:
  std::size_t action_index_;
};

std::optional<Violation> validate_action(const Workspace& state, const Action& action);

// Validates then applies; the state is untouched when validation fails.
void apply_action(Workspace& state, const Action& action);

// Replays the plan from the empty workspace and checks the store/retrieve
// orders against the instance. Temporary actions are exempt from the order
// checks but must leave every load back in the grid before it departs.
Metrics execute_plan(const Instance& instance, const Plan& plan);

// At most one horizontal step; purely vertical paths qualify.
bool is_column_adjacent(std::span<const Cell> path);

// Local adjacency: each load is in the front row or next to an earlier load of seq.
bool satisfies_departure(const Arrangement& arrangement, const std::vector<Load>& seq);

// Same question on a partly empty grid: an empty cell that the front row can
// reach counts like an earlier departure. Agrees with the two-argument form
// when every cell is occupied.
bool satisfies_departure(const GridSpec& grid, const Arrangement& arrangement, const std::vector<Load>& seq);

std::vector<Load> reverse_sequence(const std::vector<Load>& seq);

int compute_depth(const GridSpec& grid, const Arrangement& arrangement);

std::vector<Cell> neighbors(const GridSpec& grid, Cell cell);

}  // namespace gridstore

#endif  // GRIDSTORE_GRID_HPP_
