#ifndef GRIDSTORE_TYPES_HPP_
#define GRIDSTORE_TYPES_HPP_

#include <compare>
#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace gridstore {

// Loads are labeled 1..n. Zero marks an empty cell.
using Load = int;
inline constexpr Load kNoLoad = 0;

enum class ErrorCode {
  OutOfBounds,
  NotAdjacentStep,
  CellOccupied,
  WrongEndpoint,
  LoadNotPresent,
  LoadAlreadyPresent,
  EmptyPath,
  OrderViolation,
  IncompletePlan,
  LabelMismatch,
  HeightOverflow,
  TooManyLoads,
  NarrowGrid,
  NoPath,
  TooDense,
  ShapeError,
  CountMismatch,
  LookaheadExceeded,
  TooNarrow,
  CapacityExceeded,
  UnknownLoad,
  NoPlacement,
  TooLarge,
  InvalidInstance,
  ParseError,
  InvalidArgument,
};

std::string_view error_code_name(ErrorCode code);

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message)
      : std::runtime_error(message), code_(code) {}

  ErrorCode code() const { return code_; }

 private:
  ErrorCode code_;
};

struct GridSpec {
  int rows = 1;
  int cols = 1;

  int cell_count() const { return rows * cols; }
  friend bool operator==(const GridSpec&, const GridSpec&) = default;
};

// Row 1 is the open front row, column 1 is the leftmost column.
struct Cell {
  int row = 1;
  int col = 1;

  friend auto operator<=>(const Cell&, const Cell&) = default;
};

inline bool in_bounds(const GridSpec& grid, Cell cell) {
  return cell.row >= 1 && cell.row <= grid.rows && cell.col >= 1 && cell.col <= grid.cols;
}

inline bool is_front(Cell cell) { return cell.row == 1; }

inline bool are_adjacent(Cell a, Cell b) {
  int dr = a.row - b.row;
  int dc = a.col - b.col;
  return (dr == 0 && (dc == 1 || dc == -1)) || (dc == 0 && (dr == 1 || dr == -1));
}

std::string to_string(Cell cell);

using Path = std::vector<Cell>;

struct Instance {
  GridSpec grid;
  std::vector<Load> arrival;
  std::vector<Load> departure;
  std::optional<int> lookahead;
  std::optional<int> budget;

  std::size_t load_count() const { return arrival.size(); }
  friend bool operator==(const Instance&, const Instance&) = default;
};

// Checks the permutation and capacity invariants; fills an omitted departure
// sequence with the identity. Throws Error{InvalidInstance}.
Instance make_instance(GridSpec grid, std::vector<Load> arrival, std::vector<Load> departure = {},
                       std::optional<int> lookahead = std::nullopt,
                       std::optional<int> budget = std::nullopt);
void validate_instance(const Instance& instance);

// rank[label] = 1-based position of label in seq; rank[0] unused.
std::vector<int> ranks_of(const std::vector<Load>& seq);

struct Arrangement {
  std::map<Load, Cell> placement;

  friend bool operator==(const Arrangement&, const Arrangement&) = default;
};

enum class ActionKind { Store, Retrieve, Relocate };

std::string_view action_kind_name(ActionKind kind);
std::optional<ActionKind> parse_action_kind(std::string_view name);

struct Action {
  ActionKind kind = ActionKind::Store;
  Load load = kNoLoad;
  Path path;
  // Baseline out-of-grid excursions: a blocker leaving the grid and coming back.
  bool temporary = false;

  Cell origin() const { return path.front(); }
  Cell destination() const { return path.back(); }
  friend bool operator==(const Action&, const Action&) = default;
};

struct Plan {
  std::vector<Action> actions;

  friend bool operator==(const Plan&, const Plan&) = default;
};

struct Metrics {
  std::size_t stores = 0;
  std::size_t retrieves = 0;
  std::size_t relocations = 0;
  std::size_t temporary_actions = 0;
  std::size_t total_actions = 0;
  std::int64_t total_distance = 0;
  std::int64_t store_distance = 0;
  std::int64_t retrieve_distance = 0;
  std::int64_t relocate_distance = 0;
  std::size_t max_actions_per_load = 0;
  // Actions spent on one departure: everything since the previous departure,
  // the departure itself, and blockers returning right after it.
  std::size_t max_retrieval_episode_actions = 0;
  // Everything after the last non-temporary store.
  std::size_t retrieval_phase_actions = 0;
};

}  // namespace gridstore

#endif  // GRIDSTORE_TYPES_HPP_
