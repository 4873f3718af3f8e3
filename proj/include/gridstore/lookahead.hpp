#ifndef GRIDSTORE_LOOKAHEAD_HPP_
#define GRIDSTORE_LOOKAHEAD_HPP_

#include <optional>
#include <string>
#include <vector>

#include "gridstore/grid.hpp"
#include "gridstore/stream.hpp"

namespace gridstore {

// Partition of an r x c grid (r <= c) into c fill paths: the c-r leftmost
// columns, then nested L-shapes (left column + top row) of the remaining
// r x r square, ending with the bottom-right cell. Each path is ordered from
// its front-row cell inward.
struct LPathLayout {
  GridSpec grid;
  std::vector<Path> paths;
  // Index into paths[i] of its corner cell, for L-shapes of three or more cells.
  std::vector<std::optional<std::size_t>> corner;

  std::vector<Cell> corner_cells() const;
};

LPathLayout build_L_paths(const GridSpec& grid);

// Lookahead-1 plan for n <= r(c-1)+1: the earliest departure takes the front
// cell of the rightmost column, the next r the column to its left, and so on.
// Columns fill top-down. Throws TooDense.
Plan plan_sparse_lookahead1(ArrivalStream& stream, const Instance& instance);

// Lookahead-1 plan at n = r*c - skip, 0 <= skip <= r-1: loads fill the L-paths
// by departure rank; a corner load that is blocked at departure gets the load
// below it moved to the nearest empty cell from which nothing departing before
// it gets stuck. Throws ShapeError, CountMismatch.
Plan plan_L_lookahead1(ArrivalStream& stream, const Instance& instance, int skip);

// Same output as plan_offline, reading arrivals through a window of 3r-1.
Plan plan_lookahead_full(ArrivalStream& stream, const Instance& instance);

enum class Strategy { Sparse, LPaths, FullLookahead, None };

struct StrategyChoice {
  Strategy strategy = Strategy::None;
  int skip = 0;
  std::string reason;
};

std::string_view strategy_name(Strategy strategy);

StrategyChoice choose_strategy(const Instance& instance);

// Runs the chosen strategy with the window the strategy needs.
// Throws NoPlacement when no strategy applies.
Plan plan_with_strategy(const Instance& instance);

}  // namespace gridstore

#endif  // GRIDSTORE_LOOKAHEAD_HPP_
