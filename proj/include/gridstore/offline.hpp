#ifndef GRIDSTORE_OFFLINE_HPP_
#define GRIDSTORE_OFFLINE_HPP_

#include <array>
#include <vector>

#include "gridstore/grid.hpp"
#include "gridstore/stream.hpp"

namespace gridstore {

// Target fill heights of the three columns handed to the three-column fill.
struct ColumnHeights {
  int left = 0;
  int middle = 0;
  int right = 0;
};

enum class FillCompletion {
  // Left and middle columns filled first; the right column takes the rest of [n].
  SideColumnsFirst,
  // Right column filled first; middle takes the rest of d_prime, left the rest of [n].
  RightColumnFirst,
};

struct ThreeColumnFill {
  // Labels per column, bottom-up. Column 0 is the leftmost.
  std::array<std::vector<Load>, 3> columns;
  FillCompletion completion = FillCompletion::SideColumnsFirst;
  // Joint iterations over [n] and d_prime before one of the columns filled up.
  int joint_steps = 0;
  // Loads in each column when the joint stage ended.
  std::array<int, 3> after_joint_stage{};

  // Places column j at grid column `first_col + j`, bottom row first.
  Arrangement arrangement(int first_col = 1) const;
};

// Builds an arrangement of loads 1..n in three columns that satisfies both the
// departure order (1..n) and d_prime. Runs in O(n).
// Throws HeightOverflow for heights that the fill cannot honor.
ThreeColumnFill three_column_fill(const std::vector<Load>& d_prime, int rows, ColumnHeights heights);

// Column-by-column assignment: full columns of r loads sorted by departure,
// then the three-column fill for the last at most 3r loads. Reads arrivals
// only through `stream` and never looks more than 3r-1 loads ahead.
// Throws NarrowGrid for fewer than three columns and TooManyLoads past capacity.
Arrangement assign_streaming_arrangement(const Instance& instance, ArrivalStream& stream);

Arrangement assign_offline_arrangement(const Instance& instance);

// Zero-relocation plan: stores in arrival order, retrieves in departure order,
// each along access_path / exit_path. Throws NoPath when the arrangement does
// not satisfy one of the sequences.
Plan plan_from_arrangement(const Instance& instance, const Arrangement& arrangement);

Plan plan_offline(const Instance& instance);

}  // namespace gridstore

#endif  // GRIDSTORE_OFFLINE_HPP_
