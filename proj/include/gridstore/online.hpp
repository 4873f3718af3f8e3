#ifndef GRIDSTORE_ONLINE_HPP_
#define GRIDSTORE_ONLINE_HPP_

#include <cstdint>
#include <set>
#include <string>
#include <vector>

#include "gridstore/grid.hpp"
#include "gridstore/paths.hpp"

namespace gridstore {

// Exact non-negative fraction in lowest terms.
struct Rational {
  std::int64_t num = 0;
  std::int64_t den = 1;

  static Rational of(std::int64_t num, std::int64_t den);
  double value() const { return static_cast<double>(num) / static_cast<double>(den); }
  std::string str() const { return std::to_string(num) + "/" + std::to_string(den); }
  friend bool operator==(const Rational&, const Rational&) = default;
};

// Upper bound 2k/(2k+1) on the density of any depth-k arrangement.
Rational max_density(int k);

struct AisleLayout {
  GridSpec grid;
  int depth = 1;
  std::set<int> aisle_columns;
  // Reserved empty cells for relocated blockers; filled last.
  std::vector<Cell> buffer_cells;
  // Storage cells in fill order, buffer cells at the end.
  std::vector<Cell> storage_cells;

  bool is_aisle(Cell cell) const { return aisle_columns.contains(cell.col); }
  Rational density() const { return Rational::of(static_cast<std::int64_t>(storage_cells.size()), grid.cell_count()); }
};

// Groups of 2k+1 columns with the middle one left empty; a narrower trailing
// group gets its aisle at position min(k+1, width). Throws TooNarrow if c < 2k+1.
AisleLayout aisle_layout(const GridSpec& grid, int k);

// aisle_layout with `buffer` cells next to the leftmost aisle set aside, back rows first.
AisleLayout aisle_layout(const GridSpec& grid, int k, int buffer);

// Largest n for which the fully online policy keeps every retrieval within `budget` actions.
int capacity_with_budget(const GridSpec& grid, int budget);

// Store/retrieve policy that knows only n: loads go into an aisle layout of
// depth `budget`. A departure relocates blockers into empty non-aisle cells so
// the aisles are empty again afterwards. When no route can be cleared within
// the budget (a full aisle region has nowhere to park), the cheapest route
// found is used instead, and as a last resort blockers step out of the grid
// and come back as temporary actions.
class OnlinePolicy {
 public:
  OnlinePolicy(GridSpec grid, int n, int budget);

  Action on_arrival(Load load);
  std::vector<Action> on_departure(Load load);

  const AisleLayout& layout() const { return layout_; }
  const Workspace& state() const { return state_; }
  int budget() const { return budget_; }
  bool aisles_empty() const;

 private:
  // BFS distance of every empty cell from the aisles; -1 if cut off.
  std::vector<int> aisle_distances() const;
  bool holes_reachable() const;
  // Empty non-aisle cell reachable from `from` and not in `reserved`, the one
  // farthest from the aisles.
  std::optional<Cell> parking_cell(Cell from, const std::set<Cell>& reserved) const;
  // Parks the blockers of `route` and retrieves; leaves the state untouched on failure.
  std::optional<std::vector<Action>> try_route(Load load, Cell where, const BlockedRoute& route);
  // Blockers leave the grid and come back along the same path.
  std::vector<Action> carry_out(Load load, Cell where);

  AisleLayout layout_;
  Workspace state_;
  int n_;
  int budget_;
  int stored_ = 0;
  std::size_t fill_cursor_ = 0;
};

// Replays instance.arrival and instance.departure through an OnlinePolicy.
Plan plan_online(const Instance& instance, int budget);

}  // namespace gridstore

#endif  // GRIDSTORE_ONLINE_HPP_
