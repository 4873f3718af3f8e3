#ifndef GRIDSTORE_ORACLE_HPP_
#define GRIDSTORE_ORACLE_HPP_

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "gridstore/grid.hpp"

namespace gridstore {

struct SearchStats {
  std::uint64_t nodes = 0;
  std::uint64_t pruned = 0;
};

struct FeasibilityResult {
  bool feasible = false;
  // Satisfies both the departure order and the reversed arrival order.
  std::optional<Arrangement> witness;
  SearchStats stats;
};

inline constexpr std::size_t kMaxOracleLoads = 12;

// Exhaustive search for an arrangement satisfying the departure sequence and
// the reversed arrival sequence, i.e. a zero-relocation solution.
// Throws TooLarge for more than kMaxOracleLoads loads.
FeasibilityResult brute_force_feasible(const Instance& instance);

struct CharacterizationReport {
  int rows = 0;
  int cols = 0;
  std::uint64_t total = 0;
  std::uint64_t infeasible = 0;
  std::optional<std::vector<Load>> sample_infeasible;
  // Permutations whose column-fill arrangement failed verification (c >= 3 only).
  std::uint64_t column_fill_failures = 0;
  bool column_fill_checked = false;
};

// Runs the oracle on every arrival permutation at full capacity (r*c <= 9).
// For c >= 3 also checks the column-fill arrangement of each permutation.
// `threads` = 0 picks the hardware concurrency.
CharacterizationReport exhaustive_characterization(int rows, int cols, unsigned threads = 0);

std::string characterization_csv_header();
std::string characterization_csv_row(const CharacterizationReport& report);

// 2 x (sum of row indices of the n front-most cells): every load is stored
// and retrieved along a path of at least `row` cells.
std::int64_t distance_lower_bound(const GridSpec& grid, std::size_t n);

}  // namespace gridstore

#endif  // GRIDSTORE_ORACLE_HPP_
