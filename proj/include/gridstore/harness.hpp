#ifndef GRIDSTORE_HARNESS_HPP_
#define GRIDSTORE_HARNESS_HPP_

#include <cstdint>
#include <string>
#include <vector>

#include "gridstore/grid.hpp"

namespace gridstore {

// Uniform random arrival order, identity departure. The permutation is a
// Fisher-Yates shuffle driven by std::mt19937_64 seeded through
// std::seed_seq{seed_lo, seed_hi, rows, cols, n} with rejection-sampled
// bounded draws, so instances are identical across platforms.
Instance generate_instance(const GridSpec& grid, std::size_t n, std::uint64_t seed);

// Planners reachable by name: offline, lookahead, sparse, lpaths, online,
// baseline, auto. `budget` is used by online only.
Plan run_planner(const std::string& algorithm, const Instance& instance, int budget = 1);
bool is_known_algorithm(const std::string& algorithm);

struct BenchConfig {
  std::vector<int> sizes{10, 15};
  int seeds_per_size = 25;
  std::vector<std::string> algorithms{"offline", "baseline"};
  std::uint64_t seed_base = 0;
  int online_budget = 1;
};

void validate_bench_config(const BenchConfig& config);

struct BenchRow {
  int m = 0;
  std::string algorithm;
  std::size_t n = 0;
  int instances = 0;
  double mean_actions = 0;          // retrieval phase
  double mean_total_actions = 0;
  double mean_relocations = 0;
  double mean_distance = 0;
  double action_suboptimality = 0;    // mean actions / n - 1
  double distance_suboptimality = 0;  // mean distance / lower bound - 1
  std::uint64_t min_actions = 0;
  std::uint64_t max_actions = 0;
};

// Square m x m grids. offline, lookahead, lpaths and baseline run at full
// capacity; sparse at m(m-1)+1 loads and online at its budget capacity.
std::vector<BenchRow> run_benchmark(const BenchConfig& config);
std::string bench_csv(const std::vector<BenchRow>& rows);

// a, numerator, denominator, decimal value of 2a/(2a+1) for a = 1..max_budget.
std::string density_curve_csv(int max_budget);

// One JSON line per action with the occupancy after it (rows front first).
// Throws the executor's PlanError for invalid plans.
std::string export_trace(const Instance& instance, const Plan& plan);

}  // namespace gridstore

#endif  // GRIDSTORE_HARNESS_HPP_
