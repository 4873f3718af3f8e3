#include "gridstore/harness.hpp"

#include <algorithm>
#include <cstdio>
#include <limits>
#include <numeric>
#include <random>
#include <sstream>

#include "gridstore/baseline.hpp"
#include "gridstore/io.hpp"
#include "gridstore/lookahead.hpp"
#include "gridstore/offline.hpp"
#include "gridstore/online.hpp"
#include "gridstore/oracle.hpp"

namespace gridstore {
namespace {

// Uniform draw in [0, bound) by rejecting the biased low range.
std::uint64_t bounded(std::mt19937_64& gen, std::uint64_t bound) {
  const std::uint64_t threshold = (0 - bound) % bound;
  std::uint64_t x = gen();
  while (x < threshold) x = gen();
  return x % bound;
}

std::string fixed(double value, int digits = 4) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.*f", digits, value);
  return buf;
}

std::size_t bench_load_count(const std::string& algorithm, int m, int budget) {
  const GridSpec grid{m, m};
  if (algorithm == "sparse") return static_cast<std::size_t>(m * (m - 1) + 1);
  if (algorithm == "online") return static_cast<std::size_t>(capacity_with_budget(grid, budget));
  return static_cast<std::size_t>(grid.cell_count());
}

const std::vector<std::string>& algorithm_names() {
  static const std::vector<std::string> names{"offline", "lookahead", "sparse", "lpaths", "online", "baseline", "auto"};
  return names;
}

}  // namespace

Instance generate_instance(const GridSpec& grid, std::size_t n, std::uint64_t seed) {
  if (n < 1 || grid.rows < 1 || grid.cols < 1 || n > static_cast<std::size_t>(grid.cell_count())) {
    throw Error(ErrorCode::InvalidInstance, "need 1 <= n <= rows*cols");
  }
  std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                    static_cast<std::uint32_t>(grid.rows), static_cast<std::uint32_t>(grid.cols),
                    static_cast<std::uint32_t>(n)};
  std::mt19937_64 gen(seq);
  std::vector<Load> arrival(n);
  std::iota(arrival.begin(), arrival.end(), 1);
  for (std::size_t i = n - 1; i > 0; --i) {
    auto j = static_cast<std::size_t>(bounded(gen, i + 1));
    std::swap(arrival[i], arrival[j]);
  }
  return make_instance(grid, std::move(arrival));
}

bool is_known_algorithm(const std::string& algorithm) {
  const auto& names = algorithm_names();
  return std::find(names.begin(), names.end(), algorithm) != names.end();
}

Plan run_planner(const std::string& algorithm, const Instance& instance, int budget) {
  const int r = instance.grid.rows;
  if (algorithm == "offline") return plan_offline(instance);
  if (algorithm == "lookahead") {
    ArrivalStream stream(instance.arrival, static_cast<std::size_t>(std::max(1, 3 * r - 1)));
    return plan_lookahead_full(stream, instance);
  }
  if (algorithm == "sparse") {
    ArrivalStream stream(instance.arrival, 1);
    return plan_sparse_lookahead1(stream, instance);
  }
  if (algorithm == "lpaths") {
    ArrivalStream stream(instance.arrival, 1);
    int skip = instance.grid.cell_count() - static_cast<int>(instance.load_count());
    return plan_L_lookahead1(stream, instance, skip);
  }
  if (algorithm == "online") return plan_online(instance, budget);
  if (algorithm == "baseline") return plan_baseline(instance);
  if (algorithm == "auto") return plan_with_strategy(instance);
  throw Error(ErrorCode::InvalidArgument, "unknown algorithm '" + algorithm + "'");
}

void validate_bench_config(const BenchConfig& config) {
  if (config.sizes.empty()) throw Error(ErrorCode::InvalidArgument, "no sizes given");
  for (int m : config.sizes) {
    if (m < 2) throw Error(ErrorCode::InvalidArgument, "sizes must be >= 2");
  }
  if (config.seeds_per_size < 1) throw Error(ErrorCode::InvalidArgument, "seeds_per_size must be >= 1");
  if (config.algorithms.empty()) throw Error(ErrorCode::InvalidArgument, "no algorithms given");
  for (const auto& name : config.algorithms) {
    if (!is_known_algorithm(name) || name == "auto") throw Error(ErrorCode::InvalidArgument, "unknown algorithm '" + name + "'");
  }
  if (config.online_budget < 1) throw Error(ErrorCode::InvalidArgument, "online budget must be >= 1");
}

std::vector<BenchRow> run_benchmark(const BenchConfig& config) {
  validate_bench_config(config);
  std::vector<BenchRow> rows;
  for (int m : config.sizes) {
    const GridSpec grid{m, m};
    for (const auto& algorithm : config.algorithms) {
      BenchRow row;
      row.m = m;
      row.algorithm = algorithm;
      try {
        row.n = bench_load_count(algorithm, m, config.online_budget);
      } catch (const Error& e) {
        throw Error(e.code(), "m=" + std::to_string(m) + " algorithm=" + algorithm + ": " + e.what());
      }
      const auto lower = static_cast<double>(distance_lower_bound(grid, row.n));
      double actions = 0, total = 0, relocations = 0, distance = 0;
      row.min_actions = std::numeric_limits<std::uint64_t>::max();
      for (int s = 0; s < config.seeds_per_size; ++s) {
        const std::uint64_t seed = config.seed_base + static_cast<std::uint64_t>(s);
        try {
          Instance instance = generate_instance(grid, row.n, seed);
          Metrics metrics = execute_plan(instance, run_planner(algorithm, instance, config.online_budget));
          actions += static_cast<double>(metrics.retrieval_phase_actions);
          total += static_cast<double>(metrics.total_actions);
          relocations += static_cast<double>(metrics.relocations);
          distance += static_cast<double>(metrics.total_distance);
          row.min_actions = std::min<std::uint64_t>(row.min_actions, metrics.retrieval_phase_actions);
          row.max_actions = std::max<std::uint64_t>(row.max_actions, metrics.retrieval_phase_actions);
        } catch (const Error& e) {
          throw Error(e.code(), "m=" + std::to_string(m) + " seed=" + std::to_string(seed) + " algorithm=" + algorithm + ": " + e.what());
        }
      }
      const double count = config.seeds_per_size;
      row.instances = config.seeds_per_size;
      row.mean_actions = actions / count;
      row.mean_total_actions = total / count;
      row.mean_relocations = relocations / count;
      row.mean_distance = distance / count;
      row.action_suboptimality = row.mean_actions / static_cast<double>(row.n) - 1.0;
      row.distance_suboptimality = row.mean_distance / lower - 1.0;
      rows.push_back(row);
    }
  }
  return rows;
}

std::string bench_csv(const std::vector<BenchRow>& rows) {
  std::ostringstream out;
  out << "m,algorithm,n,instances,mean_actions,min_actions,max_actions,mean_total_actions,mean_relocations,"
         "mean_distance,action_suboptimality,distance_suboptimality\n";
  for (const auto& row : rows) {
    out << row.m << ',' << row.algorithm << ',' << row.n << ',' << row.instances << ',' << fixed(row.mean_actions) << ','
        << row.min_actions << ',' << row.max_actions << ',' << fixed(row.mean_total_actions) << ','
        << fixed(row.mean_relocations) << ',' << fixed(row.mean_distance) << ',' << fixed(row.action_suboptimality) << ','
        << fixed(row.distance_suboptimality) << '\n';
  }
  return out.str();
}

std::string density_curve_csv(int max_budget) {
  if (max_budget < 1) throw Error(ErrorCode::InvalidArgument, "max budget must be >= 1");
  std::ostringstream out;
  out << "a,numerator,denominator,density\n";
  for (int a = 1; a <= max_budget; ++a) {
    Rational d = max_density(a);
    out << a << ',' << d.num << ',' << d.den << ',' << fixed(d.value(), 6) << '\n';
  }
  return out.str();
}

std::string export_trace(const Instance& instance, const Plan& plan) {
  execute_plan(instance, plan);
  Workspace state(instance.grid);
  std::string out;
  for (std::size_t i = 0; i < plan.actions.size(); ++i) {
    const Action& action = plan.actions[i];
    if (action.kind == ActionKind::Retrieve) state.remove(action.load);
    else if (action.kind == ActionKind::Store) state.place(action.load, action.destination());
    else {
      state.remove(action.load);
      state.place(action.load, action.destination());
    }
    nlohmann::json record = nlohmann::json::object();
    record["seq"] = i + 1;
    record["kind"] = std::string(action_kind_name(action.kind));
    record["load"] = action.load;
    nlohmann::json path = nlohmann::json::array();
    for (Cell cell : action.path) path.push_back(cell_to_json(cell));
    record["path"] = std::move(path);
    if (action.temporary) record["temporary"] = true;
    nlohmann::json occupancy = nlohmann::json::array();
    for (int r = 1; r <= instance.grid.rows; ++r) {
      nlohmann::json row = nlohmann::json::array();
      for (int c = 1; c <= instance.grid.cols; ++c) row.push_back(state.at(Cell{r, c}));
      occupancy.push_back(std::move(row));
    }
    record["occupancy"] = std::move(occupancy);
    out += dump(record);
  }
  return out;
}

}  // namespace gridstore
