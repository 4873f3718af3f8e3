// Command-line front end for the planners, validator and benchmark.

#include <cstdio>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "gridstore/harness.hpp"
#include "gridstore/io.hpp"
#include "gridstore/lookahead.hpp"
#include "gridstore/oracle.hpp"

using namespace gridstore;
using nlohmann::json;

namespace {

json metrics_to_json(const Metrics& m) {
  return json{{"stores", m.stores},
              {"retrieves", m.retrieves},
              {"relocations", m.relocations},
              {"temporary_actions", m.temporary_actions},
              {"total_actions", m.total_actions},
              {"total_distance", m.total_distance},
              {"retrieval_phase_actions", m.retrieval_phase_actions},
              {"max_actions_per_load", m.max_actions_per_load},
              {"max_retrieval_episode_actions", m.max_retrieval_episode_actions}};
}

void emit(const std::string& out, const std::string& text) {
  if (out.empty() || out == "-") std::cout << text;
  else write_text_file(out, text);
}

std::vector<std::string> split(const std::string& text) {
  std::vector<std::string> parts;
  std::stringstream in(text);
  for (std::string item; std::getline(in, item, ',');) {
    if (!item.empty()) parts.push_back(item);
  }
  return parts;
}

int report_error(const std::string& code, const std::string& message) {
  std::cerr << dump(json{{"error", code}, {"message", message}});
  return 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"grid storage and retrieval planner"};
  app.require_subcommand(1);

  std::string instance_file, plan_file, out_file, algo = "offline";
  int budget = 0;
  auto* plan_cmd = app.add_subcommand("plan", "compute a plan for an instance");
  plan_cmd->add_option("--algo", algo, "offline, lookahead, sparse, lpaths, online, baseline or auto")
      ->check(CLI::IsMember({"offline", "lookahead", "sparse", "lpaths", "online", "baseline", "auto"}));
  plan_cmd->add_option("--instance", instance_file)->required();
  plan_cmd->add_option("--out", out_file);
  plan_cmd->add_option("--budget", budget, "online action budget (default: instance budget or 1)");

  auto* validate_cmd = app.add_subcommand("validate", "replay a plan and print its metrics");
  validate_cmd->add_option("--instance", instance_file)->required();
  validate_cmd->add_option("--plan", plan_file)->required();

  std::string sizes = "10,15", algos = "offline,baseline";
  int seeds = 25, bench_budget = 1;
  std::uint64_t seed = 0;
  auto* bench_cmd = app.add_subcommand("bench", "benchmark on random square grids");
  bench_cmd->add_option("--sizes", sizes);
  bench_cmd->add_option("--seeds", seeds);
  bench_cmd->add_option("--algos", algos);
  bench_cmd->add_option("--seed", seed);
  bench_cmd->add_option("--budget", bench_budget, "action budget of the online rows");
  bench_cmd->add_option("--out", out_file);

  auto* oracle_cmd = app.add_subcommand("oracle", "decide whether a relocation-free plan exists");
  oracle_cmd->add_option("--instance", instance_file)->required();

  int rows = 0, cols = 0;
  unsigned threads = 0;
  auto* characterize_cmd = app.add_subcommand("characterize", "run the oracle on every full-capacity arrival order");
  characterize_cmd->add_option("--rows", rows)->required();
  characterize_cmd->add_option("--cols", cols)->required();
  characterize_cmd->add_option("--threads", threads);

  int max_budget = 9;
  auto* density_cmd = app.add_subcommand("density-curve", "density bound per retrieval budget");
  density_cmd->add_option("--max-budget", max_budget);
  density_cmd->add_option("--out", out_file);

  auto* trace_cmd = app.add_subcommand("trace", "per-action occupancy snapshots");
  trace_cmd->add_option("--instance", instance_file)->required();
  trace_cmd->add_option("--plan", plan_file)->required();
  trace_cmd->add_option("--out", out_file);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) return app.exit(e);
    std::cerr << dump(json{{"error", "InvalidArgument"}, {"message", e.what()}});
    return 2;
  }

  try {
    if (*plan_cmd) {
      Instance instance = instance_from_json(read_json_file(instance_file));
      int a = budget > 0 ? budget : instance.budget.value_or(1);
      emit(out_file, dump(plan_to_json(run_planner(algo, instance, a))));
    } else if (*validate_cmd) {
      Instance instance = instance_from_json(read_json_file(instance_file));
      Plan plan = plan_from_json(read_json_file(plan_file));
      Metrics metrics = execute_plan(instance, plan);
      std::cout << dump(json{{"valid", true}, {"metrics", metrics_to_json(metrics)}});
    } else if (*bench_cmd) {
      BenchConfig config;
      config.sizes.clear();
      for (const auto& s : split(sizes)) config.sizes.push_back(std::stoi(s));
      config.seeds_per_size = seeds;
      config.algorithms = split(algos);
      config.seed_base = seed;
      config.online_budget = bench_budget;
      emit(out_file, bench_csv(run_benchmark(config)));
    } else if (*oracle_cmd) {
      Instance instance = instance_from_json(read_json_file(instance_file));
      FeasibilityResult result = brute_force_feasible(instance);
      json doc{{"feasible", result.feasible}, {"nodes", result.stats.nodes}, {"pruned", result.stats.pruned}};
      if (result.witness) {
        json witness = json::object();
        for (const auto& [load, cell] : result.witness->placement) witness[std::to_string(load)] = cell_to_json(cell);
        doc["witness"] = std::move(witness);
      }
      std::cout << dump(doc);
    } else if (*characterize_cmd) {
      CharacterizationReport report = exhaustive_characterization(rows, cols, threads);
      std::cout << characterization_csv_header() << '\n' << characterization_csv_row(report) << '\n';
      if (report.column_fill_checked) std::cerr << "column fill failures: " << report.column_fill_failures << '\n';
    } else if (*density_cmd) {
      emit(out_file, density_curve_csv(max_budget));
    } else if (*trace_cmd) {
      Instance instance = instance_from_json(read_json_file(instance_file));
      Plan plan = plan_from_json(read_json_file(plan_file));
      emit(out_file, export_trace(instance, plan));
    }
  } catch (const PlanError& e) {
    std::cerr << dump(json{{"error", std::string(error_code_name(e.code()))},
                           {"action_index", e.action_index()},
                           {"message", e.what()}});
    return 1;
  } catch (const Error& e) {
    return report_error(std::string(error_code_name(e.code())), e.what());
  } catch (const std::exception& e) {
    return report_error("InternalError", e.what());
  }
  return 0;
}
