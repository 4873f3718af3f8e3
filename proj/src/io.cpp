#include "gridstore/io.hpp"

#include <fstream>
#include <sstream>

namespace gridstore {

using nlohmann::json;

json cell_to_json(Cell cell) { return json::array({cell.row, cell.col}); }

json instance_to_json(const Instance& instance) {
  json doc = json::object();
  doc["rows"] = instance.grid.rows;
  doc["cols"] = instance.grid.cols;
  doc["arrival"] = instance.arrival;
  doc["departure"] = instance.departure;
  if (instance.lookahead) doc["lookahead"] = *instance.lookahead;
  if (instance.budget) doc["budget"] = *instance.budget;
  return doc;
}

Instance instance_from_json(const json& doc) {
  try {
    if (!doc.is_object()) throw Error(ErrorCode::ParseError, "instance must be a JSON object");
    GridSpec grid{doc.at("rows").get<int>(), doc.at("cols").get<int>()};
    auto arrival = doc.at("arrival").get<std::vector<Load>>();
    std::vector<Load> departure;
    if (doc.contains("departure")) departure = doc.at("departure").get<std::vector<Load>>();
    std::optional<int> lookahead;
    std::optional<int> budget;
    if (doc.contains("lookahead")) lookahead = doc.at("lookahead").get<int>();
    if (doc.contains("budget")) budget = doc.at("budget").get<int>();
    return make_instance(grid, std::move(arrival), std::move(departure), lookahead, budget);
  } catch (const json::exception& e) {
    throw Error(ErrorCode::ParseError, std::string("instance: ") + e.what());
  }
}

json plan_to_json(const Plan& plan) {
  json actions = json::array();
  for (const auto& action : plan.actions) {
    json entry = json::object();
    entry["kind"] = std::string(action_kind_name(action.kind));
    entry["load"] = action.load;
    json path = json::array();
    for (Cell cell : action.path) path.push_back(cell_to_json(cell));
    entry["path"] = std::move(path);
    if (action.temporary) entry["temporary"] = true;
    actions.push_back(std::move(entry));
  }
  return json{{"actions", std::move(actions)}};
}

Plan plan_from_json(const json& doc) {
  try {
    Plan plan;
    for (const auto& entry : doc.at("actions")) {
      Action action;
      auto kind = parse_action_kind(entry.at("kind").get<std::string>());
      if (!kind) throw Error(ErrorCode::ParseError, "unknown action kind " + entry.at("kind").dump());
      action.kind = *kind;
      action.load = entry.at("load").get<Load>();
      for (const auto& cell : entry.at("path")) {
        if (!cell.is_array() || cell.size() != 2) throw Error(ErrorCode::ParseError, "path cells are [row, col] pairs");
        action.path.push_back(Cell{cell[0].get<int>(), cell[1].get<int>()});
      }
      action.temporary = entry.value("temporary", false);
      plan.actions.push_back(std::move(action));
    }
    return plan;
  } catch (const json::exception& e) {
    throw Error(ErrorCode::ParseError, std::string("plan: ") + e.what());
  }
}

json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::ParseError, "cannot open " + path);
  try {
    return json::parse(in);
  } catch (const json::exception& e) {
    throw Error(ErrorCode::ParseError, path + ": " + e.what());
  }
}

void write_text_file(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error(ErrorCode::InvalidArgument, "cannot write " + path);
  out << text;
}

std::string dump(const json& doc) { return doc.dump() + "\n"; }

}  // namespace gridstore
