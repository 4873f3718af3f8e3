#ifndef GRIDSTORE_IO_HPP_
#define GRIDSTORE_IO_HPP_

#include <string>

#include <json.hpp>

#include "gridstore/types.hpp"

namespace gridstore {

// Instance file: {"rows", "cols", "arrival", optional "departure",
// "lookahead", "budget"}. Labels and coordinates are 1-indexed.
nlohmann::json instance_to_json(const Instance& instance);
Instance instance_from_json(const nlohmann::json& doc);

// Plan file: {"actions": [{"kind", "load", "path": [[row, col], ...], optional "temporary"}]}.
nlohmann::json plan_to_json(const Plan& plan);
Plan plan_from_json(const nlohmann::json& doc);

nlohmann::json cell_to_json(Cell cell);

// Throws ParseError on unreadable or malformed files.
nlohmann::json read_json_file(const std::string& path);
void write_text_file(const std::string& path, const std::string& text);

std::string dump(const nlohmann::json& doc);

}  // namespace gridstore

#endif  // GRIDSTORE_IO_HPP_
