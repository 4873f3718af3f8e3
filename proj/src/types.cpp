#include "gridstore/types.hpp"

#include <algorithm>

namespace gridstore {

std::string_view error_code_name(ErrorCode code) {
  switch (code) {
    case ErrorCode::OutOfBounds: return "OutOfBounds";
    case ErrorCode::NotAdjacentStep: return "NotAdjacentStep";
    case ErrorCode::CellOccupied: return "CellOccupied";
    case ErrorCode::WrongEndpoint: return "WrongEndpoint";
    case ErrorCode::LoadNotPresent: return "LoadNotPresent";
    case ErrorCode::LoadAlreadyPresent: return "LoadAlreadyPresent";
    case ErrorCode::EmptyPath: return "EmptyPath";
    case ErrorCode::OrderViolation: return "OrderViolation";
    case ErrorCode::IncompletePlan: return "IncompletePlan";
    case ErrorCode::LabelMismatch: return "LabelMismatch";
    case ErrorCode::HeightOverflow: return "HeightOverflow";
    case ErrorCode::TooManyLoads: return "TooManyLoads";
    case ErrorCode::NarrowGrid: return "NarrowGrid";
    case ErrorCode::NoPath: return "NoPath";
    case ErrorCode::TooDense: return "TooDense";
    case ErrorCode::ShapeError: return "ShapeError";
    case ErrorCode::CountMismatch: return "CountMismatch";
    case ErrorCode::LookaheadExceeded: return "LookaheadExceeded";
    case ErrorCode::TooNarrow: return "TooNarrow";
    case ErrorCode::CapacityExceeded: return "CapacityExceeded";
    case ErrorCode::UnknownLoad: return "UnknownLoad";
    case ErrorCode::NoPlacement: return "NoPlacement";
    case ErrorCode::TooLarge: return "TooLarge";
    case ErrorCode::InvalidInstance: return "InvalidInstance";
    case ErrorCode::ParseError: return "ParseError";
    case ErrorCode::InvalidArgument: return "InvalidArgument";
  }
  return "Unknown";
}

std::string to_string(Cell cell) {
  return "(" + std::to_string(cell.row) + "," + std::to_string(cell.col) + ")";
}

std::string_view action_kind_name(ActionKind kind) {
  switch (kind) {
    case ActionKind::Store: return "store";
    case ActionKind::Retrieve: return "retrieve";
    case ActionKind::Relocate: return "relocate";
  }
  return "unknown";
}

std::optional<ActionKind> parse_action_kind(std::string_view name) {
  if (name == "store") return ActionKind::Store;
  if (name == "retrieve") return ActionKind::Retrieve;
  if (name == "relocate") return ActionKind::Relocate;
  return std::nullopt;
}

namespace {

bool is_permutation_of_1_to_n(const std::vector<Load>& seq) {
  std::vector<bool> seen(seq.size() + 1, false);
  for (Load load : seq) {
    if (load < 1 || static_cast<std::size_t>(load) > seq.size() || seen[load]) return false;
    seen[load] = true;
  }
  return true;
}

}  // namespace

void validate_instance(const Instance& instance) {
  const auto& grid = instance.grid;
  if (grid.rows < 1 || grid.cols < 1) {
    throw Error(ErrorCode::InvalidInstance, "grid dimensions must be positive");
  }
  if (instance.arrival.empty()) {
    throw Error(ErrorCode::InvalidInstance, "instance has no loads");
  }
  if (instance.arrival.size() > static_cast<std::size_t>(grid.cell_count())) {
    throw Error(ErrorCode::InvalidInstance, "more loads than cells");
  }
  if (!is_permutation_of_1_to_n(instance.arrival)) {
    throw Error(ErrorCode::InvalidInstance, "arrival is not a permutation of 1..n");
  }
  if (instance.departure.size() != instance.arrival.size() ||
      !is_permutation_of_1_to_n(instance.departure)) {
    throw Error(ErrorCode::InvalidInstance, "departure is not a permutation of 1..n");
  }
  if (instance.lookahead && *instance.lookahead < 1) {
    throw Error(ErrorCode::InvalidInstance, "lookahead must be positive");
  }
  if (instance.budget && *instance.budget < 1) {
    throw Error(ErrorCode::InvalidInstance, "budget must be positive");
  }
}

Instance make_instance(GridSpec grid, std::vector<Load> arrival, std::vector<Load> departure,
                       std::optional<int> lookahead, std::optional<int> budget) {
  if (departure.empty()) {
    departure.resize(arrival.size());
    for (std::size_t i = 0; i < departure.size(); ++i) departure[i] = static_cast<Load>(i + 1);
  }
  Instance instance{grid, std::move(arrival), std::move(departure), lookahead, budget};
  validate_instance(instance);
  return instance;
}

std::vector<int> ranks_of(const std::vector<Load>& seq) {
  std::vector<int> rank(seq.size() + 1, 0);
  for (std::size_t i = 0; i < seq.size(); ++i) rank[seq[i]] = static_cast<int>(i + 1);
  return rank;
}

}  // namespace gridstore
