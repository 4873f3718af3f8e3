#include "gridstore/offline.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>
#include <string>

#include "gridstore/paths.hpp"

namespace gridstore {

Arrangement ThreeColumnFill::arrangement(int first_col) const {
  Arrangement out;
  for (int j = 0; j < 3; ++j) {
    for (std::size_t i = 0; i < columns[j].size(); ++i) {
      out.placement.emplace(columns[j][i], Cell{static_cast<int>(i) + 1, first_col + j});
    }
  }
  return out;
}

ThreeColumnFill three_column_fill(const std::vector<Load>& d_prime, int rows, ColumnHeights heights) {
  const auto n = static_cast<int>(d_prime.size());
  const std::array<int, 3> height{heights.left, heights.middle, heights.right};
  for (int h : height) {
    if (h < 0 || h > rows) throw Error(ErrorCode::HeightOverflow, "column height outside [0, rows]");
  }
  if (height[0] + height[1] + height[2] != n) {
    throw Error(ErrorCode::HeightOverflow, "column heights do not add up to the number of loads");
  }
  std::vector<bool> assigned(static_cast<std::size_t>(n) + 1, false);
  for (Load load : d_prime) {
    if (load < 1 || load > n || assigned[load]) {
      throw Error(ErrorCode::InvalidArgument, "d_prime is not a permutation of 1..n");
    }
    assigned[load] = true;
  }
  std::fill(assigned.begin(), assigned.end(), false);

  ThreeColumnFill fill;
  auto& cols = fill.columns;
  auto full = [&](int j) { return static_cast<int>(cols[j].size()) >= height[j]; };
  auto put = [&](int j, Load load) {
    cols[j].push_back(load);
    assigned[load] = true;
  };

  // Cursors into [n] and d_prime; both skip loads that are already placed.
  int x_cursor = 1;
  std::size_t y_cursor = 0;
  auto next_x = [&] {
    while (x_cursor <= n && assigned[x_cursor]) ++x_cursor;
    return static_cast<Load>(x_cursor);
  };
  auto next_y = [&] {
    while (y_cursor < d_prime.size() && assigned[d_prime[y_cursor]]) ++y_cursor;
    return d_prime[y_cursor];
  };

  while (!full(0) && !full(1) && !full(2)) {
    Load x = next_x();
    Load y = next_y();
    if (x != y) {
      put(0, x);
      put(1, y);
    } else {
      put(2, x);
    }
    ++fill.joint_steps;
  }
  for (int j = 0; j < 3; ++j) fill.after_joint_stage[j] = static_cast<int>(cols[j].size());

  if (full(0) && full(1)) {
    fill.completion = FillCompletion::SideColumnsFirst;
    while (!full(2)) put(2, next_x());
  } else if (full(2)) {
    fill.completion = FillCompletion::RightColumnFirst;
    while (!full(1)) put(1, next_y());
    while (!full(0)) put(0, next_x());
  } else {
    throw Error(ErrorCode::HeightOverflow, "left and middle column heights differ");
  }
  return fill;
}

namespace {

// Places `batch` (sorted by departure rank) bottom-up in column `col`.
void place_sorted_column(Arrangement& out, std::vector<Load> batch, const std::vector<int>& rank, int col) {
  std::sort(batch.begin(), batch.end(), [&](Load a, Load b) { return rank[a] < rank[b]; });
  for (std::size_t i = 0; i < batch.size(); ++i) {
    out.placement.emplace(batch[i], Cell{static_cast<int>(i) + 1, col});
  }
}

std::vector<Load> take(ArrivalStream& stream, std::size_t count) {
  std::vector<Load> out;
  out.reserve(count);
  for (std::size_t i = 0; i < count; ++i) out.push_back(stream.peek(i));
  for (std::size_t i = 0; i < count; ++i) stream.next();
  return out;
}

}  // namespace

Arrangement assign_streaming_arrangement(const Instance& instance, ArrivalStream& stream) {
  validate_instance(instance);
  const int r = instance.grid.rows;
  const int c = instance.grid.cols;
  const auto n = instance.load_count();
  if (c < 3) throw Error(ErrorCode::NarrowGrid, "column fill needs at least three columns");
  if (n > static_cast<std::size_t>(r) * static_cast<std::size_t>(c)) {
    throw Error(ErrorCode::TooManyLoads, "more loads than cells");
  }
  if (stream.total() != n) throw Error(ErrorCode::CountMismatch, "stream length differs from the instance");

  const auto rank = ranks_of(instance.departure);
  const auto rows = static_cast<std::size_t>(r);
  Arrangement out;
  int col = 1;

  // With at most 2r loads every column still has an empty column to its right
  // while it is being filled, so sorted columns suffice.
  if (n <= 2 * rows) {
    while (stream.remaining() > 0) {
      place_sorted_column(out, take(stream, std::min(rows, stream.remaining())), rank, col++);
    }
    return out;
  }

  while (stream.remaining() > 3 * rows) {
    place_sorted_column(out, take(stream, rows), rank, col++);
  }

  // Remaining m in (2r, 3r]: see as many as the window allows; the last one
  // is whichever load has not been seen yet.
  const std::size_t m = stream.remaining();
  const std::size_t visible = std::min(m, 3 * rows - 1);
  std::vector<Load> tail;
  tail.reserve(m);
  for (std::size_t i = 0; i < visible; ++i) tail.push_back(stream.peek(i));
  if (visible < m) {
    std::set<Load> unseen;
    for (std::size_t i = 0; i < n; ++i) unseen.insert(static_cast<Load>(i + 1));
    for (const auto& [load, cell] : out.placement) unseen.erase(load);
    for (Load load : tail) unseen.erase(load);
    if (unseen.size() != m - visible || unseen.size() != 1) {
      throw Error(ErrorCode::LookaheadExceeded, "cannot deduce the remaining arrivals");
    }
    tail.push_back(*unseen.begin());
  }
  for (std::size_t i = 0; i < visible; ++i) stream.next();
  if (visible < m) stream.next();

  // Relabel the tail 1..m by departure rank, then pad with placeholders
  // m+1..3r that depart last and arrive first; their cells stay empty.
  std::vector<Load> by_rank = tail;
  std::sort(by_rank.begin(), by_rank.end(), [&](Load a, Load b) { return rank[a] < rank[b]; });
  std::vector<Load> local(n + 1, 0);
  for (std::size_t i = 0; i < by_rank.size(); ++i) local[by_rank[i]] = static_cast<Load>(i + 1);

  std::vector<Load> d_prime;
  d_prime.reserve(3 * rows);
  for (auto it = tail.rbegin(); it != tail.rend(); ++it) d_prime.push_back(local[*it]);
  for (std::size_t label = m + 1; label <= 3 * rows; ++label) d_prime.push_back(static_cast<Load>(label));

  auto fill = three_column_fill(d_prime, r, {r, r, r});
  for (int j = 0; j < 3; ++j) {
    for (std::size_t i = 0; i < fill.columns[j].size(); ++i) {
      auto label = static_cast<std::size_t>(fill.columns[j][i]);
      if (label > m) continue;
      out.placement.emplace(by_rank[label - 1], Cell{static_cast<int>(i) + 1, col + j});
    }
  }
  return out;
}

Arrangement assign_offline_arrangement(const Instance& instance) {
  ArrivalStream stream(instance.arrival, std::max<std::size_t>(instance.load_count(), 1));
  auto arrangement = assign_streaming_arrangement(instance, stream);
  if (!satisfies_departure(instance.grid, arrangement, instance.departure) ||
      !satisfies_departure(instance.grid, arrangement, reverse_sequence(instance.arrival))) {
    throw std::logic_error("column fill produced an arrangement that violates local adjacency");
  }
  return arrangement;
}

Plan plan_from_arrangement(const Instance& instance, const Arrangement& arrangement) {
  validate_instance(instance);
  if (arrangement.placement.size() != instance.load_count()) {
    throw Error(ErrorCode::LabelMismatch, "arrangement does not hold every load");
  }
  for (const auto& [load, cell] : arrangement.placement) {
    if (load < 1 || static_cast<std::size_t>(load) > instance.load_count()) {
      throw Error(ErrorCode::LabelMismatch, "unknown load " + std::to_string(load) + " in arrangement");
    }
    if (!in_bounds(instance.grid, cell)) throw Error(ErrorCode::OutOfBounds, "arrangement cell out of bounds");
  }

  Workspace state(instance.grid);
  Plan plan;
  plan.actions.reserve(2 * instance.load_count());
  for (Load load : instance.arrival) {
    Cell target = arrangement.placement.at(load);
    auto path = state.empty(target) ? access_path(state, target) : std::nullopt;
    if (!path) throw Error(ErrorCode::NoPath, "no storage path for load " + std::to_string(load));
    plan.actions.push_back(store_action(load, std::move(*path)));
    state.place(load, target);
  }
  for (Load load : instance.departure) {
    auto path = exit_path(state, *state.find(load));
    if (!path) throw Error(ErrorCode::NoPath, "no retrieval path for load " + std::to_string(load));
    plan.actions.push_back(retrieve_action(load, std::move(*path)));
    state.remove(load);
  }
  return plan;
}

Plan plan_offline(const Instance& instance) {
  return plan_from_arrangement(instance, assign_offline_arrangement(instance));
}

}  // namespace gridstore
