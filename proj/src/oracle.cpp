#include "gridstore/oracle.hpp"

#include <algorithm>
#include <atomic>
#include <numeric>
#include <sstream>
#include <stdexcept>
#include <thread>

#include "gridstore/offline.hpp"

namespace gridstore {
namespace {

// Depth-first placement in departure order for a full grid. Each load must
// land in the front row or next to an already placed (earlier departing) load;
// the reversed arrival order is checked incrementally through `viable`.
class FeasibilitySearch {
 public:
  FeasibilitySearch(const Instance& instance)
      : grid_(instance.grid),
        n_(static_cast<int>(instance.load_count())),
        occupant_(static_cast<std::size_t>(grid_.cell_count()), 0),
        cell_of_(static_cast<std::size_t>(n_) + 1, -1),
        order_(static_cast<std::size_t>(n_) + 1, 0),
        suffix_min_(static_cast<std::size_t>(n_) + 2, n_ + 1) {
    // Internally load i is the i-th departure; order_[i] is its position in
    // the reversed arrival sequence.
    const auto arrival_rank = ranks_of(instance.arrival);
    for (int i = 1; i <= n_; ++i) {
      Load label = instance.departure[static_cast<std::size_t>(i - 1)];
      order_[i] = n_ + 1 - arrival_rank[label];
      labels_.push_back(label);
    }
    for (int i = n_; i >= 1; --i) suffix_min_[i] = std::min(suffix_min_[i + 1], order_[i]);
    const int size = grid_.cell_count();
    adjacency_.resize(static_cast<std::size_t>(size));
    for (int idx = 0; idx < size; ++idx) {
      int row = idx / grid_.cols;
      int col = idx % grid_.cols;
      if (row > 0) adjacency_[idx].push_back(idx - grid_.cols);
      if (col > 0) adjacency_[idx].push_back(idx - 1);
      if (col + 1 < grid_.cols) adjacency_[idx].push_back(idx + 1);
      if (row + 1 < grid_.rows) adjacency_[idx].push_back(idx + grid_.cols);
    }
  }

  FeasibilityResult run() {
    FeasibilityResult result;
    result.feasible = place(1);
    result.stats = stats_;
    if (result.feasible) {
      Arrangement witness;
      for (int i = 1; i <= n_; ++i) {
        int idx = cell_of_[i];
        witness.placement.emplace(labels_[static_cast<std::size_t>(i - 1)], Cell{idx / grid_.cols + 1, idx % grid_.cols + 1});
      }
      result.witness = std::move(witness);
    }
    return result;
  }

 private:
  // Load i can still meet the reversed-arrival condition once loads next..n are placed.
  bool viable(int i, int next) const {
    int idx = cell_of_[i];
    if (idx < grid_.cols) return true;
    bool has_empty = false;
    for (int nb : adjacency_[idx]) {
      int other = occupant_[nb];
      if (other == 0) has_empty = true;
      else if (order_[other] < order_[i]) return true;
    }
    return has_empty && suffix_min_[next] < order_[i];
  }

  bool place(int i) {
    if (i > n_) return true;
    ++stats_.nodes;
    const int size = grid_.cell_count();
    for (int idx = 0; idx < size; ++idx) {
      if (occupant_[idx] != 0) continue;
      if (idx >= grid_.cols) {
        bool touches = false;
        for (int nb : adjacency_[idx]) touches = touches || occupant_[nb] != 0;
        if (!touches) continue;
      }
      occupant_[idx] = i;
      cell_of_[i] = idx;
      bool ok = true;
      for (int j = 1; j <= i && ok; ++j) ok = viable(j, i + 1);
      if (ok && place(i + 1)) return true;
      if (!ok) ++stats_.pruned;
      occupant_[idx] = 0;
      cell_of_[i] = -1;
    }
    return false;
  }

  GridSpec grid_;
  int n_;
  std::vector<int> occupant_;
  std::vector<int> cell_of_;
  std::vector<int> order_;
  std::vector<int> suffix_min_;
  std::vector<Load> labels_;
  std::vector<std::vector<int>> adjacency_;
  SearchStats stats_;
};

// Below full capacity the empty cells matter, so placements are checked by
// flooding: after each placement every placed load must still be able to
// reach the front row past the loads that leave after it, with unassigned
// cells counted as free. Placing more loads only adds obstacles, so this
// prunes soundly, and at a leaf it is exact.
class SparseSearch {
 public:
  SparseSearch(const Instance& instance)
      : grid_(instance.grid),
        n_(static_cast<int>(instance.load_count())),
        occupant_(static_cast<std::size_t>(grid_.cell_count()), 0),
        cell_of_(static_cast<std::size_t>(n_) + 1, -1),
        order_(static_cast<std::size_t>(n_) + 1, 0) {
    const auto arrival_rank = ranks_of(instance.arrival);
    for (int i = 1; i <= n_; ++i) {
      Load label = instance.departure[static_cast<std::size_t>(i - 1)];
      order_[i] = n_ + 1 - arrival_rank[label];
      labels_.push_back(label);
    }
  }

  FeasibilityResult run() {
    FeasibilityResult result;
    result.feasible = place(1);
    result.stats = stats_;
    if (result.feasible) {
      Arrangement witness;
      for (int i = 1; i <= n_; ++i) {
        int idx = cell_of_[i];
        witness.placement.emplace(labels_[static_cast<std::size_t>(i - 1)], Cell{idx / grid_.cols + 1, idx % grid_.cols + 1});
      }
      result.witness = std::move(witness);
    }
    return result;
  }

 private:
  // Can load i get out while every load with a larger key is still in place?
  template <typename Key>
  bool escapes(int i, Key key) const {
    std::vector<bool> seen(occupant_.size(), false);
    std::vector<int> stack{cell_of_[i]};
    seen[static_cast<std::size_t>(cell_of_[i])] = true;
    while (!stack.empty()) {
      int idx = stack.back();
      stack.pop_back();
      if (idx < grid_.cols) return true;
      int row = idx / grid_.cols;
      int col = idx % grid_.cols;
      int next[4] = {row > 0 ? idx - grid_.cols : -1, col > 0 ? idx - 1 : -1, col + 1 < grid_.cols ? idx + 1 : -1,
                     row + 1 < grid_.rows ? idx + grid_.cols : -1};
      for (int nb : next) {
        if (nb < 0 || seen[static_cast<std::size_t>(nb)]) continue;
        int other = occupant_[static_cast<std::size_t>(nb)];
        if (other != 0 && key(other) > key(i)) continue;
        seen[static_cast<std::size_t>(nb)] = true;
        stack.push_back(nb);
      }
    }
    return false;
  }

  bool consistent(int placed) const {
    auto departure = [](int j) { return j; };
    auto storage = [this](int j) { return order_[static_cast<std::size_t>(j)]; };
    for (int j = 1; j <= placed; ++j) {
      if (!escapes(j, departure) || !escapes(j, storage)) return false;
    }
    return true;
  }

  bool place(int i) {
    if (i > n_) return true;
    ++stats_.nodes;
    for (int idx = 0; idx < grid_.cell_count(); ++idx) {
      if (occupant_[static_cast<std::size_t>(idx)] != 0) continue;
      occupant_[static_cast<std::size_t>(idx)] = i;
      cell_of_[static_cast<std::size_t>(i)] = idx;
      if (consistent(i)) {
        if (place(i + 1)) return true;
      } else {
        ++stats_.pruned;
      }
      occupant_[static_cast<std::size_t>(idx)] = 0;
      cell_of_[static_cast<std::size_t>(i)] = -1;
    }
    return false;
  }

  GridSpec grid_;
  int n_;
  std::vector<int> occupant_;
  std::vector<int> cell_of_;
  std::vector<int> order_;
  std::vector<Load> labels_;
  SearchStats stats_;
};

}  // namespace

FeasibilityResult brute_force_feasible(const Instance& instance) {
  validate_instance(instance);
  if (instance.load_count() > kMaxOracleLoads) {
    throw Error(ErrorCode::TooLarge, "oracle handles at most " + std::to_string(kMaxOracleLoads) + " loads");
  }
  if (static_cast<int>(instance.load_count()) == instance.grid.cell_count()) return FeasibilitySearch(instance).run();
  return SparseSearch(instance).run();
}

CharacterizationReport exhaustive_characterization(int rows, int cols, unsigned threads) {
  if (rows < 1 || cols < 1) throw Error(ErrorCode::InvalidArgument, "grid dimensions must be positive");
  if (rows * cols > 9) throw Error(ErrorCode::TooLarge, "full-capacity enumeration is limited to 9 cells");
  const int n = rows * cols;
  const GridSpec grid{rows, cols};
  const bool check_fill = cols >= 3;

  // One shard per first arrival; shards merge in order so the report is
  // independent of scheduling.
  std::vector<CharacterizationReport> shards(static_cast<std::size_t>(n));
  auto run_shard = [&](int first) {
    CharacterizationReport& report = shards[static_cast<std::size_t>(first - 1)];
    std::vector<Load> rest;
    for (int v = 1; v <= n; ++v) {
      if (v != first) rest.push_back(v);
    }
    do {
      std::vector<Load> arrival{first};
      arrival.insert(arrival.end(), rest.begin(), rest.end());
      Instance instance = make_instance(grid, arrival);
      ++report.total;
      if (!brute_force_feasible(instance).feasible) {
        ++report.infeasible;
        if (!report.sample_infeasible) report.sample_infeasible = arrival;
      }
      if (check_fill) {
        try {
          auto arrangement = assign_offline_arrangement(instance);
          if (!satisfies_departure(instance.grid, arrangement, instance.departure) ||
              !satisfies_departure(instance.grid, arrangement, reverse_sequence(instance.arrival))) {
            ++report.column_fill_failures;
          }
        } catch (const std::exception&) {
          ++report.column_fill_failures;
        }
      }
    } while (std::next_permutation(rest.begin(), rest.end()));
  };

  if (threads == 0) threads = std::max(1u, std::thread::hardware_concurrency());
  threads = std::min<unsigned>(threads, static_cast<unsigned>(n));
  std::atomic<int> next_shard{1};
  auto worker = [&] {
    for (int first = next_shard++; first <= n; first = next_shard++) run_shard(first);
  };
  if (threads <= 1) {
    worker();
  } else {
    std::vector<std::jthread> pool;
    for (unsigned t = 0; t < threads; ++t) pool.emplace_back(worker);
  }

  CharacterizationReport merged;
  merged.rows = rows;
  merged.cols = cols;
  merged.column_fill_checked = check_fill;
  for (const auto& shard : shards) {
    merged.total += shard.total;
    merged.infeasible += shard.infeasible;
    merged.column_fill_failures += shard.column_fill_failures;
    if (!merged.sample_infeasible && shard.sample_infeasible) merged.sample_infeasible = shard.sample_infeasible;
  }
  return merged;
}

std::string characterization_csv_header() { return "rows,cols,total,infeasible"; }

std::string characterization_csv_row(const CharacterizationReport& report) {
  std::ostringstream out;
  out << report.rows << ',' << report.cols << ',' << report.total << ',' << report.infeasible;
  return out.str();
}

std::int64_t distance_lower_bound(const GridSpec& grid, std::size_t n) {
  const auto cols = static_cast<std::int64_t>(grid.cols);
  if (n > static_cast<std::size_t>(grid.cell_count())) throw Error(ErrorCode::InvalidArgument, "more loads than cells");
  const auto loads = static_cast<std::int64_t>(n);
  const std::int64_t full_rows = loads / cols;
  const std::int64_t partial = loads % cols;
  const std::int64_t row_sum = cols * full_rows * (full_rows + 1) / 2 + partial * (full_rows + 1);
  return 2 * row_sum;
}

}  // namespace gridstore
