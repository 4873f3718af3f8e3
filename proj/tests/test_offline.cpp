#include <doctest.h>

#include <algorithm>

#include "gridstore/offline.hpp"
#include "gridstore/oracle.hpp"
#include "support/gen.hpp"

using namespace gridstore;

namespace {

using Column = std::vector<Load>;

void check_plan_shape(const Instance& inst, const Plan& plan) {
  auto m = execute_plan(inst, plan);
  CHECK(m.total_actions == 2 * inst.load_count());
  CHECK(m.relocations == 0);
  for (const auto& a : plan.actions) CHECK(is_column_adjacent(a.path));
}

}  // namespace

TEST_CASE("three-column fill, first traced input") {
  auto fill = three_column_fill({12, 7, 3, 1, 10, 8, 9, 11, 6, 4, 2, 5}, 4, {4, 4, 4});
  CHECK(fill.columns[0] == Column{1, 2, 4, 5});
  CHECK(fill.columns[1] == Column{12, 7, 10, 8});
  CHECK(fill.columns[2] == Column{3, 6, 9, 11});
  CHECK(fill.completion == FillCompletion::SideColumnsFirst);
  CHECK(fill.after_joint_stage[0] == 4);
  CHECK(fill.after_joint_stage[1] == 4);
  auto a = fill.arrangement();
  CHECK(satisfies_departure(a, testgen::identity(12)));
  CHECK(satisfies_departure(a, {12, 7, 3, 1, 10, 8, 9, 11, 6, 4, 2, 5}));
}

TEST_CASE("three-column fill, second traced input") {
  const std::vector<Load> d{8, 3, 4, 5, 6, 2, 7, 12, 1, 10, 9, 11};
  auto fill = three_column_fill(d, 4, {4, 4, 4});
  CHECK(fill.columns[0] == Column{1, 2, 9, 11});
  CHECK(fill.columns[1] == Column{8, 3, 12, 10});
  CHECK(fill.columns[2] == Column{4, 5, 6, 7});
  CHECK(fill.completion == FillCompletion::RightColumnFirst);
  CHECK(fill.after_joint_stage[2] == 4);
  // the middle column is completed by 12 and 10
  CHECK(fill.after_joint_stage[1] == 2);
  auto a = fill.arrangement();
  CHECK(satisfies_departure(a, testgen::identity(12)));
  CHECK(satisfies_departure(a, d));
}

TEST_CASE("three-column fill with identity d_prime") {
  for (int r = 1; r <= 6; ++r) {
    auto fill = three_column_fill(testgen::identity(3 * r), r, {r, r, r});
    CHECK(fill.completion == FillCompletion::RightColumnFirst);
    Column c1, c2, c3;
    for (int i = 1; i <= r; ++i) {
      c3.push_back(i);
      c2.push_back(r + i);
      c1.push_back(2 * r + i);
    }
    CHECK(fill.columns[0] == c1);
    CHECK(fill.columns[1] == c2);
    CHECK(fill.columns[2] == c3);
  }
}

TEST_CASE("three-column fill rejects heights it cannot honor") {
  CHECK_THROWS_AS(three_column_fill({1, 2, 3}, 1, {2, 1, 0}), Error);
  CHECK_THROWS_AS(three_column_fill({1, 2, 3}, 2, {1, 1, 0}), Error);
}

TEST_CASE("three-column fill satisfies both sequences for every d_prime, r <= 3") {
  for (int r = 1; r <= 3; ++r) {
    auto d = testgen::identity(3 * r);
    std::size_t failures = 0;
    do {
      auto a = three_column_fill(d, r, {r, r, r}).arrangement();
      if (!satisfies_departure(a, testgen::identity(3 * r)) || !satisfies_departure(a, d)) ++failures;
    } while (std::next_permutation(d.begin(), d.end()));
    CHECK(failures == 0);
  }
}

TEST_CASE("three-column fill on random d_prime up to r = 50") {
  testgen::Rng rng(3);
  for (int trial = 0; trial < 10000; ++trial) {
    int r = rng.range(1, 50);
    auto d = testgen::permutation(rng, 3 * r);
    auto a = three_column_fill(d, r, {r, r, r}).arrangement();
    REQUIRE(satisfies_departure(a, testgen::identity(3 * r)));
    REQUIRE(satisfies_departure(a, d));
  }
}

TEST_CASE("column fill on the 3x5 example") {
  auto inst = make_instance({3, 5}, {4, 10, 6, 12, 2, 3, 9, 15, 1, 14, 13, 7, 5, 11, 8});
  auto arr = assign_offline_arrangement(inst);
  CHECK(arr.placement.at(4) == Cell{1, 1});
  CHECK(arr.placement.at(6) == Cell{2, 1});
  CHECK(arr.placement.at(10) == Cell{3, 1});
  CHECK(arr.placement.at(2) == Cell{1, 2});
  CHECK(arr.placement.at(3) == Cell{2, 2});
  CHECK(arr.placement.at(12) == Cell{3, 2});
  // the tail is the three-column fill with D' = (8,11,5,7,13,14,1,15,9), relabeled by rank
  const std::vector<Load> tail{1, 5, 7, 8, 9, 11, 13, 14, 15};
  std::vector<Load> d_prime;
  for (Load l : std::vector<Load>{8, 11, 5, 7, 13, 14, 1, 15, 9}) {
    d_prime.push_back(static_cast<Load>(std::find(tail.begin(), tail.end(), l) - tail.begin()) + 1);
  }
  auto fill = three_column_fill(d_prime, 3, {3, 3, 3});
  for (int j = 0; j < 3; ++j) {
    for (std::size_t i = 0; i < 3; ++i) {
      Load label = tail[static_cast<std::size_t>(fill.columns[j][i] - 1)];
      CHECK(arr.placement.at(label) == Cell{static_cast<int>(i) + 1, 3 + j});
    }
  }
  check_plan_shape(inst, plan_offline(inst));
}

TEST_CASE("worked 3x3 example gives 18 column-adjacent actions") {
  auto inst = make_instance({3, 3}, {9, 4, 7, 3, 6, 2, 1, 8, 5});
  auto plan = plan_offline(inst);
  CHECK(plan.actions.size() == 18);
  check_plan_shape(inst, plan);
  CHECK(plan.actions.front().path == Path{{1, 3}, {2, 3}, {3, 3}});
}

TEST_CASE("single load goes to the front-left cell") {
  for (int r = 1; r <= 4; ++r) {
    for (int c = 3; c <= 5; ++c) {
      auto inst = make_instance({r, c}, {1});
      auto arr = assign_offline_arrangement(inst);
      CHECK(arr.placement.at(1) == Cell{1, 1});
      auto plan = plan_offline(inst);
      CHECK(plan.actions.size() == 2);
      CHECK(plan.actions[0].path.size() == 1);
    }
  }
}

TEST_CASE("column fill errors") {
  CHECK_THROWS_AS(plan_offline(make_instance({3, 2}, {1, 2, 3})), Error);
  try {
    plan_offline(make_instance({2, 2}, {1, 4, 2, 3}));
    FAIL("expected NarrowGrid");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::NarrowGrid);
  }
  Arrangement bad{{{1, {1, 1}}, {2, {2, 1}}}};
  try {
    plan_from_arrangement(make_instance({2, 1}, {1, 2}), bad);
    FAIL("expected NoPath");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::NoPath);
  }
}

TEST_CASE("offline plans are 2n column-adjacent actions on random instances (property)") {
  testgen::Rng rng(99);
  for (int r = 1; r <= 8; ++r) {
    for (int c = 3; c <= 8; ++c) {
      for (int trial = 0; trial < 60; ++trial) {
        int n = trial < 40 ? r * c : rng.range(1, r * c);
        auto inst = make_instance({r, c}, testgen::permutation(rng, n), testgen::permutation(rng, n));
        auto plan = plan_offline(inst);
        auto m = execute_plan(inst, plan);
        REQUIRE(m.total_actions == 2 * static_cast<std::size_t>(n));
        REQUIRE(m.relocations == 0);
        for (const auto& a : plan.actions) REQUIRE(is_column_adjacent(a.path));
        REQUIRE(m.total_distance >= distance_lower_bound(inst.grid, inst.load_count()));
      }
    }
  }
}

TEST_CASE("column fill reads at most 3r-1 arrivals ahead") {
  testgen::Rng rng(7);
  for (int trial = 0; trial < 300; ++trial) {
    int r = rng.range(1, 7);
    int c = rng.range(3, 8);
    int n = rng.range(1, r * c);
    auto inst = make_instance({r, c}, testgen::permutation(rng, n));
    ArrivalStream stream(inst.arrival, static_cast<std::size_t>(3 * r - 1));
    auto arr = assign_streaming_arrangement(inst, stream);
    CHECK(stream.max_peek_depth() <= static_cast<std::size_t>(3 * r - 1));
    CHECK(arr == assign_offline_arrangement(inst));
  }
}
