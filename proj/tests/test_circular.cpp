#include "doctest.h"
#include "parkfn/circular.hpp"
#include "parkfn/enumerate.hpp"
#include "parkfn/error.hpp"

using namespace parkfn;

TEST_CASE("one empty run linearizes") {
  const auto state = circular_park(preference_list{7, 1, 1, 7, 7, 7, 4}, 3, 3);
  CHECK(state.occupancy == std::vector<int>{2, 3, 6, 7, 0, 0, 1, 4, 5});
  const auto parts = decompose(state);
  CHECK(parts.gaps.parts == std::vector<int>{2});
  CHECK(parts.blocks.parts == std::vector<int>{3});
  CHECK(parts.anchor == 7);
  CHECK(rotated_occupancy(state, 7) == std::vector<int>{1, 4, 5, 2, 3, 6, 7, 0, 0});
  const auto linear = linearize(state);
  REQUIRE(linear);
  CHECK(*linear == preference_list{1, 4, 4, 1, 1, 1, 7});
  CHECK(is_parking_function(*linear));
  // The linear outcome matches the circular one read from the anchor.
  CHECK(outcome_permutation(*linear) == std::vector<int>{1, 4, 5, 2, 3, 6, 7});
}

TEST_CASE("two empty runs do not linearize") {
  const auto state = circular_park(preference_list{1, 4, 1, 4, 7, 4, 4}, 3, 3);
  CHECK(state.occupancy == std::vector<int>{1, 3, 0, 2, 4, 6, 5, 7, 0});
  const auto parts = decompose(state);
  CHECK(parts.gaps.parts == std::vector<int>{1, 1});
  CHECK(parts.blocks.parts == std::vector<int>{1, 2});
  CHECK_FALSE(linearize(state));
}

TEST_CASE("bad modular preferences") {
  CHECK_THROWS_AS(circular_park(preference_list{2}, 3, 3), parking_error);
  CHECK_THROWS_AS(circular_park(preference_list{10}, 3, 3), parking_error);
  CHECK_THROWS_AS(circular_park(preference_list(std::vector<int>(10, 1)), 3, 3), parking_error);
}

TEST_CASE("rotating preferences by g rotates the occupancy") {
  const preference_list p{1, 4, 1, 4, 7};
  const auto base = circular_park(p, 3, 3);
  const auto moved = circular_park(rotate_preferences(p, 3, 3, 3), 3, 3);
  std::vector<int> expected(9);
  for (int j = 0; j < 9; ++j) expected[(j + 3) % 9] = base.occupancy[j];
  CHECK(moved.occupancy == expected);
}

TEST_CASE("relation report") {
  const auto report = verify_relation(3, 3, 2);
  CHECK(report.passed());
  CHECK(report.total_lists == 2187);
  CHECK(report.brute_value == 393);
  CHECK(report.linearizable == 3 * 393);
  CHECK(report.terms.size() == 2);
  CHECK(verify_relation(2, 3, 4, 1000, 2).passed());
  CHECK_THROWS_AS(verify_relation(3, 3, 1, 100), parking_error);
  CHECK_THROWS_AS(verify_relation(3, 3, 9), parking_error);
}
