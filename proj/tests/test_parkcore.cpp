#include "doctest.h"
#include "parkfn/error.hpp"
#include "parkfn/parkcore.hpp"

using namespace parkfn;

namespace {

errc code_of(auto&& f) {
  try {
    f();
  } catch (const parking_error& e) {
    return e.code();
  }
  FAIL("expected parking_error");
  return errc::domain_error;
}

}  // namespace

TEST_CASE("preference lists reject spots below 1") {
  CHECK(code_of([] { preference_list{1, 0}; }) == errc::preference_out_of_range);
  CHECK(code_of([] { preference_list{-3}; }) == errc::preference_out_of_range);
  const preference_list p{3, 1, 2};
  CHECK(p.size() == 3);
  CHECK(p.max_value() == 3);
  CHECK(to_string(p) == "(3,1,2)");
  CHECK(to_string(preference_list{}) == "()");
}

TEST_CASE("parking with enough spots") {
  const auto r = park(preference_list{1, 4, 4, 1, 1, 1, 7}, 7);
  CHECK(r.occupancy == std::vector<int>{1, 4, 5, 2, 3, 6, 7});
  CHECK(r.unparked.empty());
  CHECK(r.defect() == 0);
}

TEST_CASE("cars that pass the last spot are unparked") {
  const auto r = park(preference_list{2, 2}, 2);
  CHECK(r.occupancy == std::vector<int>{empty_spot, 1});
  CHECK(r.unparked == std::vector<int>{2});
  CHECK(defect(preference_list{2, 2}, 2) == 1);
  CHECK(defect(preference_list{3, 3, 3}, 3) == 2);
  // Extra spots absorb overflow.
  CHECK(defect(preference_list{2, 2}, 3) == 0);
  CHECK(code_of([] { park(preference_list{5}, 2); }) == errc::preference_out_of_range);
}

TEST_CASE("parking functions agree with the sorted criterion") {
  CHECK(is_parking_function(preference_list{1, 1}));
  CHECK(is_parking_function(preference_list{2, 1}));
  CHECK_FALSE(is_parking_function(preference_list{2, 2}));
  CHECK(is_parking_function(preference_list{}));
  CHECK(catalan_check(preference_list{3, 1, 1}));
  CHECK_FALSE(catalan_check(preference_list{3, 3, 1}));
  CHECK(nondecreasing(preference_list{3, 1, 2}) == preference_list{1, 2, 3});
}

TEST_CASE("prime parking functions") {
  CHECK(is_prime(preference_list{1}));
  CHECK(is_prime(preference_list{1, 1}));
  CHECK_FALSE(is_prime(preference_list{1, 2}));
  CHECK(is_prime(preference_list{1, 2, 1}));
  CHECK_FALSE(is_prime(preference_list{1, 2, 3}));
  CHECK_FALSE(is_prime(preference_list{}));
  CHECK_FALSE(is_prime(preference_list{2, 2}));
}

TEST_CASE("outcome permutation lists the car in each spot") {
  CHECK(outcome_permutation(preference_list{2, 1}) == std::vector<int>{2, 1});
  CHECK(outcome_permutation(preference_list{1, 1, 1}) == std::vector<int>{1, 2, 3});
  CHECK(code_of([] { outcome_permutation(preference_list{2, 2}); }) ==
        errc::not_a_parking_function);
  CHECK(ones_count(preference_list{1, 2, 1}) == 2);
}

TEST_CASE("restriction sets") {
  const restriction_set S(5, {4, 1, 3});
  CHECK(to_string(S) == "{1,3,4}");
  CHECK(S.contains(3));
  CHECK_FALSE(S.contains(2));
  CHECK(restriction_set::initial_segment(4, 2) == restriction_set(4, {1, 2}));
  CHECK(restriction_set::initial_segment(4, 0).empty());
  CHECK(restriction_set::modular(3, 7) == restriction_set(7, {1, 4, 7}));
  CHECK(restriction_set::full(3).size() == 3);
  CHECK(code_of([] { restriction_set(3, {1, 1}); }) == errc::domain_error);
  CHECK(code_of([] { restriction_set(3, {4}); }) == errc::preference_out_of_range);
}

TEST_CASE("error names") {
  CHECK(errc_name(errc::not_block_aligned) == "NotBlockAligned");
  const parking_error e(errc::missing_one, "x");
  CHECK(std::string(e.what()) == "MissingOne: x");
}
