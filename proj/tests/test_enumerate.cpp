#include <set>

#include "doctest.h"
#include "parkfn/enumerate.hpp"
#include "parkfn/error.hpp"

using namespace parkfn;

// Counts frozen from tests/oracles/brute_force.py.
static const std::vector<std::vector<long>> kPf = {
    {1}, {1, 3}, {1, 7, 16}, {1, 15, 61, 125}, {1, 31, 206, 671, 1296},
    {1, 63, 659, 3130, 9031, 16807}};
static const std::vector<std::vector<long>> kPpf = {
    {1}, {1, 1}, {1, 4, 4}, {1, 11, 27, 27}, {1, 26, 121, 256, 256},
    {1, 57, 458, 1589, 3125, 3125}};

TEST_CASE("restricted counts match the brute-force oracle") {
  for (int n = 1; n <= 6; ++n) {
    for (int s = 1; s <= n; ++s) {
      const auto S = restriction_set::initial_segment(n, s);
      CAPTURE(n);
      CAPTURE(s);
      CHECK(count_restricted(n, S) == kPf[n - 1][s - 1]);
      CHECK(count_prime_restricted(n, S) == kPpf[n - 1][s - 1]);
    }
  }
}

TEST_CASE("pruned walker agrees with filtering every word") {
  const restriction_set S(5, {1, 3, 4});
  std::set<std::vector<int>> filtered;
  for_each_word(5, S.elements(), [&](std::span<const int> w) {
    if (is_parking_function(preference_list(std::vector<int>(w.begin(), w.end())))) {
      filtered.emplace(w.begin(), w.end());
    }
  });
  std::set<std::vector<int>> walked;
  for (const auto& p : enum_restricted(5, S)) walked.insert(p.vector());
  CHECK(walked == filtered);
}

TEST_CASE("threaded counts equal single-threaded counts") {
  const auto S = restriction_set(7, {1, 2, 5});
  CHECK(count_restricted(7, S, 4) == count_restricted(7, S, 1));
  CHECK(count_prime_restricted(7, S, 3) == count_prime_restricted(7, S, 1));
}

TEST_CASE("prime counts over sets containing 1") {
  CHECK(count_prime_restricted(4, restriction_set(4, {1})) == 1);
  CHECK(count_prime_restricted(4, restriction_set(4, {1, 2})) == 11);
  CHECK(count_prime_restricted(4, restriction_set(4, {1, 3})) == 5);
  CHECK(count_prime_restricted(4, restriction_set(4, {1, 3, 4})) == 5);
}

TEST_CASE("modular restrictions") {
  CHECK(count_restricted(7, restriction_set::modular(3, 7)) == 393);
  CHECK(count_restricted(8, restriction_set::modular(3, 8)) == 2187);
  CHECK(count_restricted(5, restriction_set::modular(3, 5)) == 16);
  CHECK(count_restricted(5, restriction_set::modular(2, 5)) == 81);
}

TEST_CASE("empty restriction") {
  CHECK_THROWS_AS(count_restricted(3, restriction_set(3, {})), parking_error);
  CHECK(count_restricted(3, restriction_set(3, {2, 3})) == 0);
}

TEST_CASE("orbits, ones and fibers") {
  const std::vector<std::vector<long>> orbits = {
      {1}, {1, 2}, {1, 3, 5}, {1, 4, 9, 14}, {1, 5, 14, 28, 42}, {1, 6, 20, 48, 90, 132}};
  for (int n = 1; n <= 6; ++n) {
    for (int s = 1; s <= n; ++s) CHECK(count_nondecreasing_restricted(n, s) == orbits[n - 1][s - 1]);
  }
  CHECK(ones_distribution(2, 2) == std::vector<big_int>{0, 2, 1});
  CHECK(ones_distribution(4, 3) == std::vector<big_int>{0, 28, 24, 8, 1});
  CHECK(ones_distribution(5, 3) == std::vector<big_int>{0, 75, 80, 40, 10, 1});

  const auto hist = outcome_histogram(3, 2);
  CHECK(hist.size() == 3);
  CHECK(hist.at({1, 2, 3}) == 4);
  CHECK(hist.at({2, 1, 3}) == 2);
  CHECK(hist.at({3, 1, 2}) == 1);
  CHECK(fiber_size_bruteforce(std::vector<int>{1, 2, 3, 4}, 2) == 8);
  CHECK(fiber_size_bruteforce(std::vector<int>{2, 1, 4, 3}, 2) == 0);
}

TEST_CASE("least defect") {
  const std::vector<long> expected{1, 15, 61, 125};
  for (int s = 1; s <= 4; ++s) CHECK(count_min_defect(4, s) == expected[s - 1]);
}

TEST_CASE("space size saturates") {
  CHECK(space_size(3, 10) == 1000);
  CHECK(space_size(0, 10) == 1);
  CHECK(space_size(200, 10) == UINT64_MAX);
}
