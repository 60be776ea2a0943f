#include "doctest.h"
#include "parkfn/enumerate.hpp"
#include "parkfn/error.hpp"
#include "parkfn/formulas.hpp"

using namespace parkfn;

TEST_CASE("totals") {
  CHECK(pf_total(3) == 16);
  CHECK(pf_total(4) == 125);
  CHECK(pf_total(5) == 1296);
  CHECK(ppf_total(4) == 27);
  CHECK(ppf_total(1) == 1);
}

TEST_CASE("restricted counts: both closed forms against the oracle") {
  // Row n = 5 from tests/oracles/brute_force.py.
  const std::vector<long> row5{1, 31, 206, 671, 1296};
  const std::vector<long> prime_row5{1, 26, 121, 256};
  for (int s = 1; s <= 5; ++s) {
    CHECK(restricted_subtractive(5, s) == row5[s - 1]);
    CHECK(restricted_alternating(5, s) == row5[s - 1]);
  }
  for (int s = 1; s < 5; ++s) {
    CHECK(prime_subtractive(5, s) == prime_row5[s - 1]);
    CHECK(prime_alternating(5, s) == prime_row5[s - 1]);
  }
  // 3^n - 2^n - n for s = 3.
  for (int n = 3; n <= 12; ++n) {
    CHECK(restricted_subtractive(n, 3) == ipow(3, n) - ipow(2, n) - n);
  }
  CHECK(restricted_subtractive(6, 6) == pf_total(6));
}

TEST_CASE("closed forms agree with each other up to n = 12") {
  for (int n = 1; n <= 12; ++n) {
    for (int s = 1; s <= n; ++s) {
      CHECK(restricted_subtractive(n, s) == restricted_alternating(n, s));
      if (s < n) CHECK(prime_subtractive(n, s) == prime_alternating(n, s));
    }
  }
}

TEST_CASE("domains") {
  CHECK_THROWS_AS(restricted_subtractive(3, 0), parking_error);
  CHECK_THROWS_AS(restricted_subtractive(3, 4), parking_error);
  CHECK_THROWS_AS(prime_subtractive(3, 3), parking_error);
  CHECK_THROWS_AS(catalan_triangle(3, 3), parking_error);
}

TEST_CASE("Catalan numbers and triangle") {
  const std::vector<long> catalan{1, 1, 2, 5, 14, 42, 132};
  for (int n = 0; n <= 6; ++n) CHECK(catalan_number(n) == catalan[n]);
  // A009766 row 5.
  const std::vector<long> row{1, 5, 14, 28, 42};
  for (int k = 0; k < 5; ++k) CHECK(catalan_triangle(5, k) == row[k]);
}

TEST_CASE("ones enumerator") {
  CHECK(ones_poly_subtractive(2, 2) == int_polynomial{0, 2, 1});
  CHECK(ones_poly_alternating(4, 3) == int_polynomial{0, 28, 24, 8, 1});
  CHECK(ones_poly_subtractive(5, 3) == int_polynomial{0, 75, 80, 40, 10, 1});
  for (int n = 1; n <= 8; ++n) {
    for (int s = 1; s <= n; ++s) CHECK(ones_poly_subtractive(n, s) == ones_poly_alternating(n, s));
    CHECK(ones_poly_subtractive(n, n) == int_polynomial::x() * pow(int_polynomial{n, 1}, n - 1));
  }
}

TEST_CASE("Abel identity") {
  for (int n = 1; n <= 6; ++n) {
    const auto r = abel_check(n, big_rational(-1, 2), big_rational(3));
    CHECK(r.equal);
    CHECK(r.lhs == r.rhs);
  }
  // x = 1, y = s - n - 1 gives s^n.
  CHECK(abel_check(5, 1, -3).lhs == 243);
  CHECK(restricted_abel_sum(5, 3) == 243);
  // x = -1, y = s - n gives (s - 1)^n.
  CHECK(abel_check(4, -1, -1).lhs == 16);
  CHECK(prime_abel_sum(4, 3) == -16);
}

TEST_CASE("fiber formula") {
  CHECK(fiber_formula(std::vector<int>{1, 2, 3}, 2) == 4);
  CHECK(fiber_formula(std::vector<int>{2, 1, 3}, 2) == 2);
  CHECK(fiber_formula(std::vector<int>{3, 1, 2}, 2) == 1);
  CHECK(fiber_formula(std::vector<int>{1, 3, 2}, 2) == 0);
  CHECK(fiber_formula(std::vector<int>{1, 2, 3, 4}, 2) == 8);
  CHECK(ell(std::vector<int>{2, 1, 3}, 3) == 3);
  CHECK(ell(std::vector<int>{2, 1, 3}, 2) == 1);
}

TEST_CASE("compositions and multinomials") {
  CHECK(compositions(4, 2) == std::vector<composition>{{{1, 3}}, {{2, 2}}, {{3, 1}}});
  CHECK(compositions(5, 3).size() == 6);
  CHECK(multinomial(4, std::vector<int>{2, 1, 1}) == 12);
}

TEST_CASE("modular counts") {
  CHECK(mod_count_k1(3, 3) == 2187);
  CHECK(mod_count_k1(2, 2) == 4);
  CHECK(mod_count_k2(3, 3) == 393);
  CHECK(mod_count_k2(2, 3) == 11);
  CHECK(mod_count_general(3, 3, 2) == 393);
  CHECK(mod_count_general(2, 4, 3) == 81);
  CHECK(mod_count_general(3, 3, 4) == 16);
  for (int g = 1; g <= 3; ++g) {
    for (int s = 1; s <= 3; ++s) {
      for (int k = 1; k < g * s; ++k) {
        const int n = g * s - k;
        CAPTURE(g);
        CAPTURE(s);
        CAPTURE(k);
        CHECK(mod_count_general(g, s, k) == count_restricted(n, restriction_set::modular(g, n)));
      }
    }
  }
}
