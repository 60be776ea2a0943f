#include "doctest.h"
#include "parkfn/polynomial.hpp"

using namespace parkfn;

TEST_CASE("canonical form drops trailing zeros") {
  const int_polynomial p{1, 2, 0, 0};
  CHECK(p.degree() == 1);
  CHECK(int_polynomial{0, 0}.is_zero());
  CHECK(int_polynomial{}.degree() == -1);
  CHECK(p.coeff(7) == 0);
}

TEST_CASE("arithmetic") {
  const auto x = int_polynomial::x();
  const auto p = (x + int_polynomial{1}) * (x - int_polynomial{1});
  CHECK(p == int_polynomial{-1, 0, 1});
  CHECK(pow(x + int_polynomial{1}, 3) == int_polynomial{1, 3, 3, 1});
  CHECK(pow(x, 0) == int_polynomial{1});
  CHECK((p - p).is_zero());
  CHECK(p * big_int(3) == int_polynomial{-3, 0, 3});
}

TEST_CASE("evaluation") {
  const int_polynomial p{1, -2, 1};
  CHECK(p.evaluate(big_int(3)) == 4);
  CHECK(p.evaluate(big_rational(1, 2)) == big_rational(1, 4));
}

TEST_CASE("printing") {
  CHECK(to_string(int_polynomial{0, 2, 1}) == "x^2 + 2*x");
  CHECK(to_string(int_polynomial{}) == "0");
  CHECK(to_string(int_polynomial{-1, 0, -1}) == "-x^2 - 1");
}
