#pragma once

#include <initializer_list>
#include <string>
#include <vector>

#include "parkfn/bigint.hpp"

namespace parkfn {

/// Polynomial in one variable x with big-integer coefficients; coeffs()[d]
/// is the coefficient of x^d. Canonical: no trailing zero coefficient, so
/// the zero polynomial has no coefficients at all.
class int_polynomial {
 public:
  int_polynomial() = default;
  explicit int_polynomial(std::vector<big_int> coeffs);
  int_polynomial(std::initializer_list<long> coeffs);

  static int_polynomial constant(const big_int& c);
  static int_polynomial x();

  const std::vector<big_int>& coeffs() const noexcept { return coeffs_; }
  /// Coefficient of x^d, zero beyond the degree.
  big_int coeff(std::size_t d) const;
  /// -1 for the zero polynomial.
  long degree() const noexcept { return static_cast<long>(coeffs_.size()) - 1; }
  bool is_zero() const noexcept { return coeffs_.empty(); }

  big_int evaluate(const big_int& at) const;
  big_rational evaluate(const big_rational& at) const;

  int_polynomial& operator+=(const int_polynomial& rhs);
  int_polynomial& operator-=(const int_polynomial& rhs);
  int_polynomial& operator*=(const int_polynomial& rhs);
  int_polynomial& operator*=(const big_int& scalar);

  friend int_polynomial operator+(int_polynomial a, const int_polynomial& b) { return a += b; }
  friend int_polynomial operator-(int_polynomial a, const int_polynomial& b) { return a -= b; }
  friend int_polynomial operator*(int_polynomial a, const int_polynomial& b) { return a *= b; }
  friend int_polynomial operator*(int_polynomial a, const big_int& c) { return a *= c; }

  friend bool operator==(const int_polynomial& a, const int_polynomial& b) {
    return a.coeffs_ == b.coeffs_;
  }

 private:
  void normalize();

  std::vector<big_int> coeffs_;
};

int_polynomial pow(const int_polynomial& base, unsigned long exp);

/// e.g. "x^2 + 2*x", "0".
std::string to_string(const int_polynomial& p);

}  // namespace parkfn
