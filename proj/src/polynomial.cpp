#include "parkfn/polynomial.hpp"

#include <algorithm>
#include <sstream>

namespace parkfn {

int_polynomial::int_polynomial(std::vector<big_int> coeffs) : coeffs_(std::move(coeffs)) {
  normalize();
}

int_polynomial::int_polynomial(std::initializer_list<long> coeffs) {
  coeffs_.reserve(coeffs.size());
  for (long c : coeffs) coeffs_.emplace_back(c);
  normalize();
}

int_polynomial int_polynomial::constant(const big_int& c) { return int_polynomial({c}); }

int_polynomial int_polynomial::x() { return int_polynomial({0, 1}); }

big_int int_polynomial::coeff(std::size_t d) const {
  return d < coeffs_.size() ? coeffs_[d] : big_int(0);
}

big_int int_polynomial::evaluate(const big_int& at) const {
  big_int acc = 0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * at + *it;
  return acc;
}

big_rational int_polynomial::evaluate(const big_rational& at) const {
  big_rational acc = 0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
    acc = acc * at + big_rational(*it);
  }
  return acc;
}

int_polynomial& int_polynomial::operator+=(const int_polynomial& rhs) {
  if (rhs.coeffs_.size() > coeffs_.size()) coeffs_.resize(rhs.coeffs_.size());
  for (std::size_t d = 0; d < rhs.coeffs_.size(); ++d) coeffs_[d] += rhs.coeffs_[d];
  normalize();
  return *this;
}

int_polynomial& int_polynomial::operator-=(const int_polynomial& rhs) {
  if (rhs.coeffs_.size() > coeffs_.size()) coeffs_.resize(rhs.coeffs_.size());
  for (std::size_t d = 0; d < rhs.coeffs_.size(); ++d) coeffs_[d] -= rhs.coeffs_[d];
  normalize();
  return *this;
}

int_polynomial& int_polynomial::operator*=(const int_polynomial& rhs) {
  if (is_zero() || rhs.is_zero()) {
    coeffs_.clear();
    return *this;
  }
  std::vector<big_int> out(coeffs_.size() + rhs.coeffs_.size() - 1);
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    if (coeffs_[i] == 0) continue;
    for (std::size_t j = 0; j < rhs.coeffs_.size(); ++j) out[i + j] += coeffs_[i] * rhs.coeffs_[j];
  }
  coeffs_ = std::move(out);
  normalize();
  return *this;
}

int_polynomial& int_polynomial::operator*=(const big_int& scalar) {
  for (auto& c : coeffs_) c *= scalar;
  normalize();
  return *this;
}

void int_polynomial::normalize() {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

int_polynomial pow(const int_polynomial& base, unsigned long exp) {
  int_polynomial result = int_polynomial::constant(1);
  int_polynomial square = base;
  while (exp > 0) {
    if (exp & 1UL) result *= square;
    exp >>= 1;
    if (exp > 0) square *= square;
  }
  return result;
}

std::string to_string(const int_polynomial& p) {
  if (p.is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (long d = p.degree(); d >= 0; --d) {
    big_int c = p.coeff(static_cast<std::size_t>(d));
    if (c == 0) continue;
    if (first) {
      if (c < 0) os << '-';
    } else {
      os << (c < 0 ? " - " : " + ");
    }
    big_int mag = abs(c);
    if (mag != 1 || d == 0) {
      os << mag.get_str();
      if (d > 0) os << '*';
    }
    if (d >= 1) os << 'x';
    if (d >= 2) os << '^' << d;
    first = false;
  }
  return os.str();
}

}  // namespace parkfn
