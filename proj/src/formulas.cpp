#include "parkfn/formulas.hpp"

#include <algorithm>
#include <map>
#include <numeric>

namespace parkfn {

namespace {

big_rational power(long base, long exp) { return rpow(big_rational(base), exp); }

big_int to_integer(const big_rational& v, const char* what) {
  if (v.get_den() != 1) {
    throw parking_error(errc::non_integer_intermediate,
                        std::string(what) + " evaluated to " + to_decimal(v));
  }
  return v.get_num();
}

void require_segment(int n, int s) {
  if (s < 1 || s > n) {
    throw parking_error(errc::domain_error, "need 1 <= s <= n, got n=" + std::to_string(n) +
                                                " s=" + std::to_string(s));
  }
}

void require_prime_segment(int n, int s) {
  if (s < 1 || s >= n) {
    throw parking_error(errc::domain_error, "need 1 <= s < n, got n=" + std::to_string(n) +
                                                " s=" + std::to_string(s));
  }
}

// x (x+i)^(i-1), and 1 at i = 0.
int_polynomial forest_factor(int i) {
  if (i == 0) return int_polynomial::constant(1);
  return int_polynomial::x() * pow(int_polynomial({i, 1}), static_cast<unsigned long>(i - 1));
}

}  // namespace

big_int pf_total(int n) {
  if (n < 1) throw parking_error(errc::domain_error, "need n >= 1");
  return ipow(static_cast<long>(n) + 1, static_cast<unsigned long>(n - 1));
}

big_int ppf_total(int n) {
  if (n < 1) throw parking_error(errc::domain_error, "need n >= 1");
  return ipow(static_cast<long>(n) - 1, static_cast<unsigned long>(n - 1));
}

big_int restricted_subtractive(int n, int s) {
  require_segment(n, s);
  big_rational total = power(s, n);
  for (int i = 0; i <= s - 1; ++i) {
    total -= big_rational(binomial(n, i)) * power(i + 1, i - 1) * power(s - i - 1, n - i);
  }
  return to_integer(total, "restricted_subtractive");
}

big_int restricted_alternating(int n, int s) {
  require_segment(n, s);
  big_rational total = 0;
  for (int i = s; i <= n; ++i) {
    total += big_rational(binomial(n, i)) * power(i + 1, i - 1) * power(s - i - 1, n - i);
  }
  return to_integer(total, "restricted_alternating");
}

big_int prime_subtractive(int n, int s) {
  require_prime_segment(n, s);
  big_rational total = power(s, n) - power(s - 1, n);
  for (int i = 1; i <= s; ++i) {
    total -= big_rational(binomial(n, i)) * power(i - 1, i - 1) * power(s - i, n - i);
  }
  return to_integer(total, "prime_subtractive");
}

big_int prime_alternating(int n, int s) {
  require_prime_segment(n, s);
  big_rational total = 0;
  for (int i = s + 1; i <= n; ++i) {
    total += big_rational(binomial(n, i)) * power(i - 1, i - 1) * power(s - i, n - i);
  }
  return to_integer(total, "prime_alternating");
}

big_int catalan_number(int n) {
  if (n < 0) throw parking_error(errc::domain_error, "negative Catalan index");
  return binomial(2 * static_cast<unsigned long>(n), n) / (n + 1);
}

big_int catalan_triangle(int n, int k) {
  if (n < 1 || k < 0 || k > n - 1) {
    throw parking_error(errc::domain_error, "Catalan triangle entry (" + std::to_string(n) +
                                                "," + std::to_string(k) + ") outside 0 <= k < n");
  }
  std::vector<big_int> prev{1};
  for (int row = 1; row <= n; ++row) {
    std::vector<big_int> cur(row + 1);
    cur[0] = 1;
    for (int j = 1; j < row; ++j) cur[j] = prev[j] + cur[j - 1];
    cur[row] = cur[row - 1];
    prev = std::move(cur);
  }
  return prev[k];
}

int_polynomial ones_poly_subtractive(int n, int s) {
  require_segment(n, s);
  int_polynomial total = pow(int_polynomial({s - 1, 1}), static_cast<unsigned long>(n));
  for (int i = 0; i <= s - 1; ++i) {
    total -= forest_factor(i) * (binomial(n, i) * ipow(s - i - 1, n - i));
  }
  return total;
}

int_polynomial ones_poly_alternating(int n, int s) {
  require_segment(n, s);
  int_polynomial total;
  for (int i = s; i <= n; ++i) {
    total += forest_factor(i) * (binomial(n, i) * ipow(s - i - 1, n - i));
  }
  return total;
}

abel_result abel_check(int n, const big_rational& x, const big_rational& y) {
  if (n < 1) throw parking_error(errc::domain_error, "need n >= 1");
  abel_result out;
  out.lhs = rpow(x + y + n, n);
  out.rhs = 0;
  for (int i = 0; i <= n; ++i) {
    const big_rational forest = i == 0 ? big_rational(1) : x * rpow(x + i, i - 1);
    out.rhs += big_rational(binomial(n, i)) * forest * rpow(y + (n - i), n - i);
  }
  out.equal = out.lhs == out.rhs;
  return out;
}

big_rational restricted_abel_sum(int n, long s) {
  big_rational total = 0;
  for (int i = 0; i <= n; ++i) {
    total += big_rational(binomial(n, i)) * power(i + 1, i - 1) * power(s - i - 1, n - i);
  }
  return total;
}

big_rational prime_abel_sum(int n, long s) {
  big_rational total = 0;
  for (int i = 0; i <= n; ++i) {
    total += big_rational(binomial(n, i)) * power(i - 1, i - 1) * power(s - i, n - i);
  }
  return total;
}

int ell(std::span<const int> sigma, int i) {
  if (i < 1 || i > static_cast<int>(sigma.size())) {
    throw parking_error(errc::domain_error, "position out of range");
  }
  const int top = sigma[i - 1];
  int length = 1;
  while (i - length >= 1 && sigma[i - length - 1] < top) ++length;
  return length;
}

big_int fiber_formula(std::span<const int> sigma, int s) {
  const int n = static_cast<int>(sigma.size());
  require_segment(n, s);
  big_int product = 1;
  for (int i = 1; i <= n; ++i) {
    const int choices = std::max(0, ell(sigma, i) - std::max(0, i - s));
    if (choices == 0) return 0;
    product *= choices;
  }
  return product;
}

int composition::total() const noexcept { return std::accumulate(parts.begin(), parts.end(), 0); }

std::vector<composition> compositions(int total, int num_parts) {
  std::vector<composition> out;
  for_each_composition(total, num_parts, [&](std::span<const int> parts) {
    out.push_back(composition{{parts.begin(), parts.end()}});
  });
  return out;
}

big_int multinomial(int n, std::span<const int> parts) {
  long sum = 0;
  for (int p : parts) {
    if (p < 0) throw parking_error(errc::domain_error, "negative part in multinomial");
    sum += p;
  }
  if (sum != n) throw parking_error(errc::domain_error, "multinomial parts do not sum to n");
  big_int out = 1;
  long placed = 0;
  for (int p : parts) {
    placed += p;
    out *= binomial(static_cast<unsigned long>(placed), static_cast<unsigned long>(p));
  }
  return out;
}

big_int mod_count_k1(int g, int s) {
  if (g < 1 || s < 1 || g * s < 2) throw parking_error(errc::domain_error, "need g,s >= 1, gs >= 2");
  return ipow(s, static_cast<unsigned long>(g * s - 2));
}

big_int mod_count_k2(int g, int s) {
  if (g < 1 || s < 1 || g * s < 2) throw parking_error(errc::domain_error, "need g,s >= 1, gs >= 2");
  const int cars = g * s - 2;
  if (cars == 0) return 1;
  big_rational total = power(s, cars - 1);
  big_rational paired = 0;
  for (int i = 1; i <= s - 1; ++i) {
    const int left = g * i - 1;
    const int right = g * (s - i) - 1;
    if (left <= 0 || right <= 0) continue;
    paired += big_rational(binomial(cars, left)) * power(i, g * i - 2) *
              power(s - i, g * (s - i) - 2);
  }
  total -= paired / 2;
  return to_integer(total, "mod_count_k2");
}

big_int relation_summand(int g, std::span<const int> lambda, std::span<const int> mu,
                         const std::function<big_int(int)>& segment_count) {
  if (lambda.size() != mu.size() || lambda.empty()) {
    throw parking_error(errc::domain_error, "lambda and mu must have the same positive length");
  }
  std::vector<int> filled(lambda.size());
  int cars = 0;
  for (std::size_t j = 0; j < lambda.size(); ++j) {
    filled[j] = g * mu[j] - lambda[j];
    if (filled[j] < 0) return 0;
    // A gap followed by an empty filled segment merges with the next gap, so
    // such a pair never occurs as a maximal-gap decomposition.
    if (filled[j] == 0 && lambda.size() >= 2) return 0;
    cars += filled[j];
  }
  big_int out = multinomial(cars, filled);
  for (int len : filled) {
    if (out == 0) break;
    out *= segment_count(len);
  }
  return out;
}

big_int mod_count_general(int g, int s, int k) {
  if (g < 1 || s < 1 || k < 1 || k > g * s) {
    throw parking_error(errc::domain_error, "need g,s >= 1 and 1 <= k <= gs");
  }
  std::map<int, big_int> memo;
  std::function<big_int(int, int)> solve;
  std::function<big_int(int)> by_length;

  // Solves blocks^(cars) = blocks * X + sum_{n>=2} (blocks/n) * (...) for X.
  solve = [&](int blocks, int gaps) -> big_int {
    const int cars = g * blocks - gaps;
    if (cars == 0) return 1;
    if (auto it = memo.find(cars); it != memo.end()) return it->second;
    big_rational rest = 0;
    for (int n = 2; n <= std::min(gaps, blocks); ++n) {
      big_int inner = 0;
      for_each_composition(gaps, n, [&](std::span<const int> lambda) {
        for_each_composition(blocks, n, [&](std::span<const int> mu) {
          inner += relation_summand(g, lambda, mu, by_length);
        });
      });
      rest += ratio(blocks, n) * big_rational(inner);
    }
    const big_rational x = (big_rational(ipow(blocks, static_cast<unsigned long>(cars))) - rest) /
                           blocks;
    big_int value = to_integer(x, "mod_count_general");
    memo.emplace(cars, value);
    return value;
  };
  // Any (blocks, gaps) with g*blocks - gaps = length and 1 <= gaps <= g*blocks
  // describes the same segment; use the fewest blocks.
  by_length = [&](int length) -> big_int {
    if (length == 0) return 1;
    const int blocks = length / g + 1;
    return solve(blocks, g * blocks - length);
  };
  if (k == g * s) return 1;
  return solve(s, k);
}

}  // namespace parkfn
