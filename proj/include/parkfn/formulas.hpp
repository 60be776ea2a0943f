#pragma once

// Closed forms and recurrences for restricted parking functions, all in
// exact arithmetic. Conventions used throughout:
//   * 0^0 = 1;
//   * the forest factor x(x+i)^(i-1) is the constant 1 at i = 0;
//   * a parking function of length 0 exists and is unique.

#include <functional>
#include <span>
#include <vector>

#include "parkfn/bigint.hpp"
#include "parkfn/error.hpp"
#include "parkfn/polynomial.hpp"

namespace parkfn {

/// (n+1)^(n-1).
big_int pf_total(int n);
/// (n-1)^(n-1), with ppf_total(1) = 0^0 = 1.
big_int ppf_total(int n);

/// #PF_{n|[s]} as s^n minus the lists whose first empty spot is i+1:
///   s^n - sum_{i=0}^{s-1} C(n,i) (i+1)^(i-1) (s-i-1)^(n-i).
big_int restricted_subtractive(int n, int s);

/// #PF_{n|[s]} as the signed count of 2-colored parking functions:
///   sum_{i=s}^{n} C(n,i) (i+1)^(i-1) (s-i-1)^(n-i).
big_int restricted_alternating(int n, int s);

/// #PPF_{n|[s]} for s < n:
///   s^n - (s-1)^n - sum_{i=1}^{s} C(n,i) (i-1)^(i-1) (s-i)^(n-i).
big_int prime_subtractive(int n, int s);

/// #PPF_{n|[s]} for s < n:  sum_{i=s+1}^{n} C(n,i) (i-1)^(i-1) (s-i)^(n-i).
big_int prime_alternating(int n, int s);

big_int catalan_number(int n);

/// Entry (n, k) of Catalan's triangle for 0 <= k <= n-1, built from the
/// recurrence C(n,k) = C(n-1,k) + C(n,k-1) with C(n,0) = 1 and the diagonal
/// C(n,n) = C(n,n-1).
big_int catalan_triangle(int n, int k);

/// Number-of-ones enumerator of PF_{n|[s]}, subtractive form:
///   (s-1+x)^n - sum_{i=0}^{s-1} C(n,i) x(x+i)^(i-1) (s-i-1)^(n-i).
int_polynomial ones_poly_subtractive(int n, int s);

/// Number-of-ones enumerator of PF_{n|[s]}, alternating form:
///   sum_{i=s}^{n} C(n,i) x(x+i)^(i-1) (s-i-1)^(n-i).
int_polynomial ones_poly_alternating(int n, int s);

struct abel_result {
  bool equal = false;
  big_rational lhs;
  big_rational rhs;
};

/// Both sides of (x+y+n)^n = sum_{i=0}^{n} C(n,i) x(x+i)^(i-1) (y+n-i)^(n-i),
/// with the i = 0 forest factor taken as 1.
abel_result abel_check(int n, const big_rational& x, const big_rational& y);

/// sum_{i=0}^{n} C(n,i) (i+1)^(i-1) (s-i-1)^(n-i); equals s^n.
big_rational restricted_abel_sum(int n, long s);

/// sum_{i=0}^{n} C(n,i) (i-1)^(i-1) (s-i)^(n-i) with (-1)^(-1) = -1 at i = 0;
/// equals -(s-1)^n.
big_rational prime_abel_sum(int n, long s);

/// Length of the longest contiguous window of sigma ending at position i
/// (1-based) whose maximum is sigma_i.
int ell(std::span<const int> sigma, int i);

/// prod_i max(0, ell(sigma, i) - max(0, i - s)): the number of [s]-restricted
/// parking functions with parking outcome sigma.
big_int fiber_formula(std::span<const int> sigma, int s);

struct composition {
  std::vector<int> parts;

  int total() const noexcept;
  std::size_t length() const noexcept { return parts.size(); }
  bool operator==(const composition&) const = default;
  auto operator<=>(const composition&) const = default;
};

/// Visits every composition of `total` into exactly `num_parts` positive
/// parts, lexicographically, as a std::span<const int>.
template <class Visitor>
void for_each_composition(int total, int num_parts, Visitor&& visit) {
  if (num_parts < 1 || total < num_parts) {
    throw parking_error(errc::domain_error, "no composition of " + std::to_string(total) +
                                                " into " + std::to_string(num_parts) + " parts");
  }
  std::vector<int> parts(num_parts);
  auto fill = [&](auto& self, int index, int remaining) -> void {
    if (index == num_parts - 1) {
      parts[index] = remaining;
      visit(std::span<const int>(parts));
      return;
    }
    const int slots_after = num_parts - index - 1;
    for (int first = 1; first <= remaining - slots_after; ++first) {
      parts[index] = first;
      self(self, index + 1, remaining - first);
    }
  };
  fill(fill, 0, total);
}

std::vector<composition> compositions(int total, int num_parts);

/// n! / prod(parts_i!). Parts must be nonnegative and sum to n.
big_int multinomial(int n, std::span<const int> parts);

/// #PF_{gs-1|S} = s^(gs-2) for S the first s spots that are 1 mod g.
big_int mod_count_k1(int g, int s);

/// #PF_{gs-2|S}, the two-empty-spot case of the circular relation:
///   s^(gs-3) - 1/2 sum_{i=1}^{s-1} C(gs-2, gi-1) i^(gi-2) (s-i)^(g(s-i)-2),
/// with terms that would give an empty filled segment dropped (only g = 1
/// has them).
big_int mod_count_k2(int g, int s);

/// Count of one term of the circular relation: the number of ways to choose
/// which cars sit in each filled segment times the product of the segment
/// counts, for gaps lambda and blocks mu (both of length n). Zero when some
/// filled segment g*mu_i - lambda_i is empty or negative and n >= 2.
big_int relation_summand(int g, std::span<const int> lambda, std::span<const int> mu,
                         const std::function<big_int(int length)>& segment_count);

/// #PF_{gs-k | S cap [gs-k]} for S = {j : j = 1 mod g}, solved from the
/// circular relation with a memo on segment length. k = gs gives 1.
big_int mod_count_general(int g, int s, int k);

}  // namespace parkfn
