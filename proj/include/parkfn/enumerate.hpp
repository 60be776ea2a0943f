#pragma once

// Exhaustive, pruned iteration over restricted preference spaces. These are
// the oracles every closed form in formulas.hpp is checked against, so they
// rely only on the Catalan condition or on direct simulation.

#include <cstdint>
#include <map>
#include <span>
#include <vector>

#include "parkfn/bigint.hpp"
#include "parkfn/error.hpp"
#include "parkfn/parkcore.hpp"

namespace parkfn {

namespace detail {

void validate_alphabet(int n, const restriction_set& allowed);

// Depth-first walk over alphabet^n in lexicographic order, visiting the words
// whose cumulative counts satisfy at_most(i) >= bound[i] for i in [1, n].
// A prefix is abandoned once no completion over the alphabet can reach the
// bounds.
class catalan_walker {
 public:
  catalan_walker(int n, std::span<const int> alphabet, std::vector<int> bound);

  template <class Visitor>
  void run(Visitor& visit, std::span<const int> prefix = {}) {
    word_.clear();
    std::fill(at_most_.begin(), at_most_.end(), 0);
    for (int v : prefix) push(v);
    if (feasible()) descend(visit);
    for (std::size_t d = 0; d < prefix.size(); ++d) pop();
  }

 private:
  template <class Visitor>
  void descend(Visitor& visit) {
    if (static_cast<int>(word_.size()) == n_) {
      visit(std::span<const int>(word_));
      return;
    }
    for (int v : alphabet_) {
      push(v);
      if (feasible()) descend(visit);
      pop();
    }
  }

  void push(int v) {
    word_.push_back(v);
    for (int i = v; i <= n_; ++i) ++at_most_[i];
  }
  void pop() {
    const int v = word_.back();
    word_.pop_back();
    for (int i = v; i <= n_; ++i) --at_most_[i];
  }
  bool feasible() const {
    const int remaining = n_ - static_cast<int>(word_.size());
    for (int i = 1; i <= n_; ++i) {
      const int reachable = at_most_[i] + (i >= smallest_ ? remaining : 0);
      if (reachable < bound_[i]) return false;
    }
    return true;
  }

  int n_;
  std::vector<int> alphabet_;
  std::vector<int> bound_;
  std::vector<int> at_most_;
  std::vector<int> word_;
  int smallest_;
};

std::vector<int> parking_bound(int n);
std::vector<int> prime_bound(int n);

}  // namespace detail

/// Calls visit(std::span<const int>) for each member of PF_{n|S}, in
/// lexicographic order.
template <class Visitor>
void for_each_restricted(int n, const restriction_set& allowed, Visitor&& visit) {
  detail::validate_alphabet(n, allowed);
  if (n == 0) {
    visit(std::span<const int>());
    return;
  }
  detail::catalan_walker walker(n, allowed.elements(), detail::parking_bound(n));
  walker.run(visit);
}

/// Prime parking functions with image in S, lexicographic.
template <class Visitor>
void for_each_prime_restricted(int n, const restriction_set& allowed, Visitor&& visit) {
  detail::validate_alphabet(n, allowed);
  if (n == 0) return;
  detail::catalan_walker walker(n, allowed.elements(), detail::prime_bound(n));
  walker.run(visit);
}

/// Every word of length n over `alphabet`, lexicographic, unpruned.
template <class Visitor>
void for_each_word(int n, std::span<const int> alphabet, Visitor&& visit) {
  std::vector<int> word(n);
  if (n == 0) {
    visit(std::span<const int>(word));
    return;
  }
  if (alphabet.empty()) return;
  std::vector<std::size_t> digit(n, 0);
  for (int i = 0; i < n; ++i) word[i] = alphabet[0];
  while (true) {
    visit(std::span<const int>(word));
    int pos = n - 1;
    while (pos >= 0 && digit[pos] + 1 == alphabet.size()) {
      digit[pos] = 0;
      word[pos] = alphabet[0];
      --pos;
    }
    if (pos < 0) return;
    ++digit[pos];
    word[pos] = alphabet[digit[pos]];
  }
}

/// Non-decreasing members of PF_{n|[s]}, lexicographic.
template <class Visitor>
void for_each_nondecreasing_restricted(int n, int s, Visitor&& visit) {
  if (s < 1 || s > n) throw parking_error(errc::domain_error, "need 1 <= s <= n");
  std::vector<int> word;
  word.reserve(n);
  auto descend = [&](auto& self, int low) -> void {
    const int pos = static_cast<int>(word.size()) + 1;
    if (pos > n) {
      visit(std::span<const int>(word));
      return;
    }
    for (int v = low; v <= s && v <= pos; ++v) {
      word.push_back(v);
      self(self, v);
      word.pop_back();
    }
  };
  descend(descend, 1);
}

std::vector<preference_list> enum_restricted(int n, const restriction_set& allowed);
std::vector<preference_list> enum_prime_restricted(int n, const restriction_set& allowed);

/// #PF_{n|S}. With threads > 1 the prefix space is split by first
/// preference; the result is identical to the sequential count.
big_int count_restricted(int n, const restriction_set& allowed, unsigned threads = 1);
big_int count_prime_restricted(int n, const restriction_set& allowed, unsigned threads = 1);

big_int count_nondecreasing_restricted(int n, int s);

/// c_0..c_n where c_i counts members of PF_{n|[s]} with exactly i cars
/// preferring spot 1. c_0 is always zero for n >= 1.
std::vector<big_int> ones_distribution(int n, int s);

/// Members of PF_{n|[s]} whose parking outcome is sigma.
big_int fiber_size_bruteforce(std::span<const int> sigma, int s);

/// Outcome permutation -> number of members of PF_{n|[s]} producing it.
std::map<std::vector<int>, big_int> outcome_histogram(int n, int s);

/// #{psi in [s]^n : defect(psi, s) = n - s}, by simulation.
big_int count_min_defect(int n, int s);

/// s^n as a 64-bit candidate count, saturating at UINT64_MAX.
std::uint64_t space_size(int n, std::size_t alphabet_size) noexcept;

}  // namespace parkfn
