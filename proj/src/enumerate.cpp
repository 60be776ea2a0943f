#include "parkfn/enumerate.hpp"

#include <algorithm>
#include <future>
#include <limits>

namespace parkfn {

namespace detail {

void validate_alphabet(int n, const restriction_set& allowed) {
  if (n < 0) throw parking_error(errc::domain_error, "negative car count");
  if (n > 0 && allowed.empty()) {
    throw parking_error(errc::empty_restriction, "no allowed preferences for " +
                                                     std::to_string(n) + " cars");
  }
  if (!allowed.empty() && allowed.elements().back() > n) {
    throw parking_error(errc::preference_out_of_range,
                        "restriction " + to_string(allowed) + " is not inside [" +
                            std::to_string(n) + "]");
  }
}

catalan_walker::catalan_walker(int n, std::span<const int> alphabet, std::vector<int> bound)
    : n_(n),
      alphabet_(alphabet.begin(), alphabet.end()),
      bound_(std::move(bound)),
      at_most_(n + 1, 0),
      smallest_(alphabet.empty() ? n + 1 : alphabet.front()) {
  word_.reserve(n);
}

std::vector<int> parking_bound(int n) {
  std::vector<int> bound(n + 1);
  for (int i = 0; i <= n; ++i) bound[i] = i;
  return bound;
}

std::vector<int> prime_bound(int n) {
  std::vector<int> bound(n + 1);
  for (int i = 0; i < n; ++i) bound[i] = i + 1;
  bound[0] = 0;
  bound[n] = n;
  return bound;
}

namespace {

big_int count_walk(int n, const restriction_set& allowed, std::vector<int> bound,
                   unsigned threads) {
  if (n == 0) return 1;
  if (threads <= 1 || allowed.size() < 2) {
    std::uint64_t total = 0;
    catalan_walker walker(n, allowed.elements(), std::move(bound));
    auto tally = [&](std::span<const int>) { ++total; };
    walker.run(tally);
    return big_int(static_cast<unsigned long>(total));
  }
  // One task per first preference, at most `threads` in flight; summed in a
  // fixed order.
  const auto firsts = allowed.elements();
  big_int sum = 0;
  for (std::size_t start = 0; start < firsts.size(); start += threads) {
    std::vector<std::future<std::uint64_t>> batch;
    for (std::size_t j = start; j < std::min(firsts.size(), start + threads); ++j) {
      batch.push_back(std::async(std::launch::async, [&, first = firsts[j]] {
        std::uint64_t total = 0;
        catalan_walker walker(n, allowed.elements(), bound);
        auto tally = [&](std::span<const int>) { ++total; };
        const int prefix[] = {first};
        walker.run(tally, prefix);
        return total;
      }));
    }
    for (auto& part : batch) sum += static_cast<unsigned long>(part.get());
  }
  return sum;
}

}  // namespace

}  // namespace detail

std::vector<preference_list> enum_restricted(int n, const restriction_set& allowed) {
  std::vector<preference_list> out;
  for_each_restricted(n, allowed, [&](std::span<const int> w) {
    out.emplace_back(std::vector<int>(w.begin(), w.end()));
  });
  return out;
}

std::vector<preference_list> enum_prime_restricted(int n, const restriction_set& allowed) {
  std::vector<preference_list> out;
  for_each_prime_restricted(n, allowed, [&](std::span<const int> w) {
    out.emplace_back(std::vector<int>(w.begin(), w.end()));
  });
  return out;
}

big_int count_restricted(int n, const restriction_set& allowed, unsigned threads) {
  detail::validate_alphabet(n, allowed);
  return detail::count_walk(n, allowed, detail::parking_bound(n), threads);
}

big_int count_prime_restricted(int n, const restriction_set& allowed, unsigned threads) {
  detail::validate_alphabet(n, allowed);
  if (n == 0) return 0;
  return detail::count_walk(n, allowed, detail::prime_bound(n), threads);
}

big_int count_nondecreasing_restricted(int n, int s) {
  std::uint64_t total = 0;
  for_each_nondecreasing_restricted(n, s, [&](std::span<const int>) { ++total; });
  return big_int(static_cast<unsigned long>(total));
}

std::vector<big_int> ones_distribution(int n, int s) {
  if (s < 1 || s > n) throw parking_error(errc::domain_error, "need 1 <= s <= n");
  std::vector<std::uint64_t> tally(n + 1, 0);
  for_each_restricted(n, restriction_set::initial_segment(n, s), [&](std::span<const int> w) {
    ++tally[std::count(w.begin(), w.end(), 1)];
  });
  std::vector<big_int> out;
  out.reserve(tally.size());
  for (auto c : tally) out.emplace_back(static_cast<unsigned long>(c));
  return out;
}

namespace {

void check_permutation(std::span<const int> sigma) {
  std::vector<bool> seen(sigma.size() + 1, false);
  for (int v : sigma) {
    if (v < 1 || v > static_cast<int>(sigma.size()) || seen[v]) {
      throw parking_error(errc::domain_error, "not a permutation in one-line notation");
    }
    seen[v] = true;
  }
}

// Outcome of a parking word on n spots, or false if some car fails to park.
bool simulate_outcome(std::span<const int> word, std::vector<int>& occupancy) {
  const int n = static_cast<int>(word.size());
  std::fill(occupancy.begin(), occupancy.end(), empty_spot);
  for (int car = 0; car < n; ++car) {
    int spot = word[car] - 1;
    while (spot < n && occupancy[spot] != empty_spot) ++spot;
    if (spot == n) return false;
    occupancy[spot] = car + 1;
  }
  return true;
}

}  // namespace

big_int fiber_size_bruteforce(std::span<const int> sigma, int s) {
  check_permutation(sigma);
  const int n = static_cast<int>(sigma.size());
  if (s < 1 || s > n) throw parking_error(errc::domain_error, "need 1 <= s <= n");
  std::uint64_t total = 0;
  std::vector<int> occupancy(n);
  for_each_restricted(n, restriction_set::initial_segment(n, s), [&](std::span<const int> w) {
    if (simulate_outcome(w, occupancy) && std::equal(occupancy.begin(), occupancy.end(),
                                                     sigma.begin(), sigma.end())) {
      ++total;
    }
  });
  return big_int(static_cast<unsigned long>(total));
}

std::map<std::vector<int>, big_int> outcome_histogram(int n, int s) {
  if (s < 1 || s > n) throw parking_error(errc::domain_error, "need 1 <= s <= n");
  std::map<std::vector<int>, big_int> out;
  std::vector<int> occupancy(n);
  for_each_restricted(n, restriction_set::initial_segment(n, s), [&](std::span<const int> w) {
    if (!simulate_outcome(w, occupancy)) {
      throw parking_error(errc::not_a_parking_function, "enumerator produced a non-parking word");
    }
    out[occupancy] += 1;
  });
  return out;
}

big_int count_min_defect(int n, int s) {
  if (s < 1 || s > n) throw parking_error(errc::domain_error, "need 1 <= s <= n");
  const auto alphabet = restriction_set::initial_segment(s, s);
  std::uint64_t total = 0;
  for_each_word(n, alphabet.elements(), [&](std::span<const int> w) {
    const preference_list prefs(std::vector<int>(w.begin(), w.end()));
    if (defect(prefs, s) == static_cast<std::size_t>(n - s)) ++total;
  });
  return big_int(static_cast<unsigned long>(total));
}

std::uint64_t space_size(int n, std::size_t alphabet_size) noexcept {
  constexpr auto cap = std::numeric_limits<std::uint64_t>::max();
  std::uint64_t total = 1;
  for (int i = 0; i < n; ++i) {
    if (alphabet_size != 0 && total > cap / alphabet_size) return cap;
    total *= alphabet_size;
  }
  return total;
}

}  // namespace parkfn
