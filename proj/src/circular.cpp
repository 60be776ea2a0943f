#include "parkfn/circular.hpp"

#include <algorithm>
#include <future>
#include <map>
#include <set>

#include "parkfn/enumerate.hpp"
#include "parkfn/error.hpp"

namespace parkfn {

namespace {

using pair_sequence = std::vector<std::pair<int, int>>;  // (gap, block) per segment

void check_modular(const preference_list& prefs, int g, int s) {
  if (g < 1 || s < 1) throw parking_error(errc::domain_error, "need g, s >= 1");
  if (static_cast<int>(prefs.size()) > g * s) {
    throw parking_error(errc::domain_error, std::to_string(prefs.size()) + " cars on " +
                                                std::to_string(g * s) + " spots");
  }
  for (int p : prefs) {
    if (p > g * (s - 1) + 1 || (p - 1) % g != 0) {
      throw parking_error(errc::bad_modular_preference,
                          "spot " + std::to_string(p) + " does not open a row of width " +
                              std::to_string(g) + " on " + std::to_string(g * s) + " spots");
    }
  }
}

void park_on_circle(std::span<const int> word, std::vector<int>& occupancy) {
  const int spots = static_cast<int>(occupancy.size());
  std::fill(occupancy.begin(), occupancy.end(), empty_spot);
  for (std::size_t car = 0; car < word.size(); ++car) {
    int spot = word[car] - 1;
    while (occupancy[spot] != empty_spot) spot = spot + 1 == spots ? 0 : spot + 1;
    occupancy[spot] = static_cast<int>(car + 1);
  }
}

// Returns the 0-based anchor and fills `pairs`, read clockwise from it.
int block_structure(std::span<const int> occupancy, int g, pair_sequence& pairs) {
  const int spots = static_cast<int>(occupancy.size());
  int anchor = -1;
  for (int p = 0; p < spots; ++p) {
    const int before = p == 0 ? spots - 1 : p - 1;
    if (occupancy[p] != empty_spot && occupancy[before] == empty_spot) {
      anchor = p;
      break;
    }
  }
  if (anchor < 0) {
    throw parking_error(errc::domain_error, "decomposition needs a car and an empty spot");
  }
  if (anchor % g != 0) {
    throw parking_error(errc::not_block_aligned,
                        "filled run starts at spot " + std::to_string(anchor + 1));
  }
  pairs.clear();
  int offset = 0;
  auto at = [&](int off) { return occupancy[(anchor + off) % spots]; };
  while (offset < spots) {
    int filled = 0;
    while (offset < spots && at(offset) != empty_spot) ++filled, ++offset;
    int gap = 0;
    while (offset < spots && at(offset) == empty_spot) ++gap, ++offset;
    if ((filled + gap) % g != 0) {
      throw parking_error(errc::not_block_aligned,
                          "segment of length " + std::to_string(filled + gap) +
                              " is not a multiple of " + std::to_string(g));
    }
    pairs.emplace_back(gap, (filled + gap) / g);
  }
  return anchor;
}

pair_sequence least_rotation(const pair_sequence& seq) {
  pair_sequence best = seq;
  pair_sequence trial(seq.size());
  for (std::size_t r = 1; r < seq.size(); ++r) {
    std::rotate_copy(seq.begin(), seq.begin() + static_cast<long>(r), seq.end(), trial.begin());
    if (trial < best) best = trial;
  }
  return best;
}

struct tally {
  std::map<pair_sequence, std::uint64_t> classes;
  std::uint64_t lists = 0;
};

void classify(int g, int s, int cars, std::span<const int> alphabet, std::optional<int> first,
              tally& out) {
  std::vector<int> occupancy(static_cast<std::size_t>(g * s));
  pair_sequence pairs;
  auto visit = [&](std::span<const int> word) {
    park_on_circle(word, occupancy);
    block_structure(occupancy, g, pairs);
    ++out.classes[least_rotation(pairs)];
    ++out.lists;
  };
  if (!first) {
    for_each_word(cars, alphabet, visit);
    return;
  }
  std::vector<int> word(static_cast<std::size_t>(cars));
  word[0] = *first;
  for_each_word(cars - 1, alphabet, [&](std::span<const int> rest) {
    std::copy(rest.begin(), rest.end(), word.begin() + 1);
    visit(word);
  });
}

composition to_gaps(const pair_sequence& seq) {
  composition c;
  for (auto [gap, block] : seq) c.parts.push_back(gap);
  return c;
}

composition to_blocks(const pair_sequence& seq) {
  composition c;
  for (auto [gap, block] : seq) c.parts.push_back(block);
  return c;
}

}  // namespace

std::size_t circular_state::empty_count() const noexcept {
  return static_cast<std::size_t>(std::count(occupancy.begin(), occupancy.end(), empty_spot));
}

circular_state circular_park(const preference_list& prefs, int g, int s) {
  check_modular(prefs, g, s);
  circular_state state;
  state.g = g;
  state.s = s;
  state.prefs = prefs;
  state.occupancy.assign(static_cast<std::size_t>(g * s), empty_spot);
  park_on_circle(prefs.values(), state.occupancy);
  return state;
}

circular_decomposition decompose(const circular_state& state) {
  pair_sequence pairs;
  const int anchor = block_structure(state.occupancy, state.g, pairs);
  return circular_decomposition{to_gaps(pairs), to_blocks(pairs), anchor + 1};
}

std::vector<int> rotated_occupancy(const circular_state& state, int anchor) {
  const int spots = state.spots();
  if (anchor < 1 || anchor > spots) throw parking_error(errc::domain_error, "anchor out of range");
  std::vector<int> out(state.occupancy.size());
  std::rotate_copy(state.occupancy.begin(), state.occupancy.begin() + (anchor - 1),
                   state.occupancy.end(), out.begin());
  return out;
}

std::optional<preference_list> linearize(const circular_state& state) {
  if (state.prefs.empty()) return preference_list();
  if (state.empty_count() == 0) return std::nullopt;
  const auto parts = decompose(state);
  if (parts.gaps.length() != 1) return std::nullopt;
  const int spots = state.spots();
  std::vector<int> out(state.prefs.begin(), state.prefs.end());
  for (int& p : out) p = ((p - parts.anchor) % spots + spots) % spots + 1;
  return preference_list(std::move(out));
}

preference_list rotate_preferences(const preference_list& prefs, int g, int s, int shift) {
  const int spots = g * s;
  std::vector<int> out(prefs.begin(), prefs.end());
  for (int& p : out) p = ((p - 1 + shift) % spots + spots) % spots + 1;
  return preference_list(std::move(out));
}

bool relation_report::passed() const {
  const bool terms_ok = std::all_of(terms.begin(), terms.end(), [](auto& t) { return t.ok; });
  const bool classes_ok =
      std::all_of(classes.begin(), classes.end(), [](auto& c) { return c.ok; });
  return terms_ok && classes_ok && linearizable == linearizable_expected &&
         recursion_value == brute_value;
}

relation_report verify_relation(int g, int s, int k, std::uint64_t budget, unsigned threads) {
  if (g < 1 || s < 1 || k < 1 || k >= g * s) {
    throw parking_error(errc::domain_error, "need g, s >= 1 and 1 <= k < gs");
  }
  const int cars = g * s - k;
  const std::uint64_t space = space_size(cars, static_cast<std::size_t>(s));
  if (space > budget) {
    throw parking_error(errc::budget_exceeded, std::to_string(s) + "^" + std::to_string(cars) +
                                                   " lists exceeds budget " +
                                                   std::to_string(budget));
  }
  const auto alphabet = restriction_set::modular(g, g * (s - 1) + 1);

  tally observed;
  if (threads <= 1) {
    classify(g, s, cars, alphabet.elements(), std::nullopt, observed);
  } else {
    std::vector<tally> parts(alphabet.size());
    for (std::size_t start = 0; start < parts.size(); start += threads) {
      std::vector<std::future<void>> batch;
      for (std::size_t j = start; j < std::min(parts.size(), start + threads); ++j) {
        batch.push_back(std::async(std::launch::async, [&, j] {
          classify(g, s, cars, alphabet.elements(), alphabet.elements()[j], parts[j]);
        }));
      }
      for (auto& f : batch) f.get();
    }
    for (const auto& part : parts) {
      observed.lists += part.lists;
      for (const auto& [key, count] : part.classes) observed.classes[key] += count;
    }
  }

  // Brute-force segment counts; the recursion is never used on this side.
  std::map<int, big_int> segment_memo;
  const std::function<big_int(int)> segment_count = [&](int length) -> big_int {
    if (length == 0) return 1;
    auto it = segment_memo.find(length);
    if (it != segment_memo.end()) return it->second;
    big_int value = count_restricted(length, restriction_set::modular(g, length));
    segment_memo.emplace(length, value);
    return value;
  };

  std::map<pair_sequence, big_rational> expected;
  std::map<int, big_rational> expected_terms;
  for (int n = 1; n <= std::min(k, s); ++n) {
    for_each_composition(k, n, [&](std::span<const int> lambda) {
      for_each_composition(s, n, [&](std::span<const int> mu) {
        const big_int summand = relation_summand(g, lambda, mu, segment_count);
        if (summand == 0) return;
        pair_sequence seq;
        for (int j = 0; j < n; ++j) seq.emplace_back(lambda[j], mu[j]);
        const big_rational weighted = ratio(s, n) * big_rational(summand);
        expected[least_rotation(seq)] += weighted;
        expected_terms[n] += weighted;
      });
    });
  }

  relation_report report;
  report.g = g;
  report.s = s;
  report.k = k;
  report.total_lists = static_cast<unsigned long>(observed.lists);

  std::set<pair_sequence> keys;
  for (const auto& [key, v] : expected) keys.insert(key);
  for (const auto& [key, v] : observed.classes) keys.insert(key);
  std::map<int, big_int> observed_terms;
  for (const auto& key : keys) {
    relation_class_row row;
    row.gaps = to_gaps(key);
    row.blocks = to_blocks(key);
    auto obs = observed.classes.find(key);
    row.observed = obs == observed.classes.end() ? 0UL : static_cast<unsigned long>(obs->second);
    auto exp = expected.find(key);
    row.expected = exp == expected.end() ? big_rational(0) : exp->second;
    row.ok = big_rational(row.observed) == row.expected;
    observed_terms[static_cast<int>(key.size())] += row.observed;
    report.classes.push_back(std::move(row));
  }
  for (int n = 1; n <= k; ++n) {
    if (!expected_terms.count(n) && !observed_terms.count(n)) continue;
    relation_term_row term;
    term.segments = n;
    term.observed = observed_terms[n];
    term.expected = expected_terms[n];
    term.ok = big_rational(term.observed) == term.expected;
    report.terms.push_back(std::move(term));
  }

  report.linearizable = observed_terms[1];
  report.brute_value = segment_count(cars);
  report.linearizable_expected = report.brute_value * s;
  report.recursion_value = mod_count_general(g, s, k);
  return report;
}

}  // namespace parkfn
