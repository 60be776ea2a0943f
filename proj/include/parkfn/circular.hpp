#pragma once

// Parking on a circular street of g*s spots where cars may only prefer the
// s spots 1, g+1, 2g+1, ... that open a row. With k spots left empty, the
// empty runs and the filled runs before them pair up into blocks whose
// lengths are multiples of g; counting lists by their block structure gives
// the circular relation for #PF_{gs-k|S}.

#include <cstdint>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "parkfn/bigint.hpp"
#include "parkfn/formulas.hpp"
#include "parkfn/parkcore.hpp"

namespace parkfn {

struct circular_state {
  int g = 1;
  int s = 1;
  preference_list prefs;
  /// occupancy[j] is the car in spot j+1, or empty_spot.
  std::vector<int> occupancy;

  int spots() const noexcept { return g * s; }
  std::size_t empty_count() const noexcept;
};

circular_state circular_park(const preference_list& prefs, int g, int s);

struct circular_decomposition {
  /// lambda: sizes of the empty runs, in clockwise order from the anchor.
  composition gaps;
  /// mu: (filled run + following empty run) / g for each pair.
  composition blocks;
  /// Smallest spot that directly follows an empty spot.
  int anchor = 1;
};

/// Requires at least one car and at least one empty spot.
circular_decomposition decompose(const circular_state& state);

/// Occupancy read clockwise starting at `anchor`.
std::vector<int> rotated_occupancy(const circular_state& state, int anchor);

/// With a single empty run, the preferences rotated so the anchor becomes
/// spot 1 (the run then sits at the end of the street); nullopt otherwise.
/// A state with no cars linearizes to the empty list.
std::optional<preference_list> linearize(const circular_state& state);

/// Adds `shift` to every preference, modulo g*s.
preference_list rotate_preferences(const preference_list& prefs, int g, int s, int shift);

struct relation_term_row {
  int segments = 1;
  big_int observed;
  big_rational expected;
  bool ok = false;
};

struct relation_class_row {
  /// Lexicographically least rotation of the (lambda_i, mu_i) pairs.
  composition gaps;
  composition blocks;
  big_int observed;
  big_rational expected;
  bool ok = false;
};

struct relation_report {
  int g = 1;
  int s = 1;
  int k = 1;
  big_int total_lists;
  std::vector<relation_term_row> terms;
  std::vector<relation_class_row> classes;
  /// Lists with a single empty run, and s times the brute-force segment count.
  big_int linearizable;
  big_int linearizable_expected;
  /// The recursion for #PF_{gs-k|S} against brute force.
  big_int recursion_value;
  big_int brute_value;

  bool passed() const;
};

/// Parks every list in {1, g+1, ..., g(s-1)+1}^(gs-k) on the circle,
/// classifies it by its cyclic (lambda, mu) structure and compares each
/// class, each term of the relation, and the linearizable count against
/// brute-force segment counts. Requires 1 <= k < gs and s^(gs-k) <= budget.
relation_report verify_relation(int g, int s, int k, std::uint64_t budget = 10'000'000,
                                unsigned threads = 1);

}  // namespace parkfn
