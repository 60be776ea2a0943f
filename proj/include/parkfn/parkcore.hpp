#pragma once

#include <compare>
#include <cstddef>
#include <initializer_list>
#include <span>
#include <string>
#include <vector>

namespace parkfn {

/// Marks an unoccupied spot in an occupancy vector. Cars are numbered from 1.
inline constexpr int empty_spot = 0;

/// Preferences of cars 1..n, each a 1-based spot index.
///
/// The list does not carry its codomain: the same list is parked on streets
/// of different lengths, so the upper bound is checked by each operation.
class preference_list {
 public:
  preference_list() = default;
  explicit preference_list(std::vector<int> prefs);
  preference_list(std::initializer_list<int> prefs);

  std::size_t size() const noexcept { return prefs_.size(); }
  bool empty() const noexcept { return prefs_.empty(); }
  std::span<const int> values() const noexcept { return prefs_; }
  const std::vector<int>& vector() const noexcept { return prefs_; }

  /// Preference of the car at 0-based position `index`.
  int operator[](std::size_t index) const { return prefs_[index]; }

  auto begin() const noexcept { return prefs_.begin(); }
  auto end() const noexcept { return prefs_.end(); }

  /// Largest preference, 0 for the empty list.
  int max_value() const noexcept;

  friend bool operator==(const preference_list&, const preference_list&) = default;
  friend auto operator<=>(const preference_list&, const preference_list&) = default;

 private:
  std::vector<int> prefs_;
};

std::string to_string(const preference_list& prefs);

struct parking_result {
  /// occupancy[j] is the car parked in spot j+1, or empty_spot.
  std::vector<int> occupancy;
  /// Cars that drove off the end, in the order they left.
  std::vector<int> unparked;

  std::size_t defect() const noexcept { return unparked.size(); }
  bool operator==(const parking_result&) const = default;
};

/// A sorted, duplicate-free set of allowed preferences inside [1, ambient].
class restriction_set {
 public:
  restriction_set() = default;
  /// Elements may arrive in any order; duplicates and values outside
  /// [1, ambient] are rejected.
  restriction_set(int ambient, std::vector<int> elements);

  static restriction_set full(int n);
  static restriction_set initial_segment(int n, int s);
  /// {j <= length : j = 1 mod g}, the spots that open a row of width g.
  static restriction_set modular(int g, int length);

  int ambient() const noexcept { return ambient_; }
  std::span<const int> elements() const noexcept { return elements_; }
  std::size_t size() const noexcept { return elements_.size(); }
  bool empty() const noexcept { return elements_.empty(); }
  bool contains(int value) const noexcept;

  friend bool operator==(const restriction_set&, const restriction_set&) = default;

 private:
  int ambient_ = 0;
  std::vector<int> elements_;
};

std::string to_string(const restriction_set& set);

/// Runs the one-way street procedure with `num_spots` spots.
parking_result park(const preference_list& prefs, int num_spots);

bool is_parking_function(const preference_list& prefs);

/// #{cars preferring a spot <= i} >= i for every i in [n].
bool catalan_check(const preference_list& prefs);

preference_list nondecreasing(const preference_list& prefs);

/// Strict Catalan condition for i < n. The single list (1) is prime; the
/// empty list is not.
bool is_prime(const preference_list& prefs);

std::size_t defect(const preference_list& prefs, int num_spots);

/// One-line notation of the outcome: entry i is the car parked in spot i.
std::vector<int> outcome_permutation(const preference_list& prefs);

/// Number of cars preferring spot 1.
std::size_t ones_count(const preference_list& prefs) noexcept;

}  // namespace parkfn
