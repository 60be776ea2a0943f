#include "parkfn/parkcore.hpp"

#include <algorithm>
#include <sstream>

#include "parkfn/error.hpp"

namespace parkfn {

namespace {

void check_range(const preference_list& prefs, int num_spots) {
  for (std::size_t car = 0; car < prefs.size(); ++car) {
    if (prefs[car] > num_spots) {
      throw parking_error(errc::preference_out_of_range,
                          "car " + std::to_string(car + 1) + " prefers spot " +
                              std::to_string(prefs[car]) + " on a street of " +
                              std::to_string(num_spots) + " spots");
    }
  }
}

// at_most[i] = number of cars preferring a spot <= i, for i in [0, n].
std::vector<int> cumulative_counts(const preference_list& prefs) {
  const int n = static_cast<int>(prefs.size());
  std::vector<int> at_most(n + 1, 0);
  for (int p : prefs) ++at_most[p];
  for (int i = 1; i <= n; ++i) at_most[i] += at_most[i - 1];
  return at_most;
}

}  // namespace

preference_list::preference_list(std::vector<int> prefs) : prefs_(std::move(prefs)) {
  for (std::size_t car = 0; car < prefs_.size(); ++car) {
    if (prefs_[car] < 1) {
      throw parking_error(errc::preference_out_of_range,
                          "car " + std::to_string(car + 1) + " prefers spot " +
                              std::to_string(prefs_[car]));
    }
  }
}

preference_list::preference_list(std::initializer_list<int> prefs)
    : preference_list(std::vector<int>(prefs)) {}

int preference_list::max_value() const noexcept {
  return prefs_.empty() ? 0 : *std::max_element(prefs_.begin(), prefs_.end());
}

std::string to_string(const preference_list& prefs) {
  std::ostringstream os;
  os << '(';
  for (std::size_t i = 0; i < prefs.size(); ++i) os << (i ? "," : "") << prefs[i];
  os << ')';
  return os.str();
}

restriction_set::restriction_set(int ambient, std::vector<int> elements)
    : ambient_(ambient), elements_(std::move(elements)) {
  if (ambient_ < 0) throw parking_error(errc::domain_error, "negative street length");
  std::sort(elements_.begin(), elements_.end());
  if (std::adjacent_find(elements_.begin(), elements_.end()) != elements_.end()) {
    throw parking_error(errc::domain_error, "duplicate element in restriction set");
  }
  for (int e : elements_) {
    if (e < 1 || e > ambient_) {
      throw parking_error(errc::preference_out_of_range,
                          "restriction element " + std::to_string(e) + " outside [1, " +
                              std::to_string(ambient_) + "]");
    }
  }
}

restriction_set restriction_set::full(int n) { return initial_segment(n, n); }

restriction_set restriction_set::initial_segment(int n, int s) {
  if (s < 0 || s > n) {
    throw parking_error(errc::domain_error,
                        "[s] needs 0 <= s <= n, got s=" + std::to_string(s) +
                            " n=" + std::to_string(n));
  }
  std::vector<int> elems(s);
  for (int i = 0; i < s; ++i) elems[i] = i + 1;
  return restriction_set(n, std::move(elems));
}

restriction_set restriction_set::modular(int g, int length) {
  if (g < 1) throw parking_error(errc::domain_error, "row width g must be positive");
  std::vector<int> elems;
  for (int j = 1; j <= length; j += g) elems.push_back(j);
  return restriction_set(length, std::move(elems));
}

bool restriction_set::contains(int value) const noexcept {
  return std::binary_search(elements_.begin(), elements_.end(), value);
}

std::string to_string(const restriction_set& set) {
  std::ostringstream os;
  os << '{';
  for (std::size_t i = 0; i < set.size(); ++i) os << (i ? "," : "") << set.elements()[i];
  os << '}';
  return os.str();
}

parking_result park(const preference_list& prefs, int num_spots) {
  if (num_spots < 0) throw parking_error(errc::domain_error, "negative street length");
  check_range(prefs, num_spots);
  parking_result out;
  out.occupancy.assign(num_spots, empty_spot);
  for (std::size_t car = 0; car < prefs.size(); ++car) {
    int spot = prefs[car] - 1;
    while (spot < num_spots && out.occupancy[spot] != empty_spot) ++spot;
    if (spot < num_spots) {
      out.occupancy[spot] = static_cast<int>(car + 1);
    } else {
      out.unparked.push_back(static_cast<int>(car + 1));
    }
  }
  return out;
}

bool is_parking_function(const preference_list& prefs) {
  return park(prefs, static_cast<int>(prefs.size())).defect() == 0;
}

bool catalan_check(const preference_list& prefs) {
  const int n = static_cast<int>(prefs.size());
  check_range(prefs, n);
  const auto at_most = cumulative_counts(prefs);
  for (int i = 1; i <= n; ++i) {
    if (at_most[i] < i) return false;
  }
  return true;
}

preference_list nondecreasing(const preference_list& prefs) {
  std::vector<int> sorted(prefs.begin(), prefs.end());
  std::sort(sorted.begin(), sorted.end());
  return preference_list(std::move(sorted));
}

bool is_prime(const preference_list& prefs) {
  const int n = static_cast<int>(prefs.size());
  if (n == 0) return false;
  check_range(prefs, n);
  const auto at_most = cumulative_counts(prefs);
  if (at_most[1] < 1) return false;
  for (int i = 1; i < n; ++i) {
    if (at_most[i] <= i) return false;
  }
  return true;
}

std::size_t defect(const preference_list& prefs, int num_spots) {
  return park(prefs, num_spots).defect();
}

std::vector<int> outcome_permutation(const preference_list& prefs) {
  auto result = park(prefs, static_cast<int>(prefs.size()));
  if (result.defect() != 0) {
    throw parking_error(errc::not_a_parking_function,
                        to_string(prefs) + " leaves " + std::to_string(result.defect()) +
                            " car(s) unparked");
  }
  return std::move(result.occupancy);
}

std::size_t ones_count(const preference_list& prefs) noexcept {
  return static_cast<std::size_t>(std::count(prefs.begin(), prefs.end(), 1));
}

}  // namespace parkfn
