#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "parkfn/parkcore.hpp"

namespace parkfn {

/// T = {1} u {i + 1 : i in S, 1 < i < n}. Requires 1 in S.
restriction_set build_T(const restriction_set& S, int n);

/// Pushforward of a prime parking function along f(1) = 1, f(x) = x + 1,
/// landing in PF_{n|T} for T = build_T(S, n).
preference_list prime_to_restricted(const preference_list& prime, const restriction_set& S, int n);

/// Inverse pushforward along f^-1(1) = 1, f^-1(x) = x - 1.
preference_list restricted_to_prime(const preference_list& restricted, const restriction_set& S,
                                    int n);

/// u_i = |S cap [i]| for i in [n].
std::vector<int> u_vector(const restriction_set& S, int n);

/// True when the i-th smallest entry of psi is at most u_i for every i.
bool is_u_parking(std::span<const int> psi, std::span<const int> u);

/// Relabels each preference v in S to u_v, its rank in S.
preference_list to_u_parking(const preference_list& prefs, const restriction_set& S);

enum class car_color : std::uint8_t { indigo, red };

/// A parking function with cars split into indigo and red, the carrier of
/// the sign-reversing involution. With i indigo cars and bound s:
///   plain: indigo cars form a parking function on [i], i >= s, and every
///          red preference lies in [i+1] \ [s];
///   prime: indigo cars form a prime parking function on [i], i >= s, and
///          every red preference lies in [i] \ [s].
struct colored_pf {
  preference_list prefs;
  std::vector<car_color> colors;
  int s = 1;
  bool prime_variant = false;

  std::size_t indigo_count() const noexcept;
  std::size_t red_count() const noexcept { return colors.size() - indigo_count(); }
  bool operator==(const colored_pf&) const = default;
};

bool is_valid_coloring(const colored_pf& c);

/// Recolors the first car holding the maximum preference. Returns nullopt on
/// the fixed points: all-indigo colorings whose maximum preference is in [s].
std::optional<colored_pf> involution(const colored_pf& c);

/// Every valid coloring of every list in [n]^n, for the given bound and
/// variant. Visits colored_pf values in lexicographic order of (prefs, mask).
template <class Visitor>
void for_each_colored(int n, int s, bool prime_variant, Visitor&& visit);

}  // namespace parkfn

#include "parkfn/enumerate.hpp"

namespace parkfn {

template <class Visitor>
void for_each_colored(int n, int s, bool prime_variant, Visitor&& visit) {
  if (n < 1 || n > 20 || s < 1 || s > n) {
    throw parking_error(errc::domain_error, "need 1 <= s <= n <= 20");
  }
  const auto alphabet = restriction_set::full(n);
  colored_pf c;
  c.s = s;
  c.prime_variant = prime_variant;
  c.colors.resize(n);
  for_each_word(n, alphabet.elements(), [&](std::span<const int> word) {
    c.prefs = preference_list(std::vector<int>(word.begin(), word.end()));
    for (std::uint32_t red_mask = 0; red_mask < (1U << n); ++red_mask) {
      for (int car = 0; car < n; ++car) {
        c.colors[car] = (red_mask >> car) & 1U ? car_color::red : car_color::indigo;
      }
      if (is_valid_coloring(c)) visit(static_cast<const colored_pf&>(c));
    }
  });
}

}  // namespace parkfn
