#include "parkfn/bijections.hpp"

#include <algorithm>

#include "parkfn/error.hpp"

namespace parkfn {

namespace {

void require_size(const preference_list& prefs, int n) {
  if (static_cast<int>(prefs.size()) != n) {
    throw parking_error(errc::domain_error, "expected " + std::to_string(n) + " cars, got " +
                                                std::to_string(prefs.size()));
  }
}

bool image_within(const preference_list& prefs, const restriction_set& S) {
  return std::all_of(prefs.begin(), prefs.end(), [&](int v) { return S.contains(v); });
}

}  // namespace

restriction_set build_T(const restriction_set& S, int n) {
  if (!S.contains(1)) throw parking_error(errc::missing_one, to_string(S) + " does not contain 1");
  std::vector<int> elems{1};
  for (int i : S.elements()) {
    if (1 < i && i < n) elems.push_back(i + 1);
  }
  return restriction_set(n, std::move(elems));
}

preference_list prime_to_restricted(const preference_list& prime, const restriction_set& S,
                                    int n) {
  require_size(prime, n);
  if (n >= 2 && std::find(prime.begin(), prime.end(), n) != prime.end()) {
    throw parking_error(errc::image_contains_n, to_string(prime) + " prefers spot " +
                                                    std::to_string(n));
  }
  if (!is_prime(prime)) throw parking_error(errc::not_prime, to_string(prime));
  if (!image_within(prime, S)) {
    throw parking_error(errc::not_restricted, to_string(prime) + " leaves " + to_string(S));
  }
  if (!S.contains(1)) throw parking_error(errc::missing_one, to_string(S) + " does not contain 1");
  std::vector<int> out(prime.begin(), prime.end());
  for (int& v : out) v = v == 1 ? 1 : v + 1;
  return preference_list(std::move(out));
}

preference_list restricted_to_prime(const preference_list& restricted, const restriction_set& S,
                                    int n) {
  require_size(restricted, n);
  const auto T = build_T(S, n);
  if (!image_within(restricted, T) || !is_parking_function(restricted)) {
    throw parking_error(errc::not_in_t, to_string(restricted) + " is not in PF_{" +
                                            std::to_string(n) + "|" + to_string(T) + "}");
  }
  std::vector<int> out(restricted.begin(), restricted.end());
  for (int& v : out) v = v == 1 ? 1 : v - 1;
  return preference_list(std::move(out));
}

std::vector<int> u_vector(const restriction_set& S, int n) {
  std::vector<int> u(n);
  int seen = 0;
  for (int i = 1; i <= n; ++i) {
    if (S.contains(i)) ++seen;
    u[i - 1] = seen;
  }
  return u;
}

bool is_u_parking(std::span<const int> psi, std::span<const int> u) {
  if (psi.size() != u.size()) return false;
  std::vector<int> sorted(psi.begin(), psi.end());
  std::sort(sorted.begin(), sorted.end());
  for (std::size_t i = 0; i < sorted.size(); ++i) {
    if (sorted[i] < 1 || sorted[i] > u[i]) return false;
  }
  return true;
}

preference_list to_u_parking(const preference_list& prefs, const restriction_set& S) {
  const int n = static_cast<int>(prefs.size());
  if (!S.empty() && S.elements().back() > n) {
    throw parking_error(errc::not_restricted, to_string(S) + " is not inside [" +
                                                  std::to_string(n) + "]");
  }
  if (!image_within(prefs, S) || !is_parking_function(prefs)) {
    throw parking_error(errc::not_restricted, to_string(prefs) + " is not in PF_{" +
                                                  std::to_string(n) + "|" + to_string(S) + "}");
  }
  const auto u = u_vector(S, n);
  std::vector<int> out(prefs.begin(), prefs.end());
  for (int& v : out) v = u[v - 1];
  return preference_list(std::move(out));
}

std::size_t colored_pf::indigo_count() const noexcept {
  return static_cast<std::size_t>(std::count(colors.begin(), colors.end(), car_color::indigo));
}

bool is_valid_coloring(const colored_pf& c) {
  const int n = static_cast<int>(c.prefs.size());
  if (static_cast<int>(c.colors.size()) != n || c.s < 1 || c.s > n) return false;
  std::vector<int> indigo;
  for (int car = 0; car < n; ++car) {
    if (c.colors[car] == car_color::indigo) indigo.push_back(c.prefs[car]);
  }
  const int i = static_cast<int>(indigo.size());
  if (i < c.s) return false;
  // Red preferences lie in (s, i+1] (plain) or (s, i] (prime).
  const int red_top = c.prime_variant ? i : i + 1;
  for (int car = 0; car < n; ++car) {
    if (c.colors[car] != car_color::red) continue;
    const int p = c.prefs[car];
    if (p <= c.s || p > red_top) return false;
  }
  if (std::any_of(indigo.begin(), indigo.end(), [&](int p) { return p > i; })) return false;
  const preference_list sub(std::move(indigo));
  return c.prime_variant ? is_prime(sub) : catalan_check(sub);
}

std::optional<colored_pf> involution(const colored_pf& c) {
  if (!is_valid_coloring(c)) {
    throw parking_error(errc::invalid_coloring, to_string(c.prefs) + " with s=" +
                                                    std::to_string(c.s));
  }
  const int m = c.prefs.max_value();
  if (m <= c.s) return std::nullopt;
  const auto first = std::find(c.prefs.begin(), c.prefs.end(), m);
  const auto x = static_cast<std::size_t>(first - c.prefs.begin());
  colored_pf out = c;
  out.colors[x] = c.colors[x] == car_color::red ? car_color::indigo : car_color::red;
  return out;
}

}  // namespace parkfn
