#include "parkfn/verify.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <set>

#include "parkfn/bijections.hpp"
#include "parkfn/circular.hpp"
#include "parkfn/enumerate.hpp"
#include "parkfn/formulas.hpp"

namespace parkfn {

namespace {

using rows = std::vector<check_row>;

std::string nm(std::initializer_list<std::pair<const char*, long>> fields) {
  std::string out;
  for (const auto& [key, value] : fields) {
    if (!out.empty()) out += ' ';
    out += key;
    out += '=';
    out += std::to_string(value);
  }
  return out;
}

void add(rows& out, std::string_view suite, std::string name, bool passed, std::string detail = {}) {
  out.push_back(check_row{std::string(suite), std::move(name), passed, std::move(detail)});
}

int pick(int requested, int fallback) { return requested > 0 ? requested : fallback; }

// Every subset of [n] as a restriction set, in order of bitmask.
std::vector<restriction_set> all_subsets(int n) {
  std::vector<restriction_set> out;
  for (unsigned mask = 0; mask < (1U << n); ++mask) {
    std::vector<int> elems;
    for (int i = 0; i < n; ++i) {
      if (mask & (1U << i)) elems.push_back(i + 1);
    }
    out.emplace_back(n, std::move(elems));
  }
  return out;
}

rows formulas_suite(const verify_bounds& b) {
  constexpr std::string_view suite = "formulas";
  rows out;
  const int n_max = pick(b.n_max, 6);
  for (int n = 1; n <= n_max; ++n) {
    const auto full = restriction_set::full(n);
    const big_int pf = count_restricted(n, full, b.threads);
    add(out, suite, nm({{"pf_total n", n}}), pf == pf_total(n), to_decimal(pf));
    if (n >= 2) {
      const big_int ppf = count_prime_restricted(n, full, b.threads);
      add(out, suite, nm({{"ppf_total n", n}}), ppf == ppf_total(n), to_decimal(ppf));
    }
    for (int s = 1; s <= n; ++s) {
      const auto seg = restriction_set::initial_segment(n, s);
      const big_int brute = count_restricted(n, seg, b.threads);
      const big_int sub = restricted_subtractive(n, s);
      const big_int alt = restricted_alternating(n, s);
      add(out, suite, nm({{"restricted n", n}, {"s", s}}), brute == sub && sub == alt,
          to_decimal(brute) + " " + to_decimal(sub) + " " + to_decimal(alt));
      if (s < n) {
        const big_int pbrute = count_prime_restricted(n, seg, b.threads);
        const big_int psub = prime_subtractive(n, s);
        const big_int palt = prime_alternating(n, s);
        add(out, suite, nm({{"prime n", n}, {"s", s}}), pbrute == psub && psub == palt,
            to_decimal(pbrute) + " " + to_decimal(psub) + " " + to_decimal(palt));
      }
    }
  }
  const int formula_max = std::max(12, n_max);
  for (int n = 1; n <= formula_max; ++n) {
    bool ok = true;
    for (int s = 1; s <= n; ++s) {
      ok = ok && restricted_subtractive(n, s) == restricted_alternating(n, s);
      if (s < n) ok = ok && prime_subtractive(n, s) == prime_alternating(n, s);
    }
    add(out, suite, nm({{"formula pairs n", n}}), ok);
  }
  return out;
}

rows bijections_suite(const verify_bounds& b) {
  constexpr std::string_view suite = "bijections";
  rows out;
  const int n_max = pick(b.n_max, 5);
  for (int n = 1; n <= n_max; ++n) {
    bool ok = true;
    int sets = 0;
    for (const auto& S : all_subsets(n)) {
      if (!S.contains(1)) continue;
      ++sets;
      const auto T = build_T(S, n);
      const auto primes = enum_prime_restricted(n, S);
      std::set<preference_list> images;
      for (const auto& p : primes) {
        const auto img = prime_to_restricted(p, S, n);
        const bool in_t = std::all_of(img.begin(), img.end(), [&](int v) { return T.contains(v); });
        ok = ok && in_t && is_parking_function(img) && restricted_to_prime(img, S, n) == p;
        images.insert(img);
      }
      const auto targets = enum_restricted(n, T);
      ok = ok && images.size() == primes.size() && targets.size() == primes.size();
      for (const auto& t : targets) ok = ok && prime_to_restricted(restricted_to_prime(t, S, n), S, n) == t;
    }
    add(out, suite, nm({{"prime<->restricted n", n}}), ok, std::to_string(sets) + " sets");

    bool u_ok = true;
    for (const auto& S : all_subsets(n)) {
      if (S.empty()) continue;
      const auto u = u_vector(S, n);
      std::set<preference_list> image;
      for_each_restricted(n, S, [&](std::span<const int> w) {
        image.insert(to_u_parking(preference_list(std::vector<int>(w.begin(), w.end())), S));
      });
      std::set<preference_list> u_parking;
      const auto alphabet = restriction_set::full(static_cast<int>(S.size()));
      for_each_word(n, alphabet.elements(), [&](std::span<const int> w) {
        if (is_u_parking(w, u)) u_parking.insert(preference_list(std::vector<int>(w.begin(), w.end())));
      });
      const auto pf_count = count_restricted(n, S);
      u_ok = u_ok && image == u_parking && big_int(static_cast<unsigned long>(image.size())) == pf_count;
    }
    add(out, suite, nm({{"u-parking n", n}}), u_ok);
  }
  return out;
}

rows involution_suite(const verify_bounds& b) {
  constexpr std::string_view suite = "involution";
  rows out;
  const int n_max = pick(b.n_max, 5);
  for (int variant = 0; variant < 2; ++variant) {
    const bool prime = variant == 1;
    for (int n = 1; n <= n_max; ++n) {
      for (int s = 1; s <= n; ++s) {
        bool ok = true;
        big_int signed_sum = 0;
        long fixed = 0;
        std::vector<long> by_indigo(n + 1, 0);
        for_each_colored(n, s, prime, [&](const colored_pf& c) {
          const long reds = static_cast<long>(c.red_count());
          signed_sum += reds % 2 == 0 ? 1 : -1;
          ++by_indigo[c.indigo_count()];
          const auto image = involution(c);
          if (!image) {
            ++fixed;
            ok = ok && reds == 0 && c.prefs.max_value() <= s;
            return;
          }
          ok = ok && is_valid_coloring(*image) && !(*image == c) &&
               (static_cast<long>(image->red_count()) + reds) % 2 == 1;
          const auto back = involution(*image);
          ok = ok && back && *back == c;
        });
        const auto seg = restriction_set::initial_segment(n, s);
        const big_int target = prime ? count_prime_restricted(n, seg) : count_restricted(n, seg);
        ok = ok && signed_sum == target && big_int(fixed) == target;
        for (int i = s; i <= n; ++i) {
          const big_int colorings =
              prime ? binomial(n, i) * ipow(i - 1, i - 1) * ipow(i - s, n - i)
                    : binomial(n, i) * ipow(i + 1, i - 1) * ipow(i + 1 - s, n - i);
          ok = ok && colorings == by_indigo[i];
        }
        add(out, suite, std::string(prime ? "prime " : "plain ") + nm({{"n", n}, {"s", s}}), ok,
            "signed sum " + to_decimal(signed_sum));
      }
    }
  }
  return out;
}

rows abel_suite(const verify_bounds& b) {
  constexpr std::string_view suite = "abel";
  rows out;
  const int n_max = pick(b.n_max, 10);
  std::vector<big_rational> grid;
  for (int v = -3; v <= 3; ++v) grid.emplace_back(v);
  grid.emplace_back(1, 2);
  grid.emplace_back(-1, 2);
  for (int n = 1; n <= n_max; ++n) {
    bool ok = true;
    for (const auto& x : grid) {
      for (const auto& y : grid) ok = ok && abel_check(n, x, y).equal;
    }
    for (int s = 1; s <= n; ++s) {
      const auto plus = abel_check(n, 1, big_rational(s - n - 1));
      ok = ok && plus.equal && plus.lhs == big_rational(ipow(s, n)) &&
           restricted_abel_sum(n, s) == big_rational(ipow(s, n));
      const auto minus = abel_check(n, -1, big_rational(s - n));
      ok = ok && minus.equal && minus.lhs == big_rational(ipow(s - 1, n)) &&
           prime_abel_sum(n, s) == -big_rational(ipow(s - 1, n));
      ok = ok && abel_check(n, -1, big_rational(s - n + 1)).equal;
    }
    add(out, suite, nm({{"grid n", n}}), ok);
  }
  const int poly_max = std::min(n_max, 8);
  for (int n = 1; n <= poly_max; ++n) {
    bool ok = true;
    for (int s = 1; s <= n; ++s) {
      const auto sub = ones_poly_subtractive(n, s);
      const auto alt = ones_poly_alternating(n, s);
      ok = ok && sub == alt && sub.coeff(0) == 0 && sub.evaluate(big_int(1)) == restricted_subtractive(n, s);
      if (n <= 6) ok = ok && sub == int_polynomial(ones_distribution(n, s));
    }
    const auto full = int_polynomial::x() * pow(int_polynomial({n, 1}), static_cast<unsigned long>(n - 1));
    ok = ok && ones_poly_subtractive(n, n) == full;
    add(out, suite, nm({{"ones enumerator n", n}}), ok);
  }
  return out;
}

rows orbits_suite(const verify_bounds& b) {
  constexpr std::string_view suite = "orbits";
  rows out;
  const int n_max = pick(b.n_max, 8);
  for (int n = 1; n <= n_max; ++n) {
    bool ok = true;
    for (int s = 1; s <= n; ++s) {
      const big_int orbits = count_nondecreasing_restricted(n, s);
      ok = ok && orbits == catalan_triangle(n, s - 1);
      if (s >= 2 && n >= 2 && s <= n - 1) {
        ok = ok && orbits == count_nondecreasing_restricted(n - 1, s) +
                                 count_nondecreasing_restricted(n, s - 1);
      }
    }
    ok = ok && count_nondecreasing_restricted(n, n) == catalan_number(n);
    add(out, suite, nm({{"n", n}}), ok, "C_n=" + to_decimal(catalan_number(n)));
  }
  return out;
}

rows fibers_suite(const verify_bounds& b) {
  constexpr std::string_view suite = "fibers";
  rows out;
  const int n_max = pick(b.n_max, 5);
  for (int n = 1; n <= n_max; ++n) {
    for (int s = 1; s <= n; ++s) {
      const auto histogram = outcome_histogram(n, s);
      std::vector<int> sigma(n);
      for (int i = 0; i < n; ++i) sigma[i] = i + 1;
      bool ok = true;
      big_int total = 0;
      do {
        const big_int formula = fiber_formula(sigma, s);
        auto it = histogram.find(sigma);
        ok = ok && formula == (it == histogram.end() ? big_int(0) : it->second);
        total += formula;
      } while (std::next_permutation(sigma.begin(), sigma.end()));
      ok = ok && total == count_restricted(n, restriction_set::initial_segment(n, s));
      add(out, suite, nm({{"n", n}, {"s", s}}), ok, "sum " + to_decimal(total));
    }
  }
  return out;
}

rows modular_suite(const verify_bounds& b) {
  constexpr std::string_view suite = "modular";
  rows out;
  for (auto [g, s] : {std::pair{2, 2}, {2, 3}, {3, 2}, {3, 3}}) {
    const big_int brute = count_restricted(g * s - 1, restriction_set::modular(g, g * s - 1));
    add(out, suite, nm({{"k=1 g", g}, {"s", s}}), brute == mod_count_k1(g, s), to_decimal(brute));
  }
  const int g_max = 4;
  const int s_max = 6;
  for (int g = 1; g <= g_max; ++g) {
    for (int s = 1; s <= s_max; ++s) {
      for (int k = 1; k < g * s; ++k) {
        if (space_size(g * s - k, static_cast<std::size_t>(s)) > b.budget) continue;
        const auto report = verify_relation(g, s, k, b.budget, b.threads);
        add(out, suite, nm({{"relation g", g}, {"s", s}, {"k", k}}), report.passed(),
            std::to_string(report.classes.size()) + " classes, #PF=" +
                to_decimal(report.brute_value));
        if (k == 2) {
          add(out, suite, nm({{"k=2 closed form g", g}, {"s", s}}),
              mod_count_k2(g, s) == report.brute_value);
        }
      }
    }
  }
  const auto left = circular_park(preference_list{7, 1, 1, 7, 7, 7, 4}, 3, 3);
  const auto left_parts = decompose(left);
  const auto left_linear = linearize(left);
  add(out, suite, "circular (7,1,1,7,7,7,4)",
      left_linear && *left_linear == preference_list{1, 4, 4, 1, 1, 1, 7} &&
          left_parts.gaps.parts == std::vector<int>{2} && left_parts.blocks.parts == std::vector<int>{3});
  const auto right = circular_park(preference_list{1, 4, 1, 4, 7, 4, 4}, 3, 3);
  const auto right_parts = decompose(right);
  add(out, suite, "circular (1,4,1,4,7,4,4)",
      !linearize(right) && right_parts.gaps.parts == std::vector<int>{1, 1} &&
          right_parts.blocks.parts == std::vector<int>{1, 2});
  return out;
}

rows defect_suite(const verify_bounds& b) {
  constexpr std::string_view suite = "defect";
  rows out;
  const int n_max = pick(b.n_max, 6);
  for (int n = 1; n <= n_max; ++n) {
    bool ok = true;
    for (int s = 1; s <= n; ++s) {
      ok = ok && count_min_defect(n, s) == count_restricted(n, restriction_set::initial_segment(n, s));
    }
    add(out, suite, nm({{"n", n}}), ok);
  }
  return out;
}

const std::map<std::string_view, std::function<rows(const verify_bounds&)>>& registry() {
  static const std::map<std::string_view, std::function<rows(const verify_bounds&)>> table{
      {"formulas", formulas_suite}, {"bijections", bijections_suite},
      {"involution", involution_suite}, {"abel", abel_suite},
      {"orbits", orbits_suite}, {"fibers", fibers_suite},
      {"modular", modular_suite}, {"defect", defect_suite},
  };
  return table;
}

}  // namespace

const std::vector<std::string_view>& suite_names() {
  static const std::vector<std::string_view> names{"formulas", "bijections", "involution", "abel",
                                                   "orbits",   "fibers",     "modular",    "defect"};
  return names;
}

bool is_suite(std::string_view name) {
  return name == "all" || registry().count(name) > 0;
}

std::vector<check_row> run_suite(std::string_view suite, const verify_bounds& bounds) {
  if (suite == "all") {
    rows out;
    for (auto name : suite_names()) {
      auto part = registry().at(name)(bounds);
      out.insert(out.end(), part.begin(), part.end());
    }
    return out;
  }
  auto it = registry().find(suite);
  if (it == registry().end()) {
    throw parking_error(errc::domain_error, "unknown suite '" + std::string(suite) + "'");
  }
  return it->second(bounds);
}

}  // namespace parkfn
