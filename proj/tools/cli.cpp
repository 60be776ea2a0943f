#include "cli.hpp"

#include <algorithm>
#include <cmath>
#include <future>
#include <optional>
#include <sstream>
#include <thread>

#include "CLI11.hpp"
#include "json_io.hpp"
#include "parkfn/enumerate.hpp"
#include "parkfn/error.hpp"
#include "parkfn/formulas.hpp"

namespace parkfn::cli {

namespace {

struct global_options {
  std::string format;
  std::string budget_text = "1e7";
  unsigned threads = 1;

  std::uint64_t budget() const {
    std::size_t used = 0;
    double value = 0;
    try {
      value = std::stod(budget_text, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (used != budget_text.size() || !(value >= 1) || value > 9.2e18 ||
        value != std::floor(value)) {
      throw parking_error(errc::domain_error, "--budget wants a positive integer, got '" +
                                                  budget_text + "'");
    }
    return static_cast<std::uint64_t>(value);
  }

  unsigned worker_count() const {
    return threads == 0 ? std::max(1U, std::thread::hardware_concurrency()) : threads;
  }

  std::string format_or(const char* fallback) const { return format.empty() ? fallback : format; }
};

struct restriction_options {
  std::optional<int> n;
  std::optional<int> s;
  std::optional<std::string> set;
  std::optional<int> g;
  std::optional<int> k;

  void attach(CLI::App* cmd) {
    cmd->add_option("--n", n, "Number of cars");
    cmd->add_option("--s", s, "Allow spots 1..s (or s rows with --g)");
    cmd->add_option("--set", set, "Allowed spots, e.g. 1,3,4");
    cmd->add_option("--g", g, "Row width for modular restrictions");
    cmd->add_option("--k", k, "Spots left empty for modular restrictions");
  }

  restriction_spec resolve() const;
};

std::vector<int> parse_int_list(const std::string& text, const char* what) {
  std::vector<int> out;
  if (text.empty()) return out;
  std::stringstream in(text);
  std::string item;
  while (std::getline(in, item, ',')) {
    std::size_t used = 0;
    int value = 0;
    try {
      value = std::stoi(item, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (used == 0 || used != item.size()) {
      throw parking_error(errc::domain_error,
                          std::string("malformed ") + what + " '" + text + "'");
    }
    out.push_back(value);
  }
  if (text.back() == ',') {
    throw parking_error(errc::domain_error, std::string("malformed ") + what + " '" + text + "'");
  }
  return out;
}

restriction_spec restriction_options::resolve() const {
  if (g) {
    if (set) throw parking_error(errc::domain_error, "--g cannot be combined with --set");
    if (!s || !k) throw parking_error(errc::domain_error, "--g needs --s and --k");
    auto spec = modular_spec(*g, *s, *k);
    if (n && *n != spec.n) {
      throw parking_error(errc::domain_error, "--n must equal g*s - k = " + std::to_string(spec.n));
    }
    return spec;
  }
  if (k) throw parking_error(errc::domain_error, "--k needs --g");
  if (!n) throw parking_error(errc::domain_error, "--n is required");
  if (*n < 1) throw parking_error(errc::domain_error, "--n must be at least 1");
  if (set) {
    if (s) throw parking_error(errc::domain_error, "--s cannot be combined with --set");
    return set_spec(*n, parse_int_list(*set, "set"));
  }
  return segment_spec(*n, s.value_or(*n));
}

// The largest s with S = {1, ..., s}, if S is an initial segment.
std::optional<int> as_segment(const restriction_spec& spec) {
  if (spec.kind == restriction_kind::segment) return spec.s;
  if (spec.kind != restriction_kind::set) return std::nullopt;
  for (std::size_t i = 0; i < spec.elements.size(); ++i) {
    if (spec.elements[i] != static_cast<int>(i) + 1) return std::nullopt;
  }
  return static_cast<int>(spec.elements.size());
}

std::optional<big_int> by_formula(const std::string& family, const restriction_spec& spec,
                                  const std::string& method) {
  const int n = spec.n;
  if (auto s = as_segment(spec)) {
    if (*s == 0) return big_int(0);
    if (family == "pf") {
      return method == "alternating" ? restricted_alternating(n, *s) : restricted_subtractive(n, *s);
    }
    if (*s == n) return ppf_total(n);
    return method == "alternating" ? prime_alternating(n, *s) : prime_subtractive(n, *s);
  }
  if (spec.kind == restriction_kind::modular && family == "pf" && method == "auto") {
    if (spec.k == 1) return mod_count_k1(spec.g, spec.s);
    if (spec.k == 2) return mod_count_k2(spec.g, spec.s);
    return mod_count_general(spec.g, spec.s, spec.k);
  }
  return std::nullopt;
}

void require_budget(const restriction_spec& spec, std::uint64_t budget) {
  const auto alphabet = spec.resolve().size();
  const auto space = space_size(spec.n, alphabet);
  if (space > budget) {
    throw parking_error(errc::budget_exceeded,
                        std::to_string(alphabet) + "^" + std::to_string(spec.n) +
                            " candidate lists exceeds --budget " + std::to_string(budget));
  }
}

big_int by_brute_force(const std::string& family, const restriction_spec& spec,
                       unsigned threads) {
  const auto allowed = spec.resolve();
  return family == "pf" ? count_restricted(spec.n, allowed, threads)
                        : count_prime_restricted(spec.n, allowed, threads);
}

int cmd_count(const global_options& global, const std::string& family,
              const restriction_options& ropts, const std::string& method, std::ostream& out,
              std::ostream& err) {
  const auto spec = ropts.resolve();
  const auto budget = global.budget();
  count_record rec{family, spec, method, 0};
  if (method == "brute") {
    require_budget(spec, budget);
    rec.count = by_brute_force(family, spec, global.worker_count());
  } else if (method == "auto") {
    const auto formula = by_formula(family, spec, method);
    const bool brute_ok = space_size(spec.n, spec.resolve().size()) <= budget;
    if (!formula && !brute_ok) require_budget(spec, budget);
    std::optional<big_int> brute;
    if (brute_ok) brute = by_brute_force(family, spec, global.worker_count());
    if (formula && brute && *formula != *brute) {
      err << "MISMATCH: formula " << to_decimal(*formula) << " brute force " << to_decimal(*brute)
          << "\n";
      return exit_mismatch;
    }
    rec.count = formula ? *formula : *brute;
  } else {
    const auto formula = by_formula(family, spec, method);
    if (!formula) {
      throw parking_error(errc::domain_error, "no " + method + " formula for this restriction");
    }
    rec.count = *formula;
  }
  if (global.format_or("text") == "json") {
    out << to_json(rec).dump() << "\n";
  } else {
    out << to_decimal(rec.count) << "\n";
  }
  return exit_ok;
}

std::string csv_quote(const std::string& field) { return "\"" + field + "\""; }

std::string join(const std::vector<int>& values, const char* sep) {
  std::string out;
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (i) out += sep;
    out += std::to_string(values[i]);
  }
  return out;
}

int cmd_enum(const global_options& global, const std::string& family,
             const restriction_options& ropts, std::ostream& out) {
  const auto spec = ropts.resolve();
  require_budget(spec, global.budget());
  const auto allowed = spec.resolve();
  const auto format = global.format_or("lines");
  if (format == "csv") out << "prefs,outcome,ones\n";
  auto emit = [&](std::span<const int> w) {
    enum_record rec;
    rec.prefs = preference_list(std::vector<int>(w.begin(), w.end()));
    rec.restriction = spec;
    rec.outcome = outcome_permutation(rec.prefs);
    rec.ones = static_cast<int>(ones_count(rec.prefs));
    if (format == "json") {
      out << to_json(rec).dump() << "\n";
    } else if (format == "csv") {
      out << csv_quote(join(rec.prefs.vector(), ",")) << ',' << csv_quote(join(rec.outcome, ","))
          << ',' << rec.ones << "\n";
    } else {
      out << to_string(rec.prefs) << "\n";
    }
  };
  if (family == "pf") {
    for_each_restricted(spec.n, allowed, emit);
  } else {
    for_each_prime_restricted(spec.n, allowed, emit);
  }
  return exit_ok;
}

std::string spots_text(const std::vector<std::optional<int>>& occupancy) {
  std::string out;
  for (std::size_t i = 0; i < occupancy.size(); ++i) {
    if (i) out += ' ';
    out += occupancy[i] ? std::to_string(*occupancy[i]) : "_";
  }
  return out;
}

int cmd_simulate(const global_options& global, const std::string& list,
                 const std::optional<int>& spots, const std::optional<std::string>& circular,
                 std::ostream& out) {
  const preference_list prefs(parse_int_list(list, "preference list"));
  const bool json_out = global.format_or("text") == "json";
  if (circular) {
    if (spots) throw parking_error(errc::domain_error, "--spots cannot be combined with --circular");
    const auto gs = parse_int_list(*circular, "--circular value");
    if (gs.size() != 2) throw parking_error(errc::domain_error, "--circular wants g,s");
    const auto rec = make_circular(circular_park(prefs, gs[0], gs[1]));
    if (json_out) {
      out << to_json(rec).dump() << "\n";
      return exit_ok;
    }
    auto maybe = [](const std::optional<std::vector<int>>& v) {
      return v ? join(*v, ",") : std::string("none");
    };
    out << "occupancy: " << spots_text(rec.occupancy) << "\n"
        << "gaps: " << maybe(rec.gaps) << "\n"
        << "blocks: " << maybe(rec.blocks) << "\n"
        << "anchor: " << (rec.anchor ? std::to_string(*rec.anchor) : "none") << "\n"
        << "linearization: " << maybe(rec.linearization) << "\n";
    return exit_ok;
  }
  const int m = spots.value_or(static_cast<int>(prefs.size()));
  const auto rec = make_simulation(prefs, m);
  if (json_out) {
    out << to_json(rec).dump() << "\n";
    return exit_ok;
  }
  out << "occupancy: " << spots_text(rec.occupancy) << "\n"
      << "unparked: " << (rec.unparked.empty() ? "none" : join(rec.unparked, ",")) << "\n"
      << "defect: " << rec.defect << "\n"
      << "outcome: " << (rec.outcome ? join(*rec.outcome, ",") : "none") << "\n";
  return exit_ok;
}

int cmd_verify(const global_options& global, const std::string& suite, int n_max,
               std::ostream& out) {
  if (!is_suite(suite)) throw parking_error(errc::domain_error, "unknown suite '" + suite + "'");
  verify_bounds bounds;
  bounds.n_max = n_max;
  bounds.budget = global.budget();
  bounds.threads = global.worker_count();

  std::vector<check_row> rows;
  if (suite == "all" && bounds.threads > 1) {
    // Suites run concurrently but are emitted in their fixed order.
    std::vector<std::future<std::vector<check_row>>> parts;
    for (auto name : suite_names()) {
      parts.push_back(std::async(std::launch::async, [name, bounds] { return run_suite(name, bounds); }));
    }
    for (auto& part : parts) {
      auto chunk = part.get();
      rows.insert(rows.end(), chunk.begin(), chunk.end());
    }
  } else {
    rows = run_suite(suite, bounds);
  }
  const auto failed = std::count_if(rows.begin(), rows.end(), [](auto& r) { return !r.passed; });

  const auto format = global.format_or("text");
  if (format == "json") {
    json doc;
    doc["suite"] = suite;
    doc["passed"] = failed == 0;
    doc["rows"] = json::array();
    for (const auto& row : rows) doc["rows"].push_back(to_json(row));
    out << doc.dump() << "\n";
  } else if (format == "csv") {
    out << "suite,name,passed,detail\n";
    for (const auto& row : rows) {
      out << row.suite << ',' << csv_quote(row.name) << ',' << (row.passed ? "true" : "false")
          << ',' << csv_quote(row.detail) << "\n";
    }
  } else {
    std::size_t width = 0;
    for (const auto& row : rows) width = std::max(width, row.suite.size() + row.name.size() + 1);
    for (const auto& row : rows) {
      std::string label = row.suite + " " + row.name;
      out << (row.passed ? "PASS  " : "FAIL  ") << label;
      if (!row.detail.empty()) out << std::string(width - label.size() + 2, ' ') << row.detail;
      out << "\n";
    }
    out << rows.size() << " checks, " << failed << " failed\n";
  }
  return failed == 0 ? exit_ok : exit_mismatch;
}

int cmd_table(const global_options& global, const std::string& family, int n_max,
              const std::optional<int>& n, const std::optional<int>& s, std::ostream& out) {
  const auto format = global.format_or("csv");
  if (family == "ones") {
    if (!n || !s) throw parking_error(errc::domain_error, "table ones needs --n and --s");
    if (*s < 1 || *s > *n) throw parking_error(errc::domain_error, "need 1 <= s <= n");
    const auto poly = ones_poly_subtractive(*n, *s);
    std::vector<std::string> coeffs;
    for (int d = 0; d <= *n; ++d) coeffs.push_back(to_decimal(poly.coeff(d)));
    if (format == "json") {
      json doc;
      doc["family"] = family;
      doc["n"] = *n;
      doc["s"] = *s;
      doc["coefficients"] = coeffs;
      out << doc.dump() << "\n";
    } else if (format == "csv") {
      out << "ones,count\n";
      for (std::size_t d = 0; d < coeffs.size(); ++d) out << d << ',' << coeffs[d] << "\n";
    } else {
      out << "c=(";
      for (std::size_t d = 0; d < coeffs.size(); ++d) out << (d ? "," : "") << coeffs[d];
      out << ")\n";
    }
    return exit_ok;
  }

  if (n_max < 1) throw parking_error(errc::domain_error, "--n-max must be at least 1");
  // rows[i] = (row label, entries)
  std::vector<std::pair<int, std::vector<big_int>>> rows;
  std::string column = "s";
  int first_column = 1;
  if (family == "pf-restricted" || family == "ppf-restricted") {
    for (int r = 1; r <= n_max; ++r) {
      std::vector<big_int> entries;
      for (int c = 1; c <= r; ++c) {
        if (family == "pf-restricted") {
          entries.push_back(restricted_subtractive(r, c));
        } else {
          entries.push_back(c == r ? ppf_total(r) : prime_subtractive(r, c));
        }
      }
      rows.emplace_back(r, std::move(entries));
    }
  } else if (family == "catalan-triangle") {
    column = "k";
    first_column = 0;
    for (int r = 0; r <= n_max; ++r) {
      std::vector<big_int> entries;
      for (int c = 0; c <= r; ++c) {
        entries.push_back(c == r ? catalan_number(r) : catalan_triangle(r, c));
      }
      rows.emplace_back(r, std::move(entries));
    }
  } else {
    throw parking_error(errc::domain_error, "unknown table '" + family + "'");
  }

  if (format == "json") {
    json doc;
    doc["family"] = family;
    doc["rows"] = json::array();
    for (const auto& [label, entries] : rows) {
      json row;
      row["n"] = label;
      row["first_" + column] = first_column;
      row["values"] = json::array();
      for (const auto& e : entries) row["values"].push_back(to_decimal(e));
      doc["rows"].push_back(row);
    }
    out << doc.dump() << "\n";
    return exit_ok;
  }
  const std::size_t widest = rows.back().second.size();
  out << 'n';
  for (std::size_t c = 0; c < widest; ++c) out << ',' << column << '=' << first_column + static_cast<int>(c);
  out << "\n";
  for (const auto& [label, entries] : rows) {
    out << label;
    for (std::size_t c = 0; c < widest; ++c) {
      out << ',';
      if (c < entries.size()) out << to_decimal(entries[c]);
    }
    out << "\n";
  }
  return exit_ok;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact counts, enumeration and checks for restricted parking functions", "parkfn"};
  app.require_subcommand(1);
  app.fallthrough();

  global_options global;
  app.add_option("--format", global.format, "Output format")
      ->check(CLI::IsMember({"text", "json", "csv", "lines"}));
  app.add_option("--budget", global.budget_text,
                 "Largest brute-force space, in candidate lists (default 1e7)");
  app.add_option("--threads", global.threads, "Worker threads; 0 uses every core");

  std::string family;
  std::string method = "auto";
  restriction_options ropts;
  auto* count = app.add_subcommand("count", "Count restricted (prime) parking functions");
  count->add_option("family", family, "pf or ppf")->required()->check(CLI::IsMember({"pf", "ppf"}));
  count->add_option("--method", method, "brute, subtractive, alternating or auto")
      ->check(CLI::IsMember({"brute", "subtractive", "alternating", "auto"}));
  ropts.attach(count);

  restriction_options enum_ropts;
  std::string enum_family;
  auto* enumerate = app.add_subcommand("enum", "List restricted (prime) parking functions");
  enumerate->add_option("family", enum_family, "pf or ppf")
      ->required()
      ->check(CLI::IsMember({"pf", "ppf"}));
  enum_ropts.attach(enumerate);

  std::string list;
  std::optional<int> spots;
  std::optional<std::string> circular;
  auto* simulate = app.add_subcommand("simulate", "Run the parking procedure on one list");
  simulate->add_option("prefs", list, "Comma-separated preferences, e.g. 1,4,4,1")->required();
  simulate->add_option("--spots", spots, "Street length (default: number of cars)");
  simulate->add_option("--circular", circular, "Park on a circle of g*s spots, given as g,s");

  std::string suite;
  int n_max = 0;
  auto* verify = app.add_subcommand("verify", "Check formulas against brute force");
  verify->add_option("suite", suite, "Suite name or all")->required();
  verify->add_option("--n-max", n_max, "Largest number of cars (default per suite)");

  std::string table_family;
  int table_n_max = 8;
  std::optional<int> table_n;
  std::optional<int> table_s;
  auto* table = app.add_subcommand("table", "Print count tables");
  table->add_option("family", table_family, "pf-restricted, ppf-restricted, catalan-triangle or ones")
      ->required();
  table->add_option("--n-max", table_n_max, "Rows 1..n-max");
  table->add_option("--n", table_n, "Cars (ones)");
  table->add_option("--s", table_s, "Allowed spots 1..s (ones)");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return exit_ok;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return exit_usage;
  }

  try {
    if (*count) return cmd_count(global, family, ropts, method, out, err);
    if (*enumerate) return cmd_enum(global, enum_family, enum_ropts, out);
    if (*simulate) return cmd_simulate(global, list, spots, circular, out);
    if (*verify) return cmd_verify(global, suite, n_max, out);
    if (*table) return cmd_table(global, table_family, table_n_max, table_n, table_s, out);
  } catch (const parking_error& e) {
    err << "error: " << e.what() << "\n";
    return exit_usage;
  }
  return exit_usage;
}

}  // namespace parkfn::cli
