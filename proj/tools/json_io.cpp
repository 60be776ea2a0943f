#include "json_io.hpp"

#include "parkfn/error.hpp"

namespace parkfn::cli {

namespace {

json occupancy_json(const std::vector<std::optional<int>>& occupancy) {
  json out = json::array();
  for (const auto& spot : occupancy) out.push_back(spot ? json(*spot) : json(nullptr));
  return out;
}

std::vector<std::optional<int>> occupancy_from(const std::vector<int>& raw) {
  std::vector<std::optional<int>> out;
  out.reserve(raw.size());
  for (int car : raw) out.push_back(car == empty_spot ? std::nullopt : std::optional<int>(car));
  return out;
}

std::vector<std::optional<int>> occupancy_from_json(const json& j) {
  if (!j.is_array()) throw parking_error(errc::domain_error, "occupancy must be an array");
  std::vector<std::optional<int>> out;
  for (const auto& spot : j) {
    out.push_back(spot.is_null() ? std::nullopt : std::optional<int>(spot.get<int>()));
  }
  return out;
}

template <typename T>
json optional_json(const std::optional<T>& v) {
  return v ? json(*v) : json(nullptr);
}

template <typename T>
std::optional<T> optional_from(const json& j, const char* key) {
  const auto& v = j.at(key);
  if (v.is_null()) return std::nullopt;
  return v.get<T>();
}

template <typename F>
auto guarded(F&& parse) -> decltype(parse()) {
  try {
    return parse();
  } catch (const json::exception& e) {
    throw parking_error(errc::domain_error, std::string("malformed JSON: ") + e.what());
  }
}

std::string kind_name(restriction_kind kind) {
  switch (kind) {
    case restriction_kind::set: return "set";
    case restriction_kind::segment: return "segment";
    case restriction_kind::modular: return "modular";
  }
  return "segment";
}

}  // namespace

restriction_set restriction_spec::resolve() const {
  switch (kind) {
    case restriction_kind::set: return restriction_set(n, elements);
    case restriction_kind::segment: return restriction_set::initial_segment(n, s);
    case restriction_kind::modular: return restriction_set::modular(g, n);
  }
  throw parking_error(errc::domain_error, "unknown restriction kind");
}

restriction_spec segment_spec(int n, int s) {
  if (n < 0 || s < 0 || s > n) {
    throw parking_error(errc::domain_error, "need 0 <= s <= n, got n=" + std::to_string(n) +
                                                " s=" + std::to_string(s));
  }
  restriction_spec spec;
  spec.kind = restriction_kind::segment;
  spec.n = n;
  spec.s = s;
  return spec;
}

restriction_spec set_spec(int n, std::vector<int> elements) {
  restriction_spec spec;
  spec.kind = restriction_kind::set;
  spec.n = n;
  // Validates and sorts.
  const restriction_set checked(n, std::move(elements));
  spec.elements.assign(checked.elements().begin(), checked.elements().end());
  return spec;
}

restriction_spec modular_spec(int g, int s, int k) {
  if (g < 1 || s < 1 || k < 1 || k >= g * s) {
    throw parking_error(errc::domain_error, "need g, s >= 1 and 1 <= k < gs");
  }
  restriction_spec spec;
  spec.kind = restriction_kind::modular;
  spec.g = g;
  spec.s = s;
  spec.k = k;
  spec.n = g * s - k;
  return spec;
}

simulation_record make_simulation(const preference_list& prefs, int num_spots) {
  const auto result = park(prefs, num_spots);
  simulation_record rec;
  rec.occupancy = occupancy_from(result.occupancy);
  rec.unparked = result.unparked;
  rec.defect = static_cast<int>(result.defect());
  if (result.defect() == 0 && static_cast<int>(prefs.size()) == num_spots) {
    rec.outcome = result.occupancy;
  }
  return rec;
}

circular_record make_circular(const circular_state& state) {
  circular_record rec;
  rec.g = state.g;
  rec.s = state.s;
  rec.occupancy = occupancy_from(state.occupancy);
  if (!state.prefs.empty() && state.empty_count() > 0) {
    const auto parts = decompose(state);
    rec.gaps = parts.gaps.parts;
    rec.blocks = parts.blocks.parts;
    rec.anchor = parts.anchor;
  }
  if (auto linear = linearize(state)) rec.linearization = linear->vector();
  return rec;
}

json to_json(const preference_list& prefs) { return json(prefs.vector()); }

json to_json(const restriction_spec& spec) {
  json j;
  j["kind"] = kind_name(spec.kind);
  j["n"] = spec.n;
  switch (spec.kind) {
    case restriction_kind::set: j["elements"] = spec.elements; break;
    case restriction_kind::segment: j["s"] = spec.s; break;
    case restriction_kind::modular:
      j["g"] = spec.g;
      j["s"] = spec.s;
      j["k"] = spec.k;
      break;
  }
  return j;
}

json to_json(const count_record& rec) {
  json j;
  j["family"] = rec.family;
  j["n"] = rec.restriction.n;
  j["restriction"] = to_json(rec.restriction);
  j["method"] = rec.method;
  j["count"] = to_decimal(rec.count);
  return j;
}

json to_json(const enum_record& rec) {
  json j;
  j["prefs"] = to_json(rec.prefs);
  j["n"] = rec.restriction.n;
  j["restriction"] = to_json(rec.restriction);
  j["outcome"] = rec.outcome;
  j["ones"] = rec.ones;
  return j;
}

json to_json(const simulation_record& rec) {
  json j;
  j["occupancy"] = occupancy_json(rec.occupancy);
  j["unparked"] = rec.unparked;
  j["defect"] = rec.defect;
  j["outcome"] = optional_json(rec.outcome);
  return j;
}

json to_json(const circular_record& rec) {
  json j;
  j["g"] = rec.g;
  j["s"] = rec.s;
  j["occupancy"] = occupancy_json(rec.occupancy);
  j["gaps"] = optional_json(rec.gaps);
  j["blocks"] = optional_json(rec.blocks);
  j["anchor"] = optional_json(rec.anchor);
  j["linearization"] = optional_json(rec.linearization);
  return j;
}

json to_json(const check_row& row) {
  json j;
  j["suite"] = row.suite;
  j["name"] = row.name;
  j["passed"] = row.passed;
  j["detail"] = row.detail;
  return j;
}

preference_list preference_list_from_json(const json& j) {
  return guarded([&] { return preference_list(j.get<std::vector<int>>()); });
}

restriction_spec restriction_from_json(const json& j) {
  return guarded([&] {
    const auto kind = j.at("kind").get<std::string>();
    const int n = j.at("n").get<int>();
    restriction_spec spec;
    if (kind == "set") {
      spec = set_spec(n, j.at("elements").get<std::vector<int>>());
    } else if (kind == "segment") {
      spec = segment_spec(n, j.at("s").get<int>());
    } else if (kind == "modular") {
      spec = modular_spec(j.at("g").get<int>(), j.at("s").get<int>(), j.at("k").get<int>());
    } else {
      throw parking_error(errc::domain_error, "unknown restriction kind '" + kind + "'");
    }
    if (spec.n != n) throw parking_error(errc::domain_error, "modular length disagrees with n");
    return spec;
  });
}

count_record count_from_json(const json& j) {
  return guarded([&] {
    count_record rec;
    rec.family = j.at("family").get<std::string>();
    rec.restriction = restriction_from_json(j.at("restriction"));
    rec.method = j.at("method").get<std::string>();
    if (rec.count.set_str(j.at("count").get<std::string>(), 10) != 0) {
      throw parking_error(errc::domain_error, "count is not a decimal integer");
    }
    return rec;
  });
}

enum_record enum_from_json(const json& j) {
  return guarded([&] {
    enum_record rec;
    rec.prefs = preference_list_from_json(j.at("prefs"));
    rec.restriction = restriction_from_json(j.at("restriction"));
    rec.outcome = j.at("outcome").get<std::vector<int>>();
    rec.ones = j.at("ones").get<int>();
    return rec;
  });
}

simulation_record simulation_from_json(const json& j) {
  return guarded([&] {
    simulation_record rec;
    rec.occupancy = occupancy_from_json(j.at("occupancy"));
    rec.unparked = j.at("unparked").get<std::vector<int>>();
    rec.defect = j.at("defect").get<int>();
    rec.outcome = optional_from<std::vector<int>>(j, "outcome");
    return rec;
  });
}

circular_record circular_from_json(const json& j) {
  return guarded([&] {
    circular_record rec;
    rec.g = j.at("g").get<int>();
    rec.s = j.at("s").get<int>();
    rec.occupancy = occupancy_from_json(j.at("occupancy"));
    rec.gaps = optional_from<std::vector<int>>(j, "gaps");
    rec.blocks = optional_from<std::vector<int>>(j, "blocks");
    rec.anchor = optional_from<int>(j, "anchor");
    rec.linearization = optional_from<std::vector<int>>(j, "linearization");
    return rec;
  });
}

check_row check_row_from_json(const json& j) {
  return guarded([&] {
    return check_row{j.at("suite").get<std::string>(), j.at("name").get<std::string>(),
                     j.at("passed").get<bool>(), j.at("detail").get<std::string>()};
  });
}

}  // namespace parkfn::cli
