#pragma once

// JSON shapes emitted by the command-line tool, each with a parser that
// rebuilds the same value.

#include <optional>
#include <string>
#include <vector>

#include "json.hpp"
#include "parkfn/bigint.hpp"
#include "parkfn/circular.hpp"
#include "parkfn/parkcore.hpp"
#include "parkfn/verify.hpp"

namespace parkfn::cli {

using json = nlohmann::ordered_json;

enum class restriction_kind { set, segment, modular };

/// A restriction as typed on the command line. For the modular kind the
/// length is g*s - k and the allowed spots are 1, g+1, ... up to it.
struct restriction_spec {
  restriction_kind kind = restriction_kind::segment;
  int n = 0;
  std::vector<int> elements;  // set
  int s = 0;                  // segment, modular
  int g = 0;                  // modular
  int k = 0;                  // modular

  restriction_set resolve() const;
  bool operator==(const restriction_spec&) const = default;
};

restriction_spec segment_spec(int n, int s);
restriction_spec set_spec(int n, std::vector<int> elements);
restriction_spec modular_spec(int g, int s, int k);

struct count_record {
  std::string family;  // "pf" or "ppf"
  restriction_spec restriction;
  std::string method;
  big_int count;
  bool operator==(const count_record&) const = default;
};

struct enum_record {
  preference_list prefs;
  restriction_spec restriction;
  std::vector<int> outcome;
  int ones = 0;
  bool operator==(const enum_record&) const = default;
};

struct simulation_record {
  std::vector<std::optional<int>> occupancy;
  std::vector<int> unparked;
  int defect = 0;
  std::optional<std::vector<int>> outcome;
  bool operator==(const simulation_record&) const = default;
};

struct circular_record {
  int g = 1;
  int s = 1;
  std::vector<std::optional<int>> occupancy;
  std::optional<std::vector<int>> gaps;
  std::optional<std::vector<int>> blocks;
  std::optional<int> anchor;
  std::optional<std::vector<int>> linearization;
  bool operator==(const circular_record&) const = default;
};

simulation_record make_simulation(const preference_list& prefs, int num_spots);
circular_record make_circular(const circular_state& state);

json to_json(const preference_list& prefs);
json to_json(const restriction_spec& spec);
json to_json(const count_record& rec);
json to_json(const enum_record& rec);
json to_json(const simulation_record& rec);
json to_json(const circular_record& rec);
json to_json(const check_row& row);

// Parsers throw parking_error(domain_error) on malformed input.
preference_list preference_list_from_json(const json& j);
restriction_spec restriction_from_json(const json& j);
count_record count_from_json(const json& j);
enum_record enum_from_json(const json& j);
simulation_record simulation_from_json(const json& j);
circular_record circular_from_json(const json& j);
check_row check_row_from_json(const json& j);

}  // namespace parkfn::cli
