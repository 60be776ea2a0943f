#include <sstream>

#include "cli.hpp"
#include "doctest.h"
#include "json_io.hpp"
#include "parkfn/error.hpp"

using namespace parkfn;
using namespace parkfn::cli;

namespace {

struct run_result {
  int code;
  std::string out;
  std::string err;
};

run_result run(std::vector<std::string> args) {
  std::ostringstream out;
  std::ostringstream err;
  const int code = run_cli(args, out, err);
  return {code, out.str(), err.str()};
}

std::vector<std::string> lines(const std::string& text) {
  std::vector<std::string> out;
  std::istringstream in(text);
  for (std::string line; std::getline(in, line);) out.push_back(line);
  return out;
}

}  // namespace

TEST_CASE("count") {
  CHECK(run({"count", "pf", "--n", "5", "--s", "3"}).out == "206\n");
  CHECK(run({"count", "pf", "--g", "3", "--s", "3", "--k", "1"}).out == "2187\n");
  CHECK(run({"count", "ppf", "--n", "4", "--s", "4"}).out == "27\n");
  CHECK(run({"count", "pf", "--n", "5", "--s", "2", "--method", "alternating"}).out == "31\n");
  CHECK(run({"count", "pf", "--n", "5", "--set", "1,3,4", "--method", "brute"}).out ==
        run({"count", "pf", "--n", "5", "--set", "4,3,1"}).out);
  // Above the budget, auto trusts the formula alone.
  CHECK(run({"count", "pf", "--n", "12", "--s", "3"}).out == "527333\n");
}

TEST_CASE("count errors") {
  CHECK(run({"count", "pf", "--n", "12", "--method", "brute"}).code == exit_usage);
  CHECK(run({"count", "pf", "--n", "4", "--set", "1,3", "--method", "subtractive"}).code ==
        exit_usage);
  CHECK(run({"count", "pf", "--n", "3", "--s", "4"}).code == exit_usage);
  CHECK(run({"count", "xx", "--n", "3"}).code == exit_usage);
  CHECK(run({"count", "pf"}).code == exit_usage);
  CHECK(run({"count", "pf", "--g", "3", "--s", "3"}).code == exit_usage);
  CHECK(run({"--budget", "many", "count", "pf", "--n", "3"}).code == exit_usage);
  CHECK(run({"frobnicate"}).code == exit_usage);
  CHECK(run({"--help"}).code == exit_ok);
}

TEST_CASE("count json round-trips") {
  const auto r = run({"--format", "json", "count", "pf", "--g", "3", "--s", "3", "--k", "2"});
  REQUIRE(r.code == 0);
  const auto rec = count_from_json(json::parse(r.out));
  CHECK(rec.count == 393);
  CHECK(rec.restriction == modular_spec(3, 3, 2));
  CHECK(to_json(rec).dump() + "\n" == r.out);
}

TEST_CASE("enum") {
  CHECK(lines(run({"enum", "pf", "--n", "2", "--s", "2"}).out).size() == 3);
  CHECK(run({"enum", "pf", "--n", "2", "--set", "1"}).out == "(1,1)\n");
  CHECK(run({"enum", "ppf", "--n", "2"}).out == "(1,1)\n");
  const auto json_lines = lines(run({"enum", "pf", "--n", "3", "--s", "2", "--format", "json"}).out);
  CHECK(json_lines.size() == 7);
  for (const auto& line : json_lines) {
    const auto rec = enum_from_json(json::parse(line));
    CHECK(to_json(rec).dump() == line);
    CHECK(rec.outcome == outcome_permutation(rec.prefs));
  }
  const auto csv = lines(run({"enum", "pf", "--n", "2", "--format", "csv"}).out);
  CHECK(csv.front() == "prefs,outcome,ones");
  CHECK(csv.at(1) == "\"1,1\",\"1,2\",2");
}

TEST_CASE("simulate") {
  const auto linear = run({"simulate", "1,4,4,1,1,7,1", "--spots", "7"});
  CHECK(linear.out.find("defect: 0") != std::string::npos);
  CHECK(run({"simulate", "2,2", "--spots", "2"}).out.find("defect: 1") != std::string::npos);

  const auto j = run({"--format", "json", "simulate", "2,2", "--spots", "2"});
  CHECK(j.out == "{\"occupancy\":[null,1],\"unparked\":[2],\"defect\":1,\"outcome\":null}\n");
  CHECK(to_json(simulation_from_json(json::parse(j.out))).dump() + "\n" == j.out);

  const auto circ = run({"simulate", "7,1,1,7,7,7,4", "--circular", "3,3", "--format", "json"});
  const auto rec = circular_from_json(json::parse(circ.out));
  CHECK(rec.linearization == std::vector<int>{1, 4, 4, 1, 1, 1, 7});
  CHECK(rec.gaps == std::vector<int>{2});
  CHECK(rec.blocks == std::vector<int>{3});
  CHECK(to_json(rec).dump() + "\n" == circ.out);

  const auto none = run({"simulate", "1,4,1,4,7,4,4", "--circular", "3,3"});
  CHECK(none.out.find("linearization: none") != std::string::npos);

  CHECK(run({"simulate", "1,,2"}).code == exit_usage);
  CHECK(run({"simulate", "0,1"}).code == exit_usage);
  CHECK(run({"simulate", "2,1", "--circular", "3,3"}).code == exit_usage);
}

TEST_CASE("verify") {
  const auto r = run({"verify", "orbits", "--n-max", "6"});
  CHECK(r.code == exit_ok);
  CHECK(lines(r.out).back() == "6 checks, 0 failed");
  const auto j = run({"--format", "json", "verify", "abel", "--n-max", "5"});
  const auto doc = json::parse(j.out);
  CHECK(doc.at("passed").get<bool>());
  for (const auto& row : doc.at("rows")) CHECK(to_json(check_row_from_json(row)) == row);
  CHECK(run({"verify", "nonsense"}).code == exit_usage);
}

TEST_CASE("table") {
  const auto pf = lines(run({"table", "pf-restricted", "--n-max", "5"}).out);
  CHECK(pf.at(5) == "5,1,31,206,671,1296");
  const auto cat = lines(run({"table", "catalan-triangle", "--n-max", "5"}).out);
  CHECK(cat.at(6) == "5,1,5,14,28,42,42");
  CHECK(run({"--format", "lines", "table", "ones", "--n", "2", "--s", "2"}).out == "c=(0,2,1)\n");
  CHECK(run({"table", "ones", "--n", "2"}).code == exit_usage);
  CHECK(run({"table", "bogus"}).code == exit_usage);
}

TEST_CASE("identical invocations give identical output") {
  const std::vector<std::string> args{"--threads", "4", "--budget", "1e4", "verify", "all", "--n-max", "4"};
  CHECK(run(args).out == run(args).out);
  CHECK(run({"--threads", "1", "verify", "formulas", "--n-max", "4"}).out ==
        run({"--threads", "3", "verify", "formulas", "--n-max", "4"}).out);
}

TEST_CASE("restriction JSON parsing rejects junk") {
  CHECK_THROWS_AS(restriction_from_json(json::parse(R"({"kind":"cone","n":3})")), parking_error);
  CHECK_THROWS_AS(restriction_from_json(json::parse(R"({"kind":"set"})")), parking_error);
  CHECK_THROWS_AS(preference_list_from_json(json::parse("[1,0]")), parking_error);
  CHECK(restriction_from_json(to_json(set_spec(5, {3, 1}))) == set_spec(5, {1, 3}));
}
