#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace parkfn {

struct check_row {
  std::string suite;
  std::string name;
  bool passed = false;
  std::string detail;
};

struct verify_bounds {
  /// Largest car count exercised; 0 selects each suite's default.
  int n_max = 0;
  /// Largest brute-force space the modular suite will walk.
  std::uint64_t budget = 10'000'000;
  unsigned threads = 1;
};

/// formulas, bijections, involution, abel, orbits, fibers, modular, defect.
const std::vector<std::string_view>& suite_names();

bool is_suite(std::string_view name);

/// Runs one suite, or every suite for "all". Rows come back in a fixed order.
std::vector<check_row> run_suite(std::string_view suite, const verify_bounds& bounds);

}  // namespace parkfn
