#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace parkfn::cli {

inline constexpr int exit_ok = 0;
inline constexpr int exit_usage = 2;
inline constexpr int exit_mismatch = 3;

/// Runs one command line (without the program name) and returns the exit
/// code: 0 ok, 2 usage or domain error, 3 verification failure.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace parkfn::cli
