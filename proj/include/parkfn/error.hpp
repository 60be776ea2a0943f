#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace parkfn {

enum class errc {
  preference_out_of_range,
  not_a_parking_function,
  empty_restriction,
  domain_error,
  missing_one,
  not_prime,
  image_contains_n,
  not_in_t,
  not_restricted,
  invalid_coloring,
  bad_modular_preference,
  not_block_aligned,
  non_integer_intermediate,
  budget_exceeded,
};

std::string_view errc_name(errc code);

class parking_error : public std::runtime_error {
 public:
  parking_error(errc code, const std::string& what)
      : std::runtime_error(std::string(errc_name(code)) + ": " + what), code_(code) {}

  errc code() const noexcept { return code_; }

 private:
  errc code_;
};

}  // namespace parkfn
