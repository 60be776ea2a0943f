#include "parkfn/error.hpp"

namespace parkfn {

std::string_view errc_name(errc code) {
  switch (code) {
    case errc::preference_out_of_range: return "PreferenceOutOfRange";
    case errc::not_a_parking_function: return "NotAParkingFunction";
    case errc::empty_restriction: return "EmptyRestriction";
    case errc::domain_error: return "DomainError";
    case errc::missing_one: return "MissingOne";
    case errc::not_prime: return "NotPrime";
    case errc::image_contains_n: return "ImageContainsN";
    case errc::not_in_t: return "NotInT";
    case errc::not_restricted: return "NotRestricted";
    case errc::invalid_coloring: return "InvalidColoring";
    case errc::bad_modular_preference: return "BadModularPreference";
    case errc::not_block_aligned: return "NotBlockAligned";
    case errc::non_integer_intermediate: return "NonIntegerIntermediate";
    case errc::budget_exceeded: return "BudgetExceeded";
  }
  return "UnknownError";
}

}  // namespace parkfn
