#pragma once

#include <stdexcept>
#include <string>

namespace necklace {

enum class errc {
  malformed_input,
  dimension_mismatch,
  empty_result,
  even_alphabet,
  wrong_alphabet,
  odd_size,
  zero_column_sum,
  section_not_found,
  inconsistent_orientation,
  invalid_bundle,
  invalid_decoration,
  non_orientable,
  not_closed,
  non_integral,
  resource_limit,
};

inline const char* errc_name(errc code) {
  switch (code) {
    case errc::malformed_input: return "MalformedInput";
    case errc::dimension_mismatch: return "DimensionMismatch";
    case errc::empty_result: return "EmptyResult";
    case errc::even_alphabet: return "EvenAlphabet";
    case errc::wrong_alphabet: return "WrongAlphabet";
    case errc::odd_size: return "OddSize";
    case errc::zero_column_sum: return "ZeroColumnSum";
    case errc::section_not_found: return "SectionNotFound";
    case errc::inconsistent_orientation: return "InconsistentOrientation";
    case errc::invalid_bundle: return "InvalidBundle";
    case errc::invalid_decoration: return "InvalidDecoration";
    case errc::non_orientable: return "NonOrientable";
    case errc::not_closed: return "NotClosed";
    case errc::non_integral: return "NonIntegral";
    case errc::resource_limit: return "ResourceLimit";
  }
  return "Unknown";
}

/// Every failure raised by the library carries one of the codes above; the
/// CLI maps them onto exit codes.
class error : public std::runtime_error {
 public:
  error(errc code, const std::string& what)
      : std::runtime_error(std::string(errc_name(code)) + ": " + what), code_(code) {}

  errc code() const noexcept { return code_; }

 private:
  errc code_;
};

}  // namespace necklace
