#pragma once

#include <stdexcept>
#include <string>

namespace eqindex {

// Error codes, grouped by how the CLI maps them to exit codes:
// input errors -> 2, data inconsistencies -> 3.
enum class errc {
  invalid_conductor,
  conductor_mismatch,
  division_by_zero,
  pole,
  invalid_rotation_class,
  unsupported_parameter,
  trivial_group,
  invalid_tolerance,
  incomplete_input,
  invalid_input,
  inconsistent_data,
  inconsistent_character,
  inconsistent_fixed_data,
  inconsistent_inputs,
  contradiction_with_paper,
  convention_mismatch,
  internal_error,
};

inline const char* errc_name(errc c) {
  switch (c) {
    case errc::invalid_conductor: return "invalid-conductor";
    case errc::conductor_mismatch: return "conductor-mismatch";
    case errc::division_by_zero: return "division-by-zero";
    case errc::pole: return "pole";
    case errc::invalid_rotation_class: return "invalid-rotation-class";
    case errc::unsupported_parameter: return "unsupported-parameter";
    case errc::trivial_group: return "trivial-group";
    case errc::invalid_tolerance: return "invalid-tolerance";
    case errc::incomplete_input: return "incomplete-input";
    case errc::invalid_input: return "invalid-input";
    case errc::inconsistent_data: return "inconsistent-data";
    case errc::inconsistent_character: return "inconsistent-character";
    case errc::inconsistent_fixed_data: return "inconsistent-fixed-data";
    case errc::inconsistent_inputs: return "inconsistent-inputs";
    case errc::contradiction_with_paper: return "contradiction-with-paper";
    case errc::convention_mismatch: return "convention-mismatch";
    case errc::internal_error: return "internal-error";
  }
  return "unknown";
}

class Error : public std::runtime_error {
 public:
  Error(errc code, const std::string& msg)
      : std::runtime_error(std::string(errc_name(code)) + ": " + msg), code_(code) {}

  errc code() const { return code_; }

  // Process exit code for the CLI: 2 = malformed input, 3 = inconsistent data.
  int exit_code() const {
    switch (code_) {
      case errc::inconsistent_data:
      case errc::inconsistent_character:
      case errc::inconsistent_fixed_data:
      case errc::inconsistent_inputs:
      case errc::contradiction_with_paper:
      case errc::convention_mismatch:
        return 3;
      case errc::internal_error:
        return 1;
      default:
        return 2;
    }
  }

 private:
  errc code_;
};

[[noreturn]] inline void fail(errc code, const std::string& msg) { throw Error(code, msg); }

inline void require(bool cond, errc code, const std::string& msg) {
  if (!cond) fail(code, msg);
}

}  // namespace eqindex
