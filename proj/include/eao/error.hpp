#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace eao {

/// Stable machine-readable error codes. The CLI reports these verbatim.
enum class ErrorCode {
  degenerate_spectrum,
  fiber_condition_violated,
  not_in_null_cone,
  not_a_member,
  malformed_input,
  shape_mismatch,
  singular_matrix,
  not_in_det1,
  invalid_argument,
};

std::string_view to_string(ErrorCode code) noexcept;

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& detail)
      : std::runtime_error(detail), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace eao
