#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace jsup {

enum class ErrorCode {
  invalid_argument,
  parameter_mismatch,
  out_of_range,
  size_budget,
  unsupported_shape,
  oracle_disagreement,
  parse_error,
  io_error,
};

// Stable machine-readable reason code, used on the CLI diagnostic stream.
std::string_view reason(ErrorCode code) noexcept;

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace jsup
