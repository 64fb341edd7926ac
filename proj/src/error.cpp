#include "jsup/error.hpp"

namespace jsup {

std::string_view reason(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::invalid_argument: return "invalid-argument";
    case ErrorCode::parameter_mismatch: return "parameter-mismatch";
    case ErrorCode::out_of_range: return "out-of-range";
    case ErrorCode::size_budget: return "size-budget";
    case ErrorCode::unsupported_shape: return "unsupported-shape";
    case ErrorCode::oracle_disagreement: return "oracle-disagreement";
    case ErrorCode::parse_error: return "parse-error";
    case ErrorCode::io_error: return "io-error";
  }
  return "unknown";
}

}  // namespace jsup
