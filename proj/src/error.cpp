#include "expbound/error.hpp"

namespace expbound {

const char* to_string(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::InvalidInput: return "invalid input";
    case ErrorCode::Unsupported: return "unsupported input";
    case ErrorCode::Convergence: return "convergence failure";
    case ErrorCode::PrecisionInsufficient: return "precision insufficient";
    case ErrorCode::Numeric: return "numeric failure";
    case ErrorCode::Parse: return "parse error";
  }
  return "unknown error";
}

}  // namespace expbound
