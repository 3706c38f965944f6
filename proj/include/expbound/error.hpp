#ifndef EXPBOUND_ERROR_HPP
#define EXPBOUND_ERROR_HPP

#include <stdexcept>
#include <string>

namespace expbound {

enum class ErrorCode {
  InvalidInput,
  Unsupported,
  Convergence,
  PrecisionInsufficient,
  Numeric,
  Parse,
};

const char* to_string(ErrorCode code) noexcept;

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what) : std::runtime_error(what), code_(code) {}
  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

/// Adaptive quadrature ran out of subintervals. Carries what was accumulated.
class ConvergenceError : public Error {
 public:
  ConvergenceError(const std::string& what, double partial_value, double achieved_error)
      : Error(ErrorCode::Convergence, what), partial_value_(partial_value),
        achieved_error_(achieved_error) {}

  double partial_value() const noexcept { return partial_value_; }
  double achieved_error() const noexcept { return achieved_error_; }

 private:
  double partial_value_;
  double achieved_error_;
};

[[noreturn]] inline void throw_invalid(const std::string& what) {
  throw Error(ErrorCode::InvalidInput, what);
}

}  // namespace expbound

#endif
