#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace frobtrace {

enum class ErrorCode {
  NotPrime,
  TooLarge,
  NoIrreducible,
  NotAGenerator,
  OutOfRange,
  DivisionByZero,
  ContextMismatch,
  LogOfZero,
  ZeroArgument,
  BadModulus,
  BadArgument,
  BadParameters,
  BadFieldCongruence,
  JInvariantZero,
  JInvariant1728,
  JInvariantExcluded,
  SingularCurve,
  RoundingFailure,
  NotAPerfectSquare,
};

std::string_view to_string(ErrorCode code) noexcept;

// All library failures are reported through this type; code() is stable,
// what() carries a human-readable diagnostic.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message)
      : std::runtime_error(message), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace frobtrace
