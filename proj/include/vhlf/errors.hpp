#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace vhlf {

enum class ErrorCode {
  NotPrime,
  EvenCharacteristic,
  DegreeTooLarge,
  ZeroInput,
  ZeroNorm,
  CoincidentInput,
  DegenerateComposition,
  WrongNorm,
  IntegralityFailure,
  PoleAtOne,
  DedupMismatch,
  SchemaViolation,
  InvolutionBroken,
  BoundExceeded,
  InternalNonunit,
  TransportFailure,
  CountMismatch,
  InvalidParameter,
  FieldMismatch,
};

std::string_view to_string(ErrorCode code);

// All library failures are reported through this one exception type; the code
// identifies which contract was violated.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace vhlf
