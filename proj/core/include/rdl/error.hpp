#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace rdl {

enum class ErrorCode {
  IndeterminateSum,
  NegativeEpsilon,
  UnknownPoint,
  UnknownScenario,
  EmptyDomain,
  NoPrimalAttainment,
  NonFinitePoint,
  DimensionMismatch,
  NumericalBreakdown,
  MissingZeroShift,
  NotInDualCone,
  InfeasiblePoint,
  SizeCap,
  ParseError,
  ValidationError,
  // A characterization check disagreed with the property it characterizes.
  InternalInconsistency,
};

std::string_view to_string(ErrorCode code) noexcept;

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message)
      : std::runtime_error(std::string(to_string(code)) + ": " + message), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace rdl
