#include "rdl/error.hpp"

namespace rdl {

std::string_view to_string(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::IndeterminateSum: return "IndeterminateSum";
    case ErrorCode::NegativeEpsilon: return "NegativeEpsilon";
    case ErrorCode::UnknownPoint: return "UnknownPoint";
    case ErrorCode::UnknownScenario: return "UnknownScenario";
    case ErrorCode::EmptyDomain: return "EmptyDomain";
    case ErrorCode::NoPrimalAttainment: return "NoPrimalAttainment";
    case ErrorCode::NonFinitePoint: return "NonFinitePoint";
    case ErrorCode::DimensionMismatch: return "DimensionMismatch";
    case ErrorCode::NumericalBreakdown: return "NumericalBreakdown";
    case ErrorCode::MissingZeroShift: return "MissingZeroShift";
    case ErrorCode::NotInDualCone: return "NotInDualCone";
    case ErrorCode::InfeasiblePoint: return "InfeasiblePoint";
    case ErrorCode::SizeCap: return "SizeCap";
    case ErrorCode::ParseError: return "ParseError";
    case ErrorCode::ValidationError: return "ValidationError";
    case ErrorCode::InternalInconsistency: return "InternalInconsistency";
  }
  return "Unknown";
}

}  // namespace rdl
