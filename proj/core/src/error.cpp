#include "toricres/error.hpp"

namespace toricres {

std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::ZeroVector: return "ZeroVector";
    case ErrorCode::NotSimplicial: return "NotSimplicial";
    case ErrorCode::NoRelation: return "NoRelation";
    case ErrorCode::AmbiguousRelation: return "AmbiguousRelation";
    case ErrorCode::NormalizationFailure: return "NormalizationFailure";
    case ErrorCode::EmptyFacet: return "EmptyFacet";
    case ErrorCode::UnknownVertex: return "UnknownVertex";
    case ErrorCode::UncoveredVertex: return "UncoveredVertex";
    case ErrorCode::InvalidInput: return "InvalidInput";
    case ErrorCode::CenterNotPresent: return "CenterNotPresent";
    case ErrorCode::UnknownComponent: return "UnknownComponent";
    case ErrorCode::ConsistencyViolation: return "ConsistencyViolation";
    case ErrorCode::NoProgress: return "NoProgress";
    case ErrorCode::NotTerminal: return "NotTerminal";
    case ErrorCode::ValidationFailure: return "ValidationFailure";
    case ErrorCode::UnknownSimplex: return "UnknownSimplex";
    case ErrorCode::IllegalAmbient: return "IllegalAmbient";
    case ErrorCode::Unsupported: return "Unsupported";
    case ErrorCode::EngineFailure: return "EngineFailure";
  }
  return "Unknown";
}

bool is_input_error(ErrorCode code) {
  switch (code) {
    case ErrorCode::EmptyFacet:
    case ErrorCode::UnknownVertex:
    case ErrorCode::UncoveredVertex:
    case ErrorCode::InvalidInput:
    case ErrorCode::CenterNotPresent:
    case ErrorCode::UnknownComponent:
    case ErrorCode::NotTerminal:
    case ErrorCode::ValidationFailure:
    case ErrorCode::UnknownSimplex:
    case ErrorCode::ZeroVector:
    case ErrorCode::Unsupported:
      return true;
    default:
      return false;
  }
}

Error::Error(ErrorCode code, const std::string& message)
    : std::runtime_error(std::string(to_string(code)) + ": " + message),
      code_(code),
      detail_(message) {}

}  // namespace toricres
