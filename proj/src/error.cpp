#include "tranent/error.hpp"

namespace tranent {

std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::OutOfDomain: return "OutOfDomain";
    case ErrorCode::DomainExceeded: return "DomainExceeded";
    case ErrorCode::AccumulationPoint: return "AccumulationPoint";
    case ErrorCode::LambdaTooSmall: return "LambdaTooSmall";
    case ErrorCode::ContinuityViolated: return "ContinuityViolated";
    case ErrorCode::InvariantViolated: return "InvariantViolated";
    case ErrorCode::NotApplicable: return "NotApplicable";
    case ErrorCode::ConstructionFailed: return "ConstructionFailed";
    case ErrorCode::NotLoose: return "NotLoose";
    case ErrorCode::ToleranceNotReached: return "ToleranceNotReached";
    case ErrorCode::SelfMapRequired: return "SelfMapRequired";
    case ErrorCode::PieceExplosion: return "PieceExplosion";
    case ErrorCode::UncertifiedInput: return "UncertifiedInput";
    case ErrorCode::ParseError: return "ParseError";
    case ErrorCode::ValidationError: return "ValidationError";
    case ErrorCode::InvalidArgument: return "InvalidArgument";
  }
  return "Unknown";
}

Error::Error(ErrorCode code, const std::string& detail)
    : std::runtime_error(std::string(to_string(code)) + ": " + detail), code_(code), detail_(detail) {}

}  // namespace tranent
