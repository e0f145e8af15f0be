#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace tranent {

enum class ErrorCode {
  OutOfDomain,
  DomainExceeded,
  AccumulationPoint,
  LambdaTooSmall,
  ContinuityViolated,
  InvariantViolated,
  NotApplicable,
  ConstructionFailed,
  NotLoose,
  ToleranceNotReached,
  SelfMapRequired,
  PieceExplosion,
  UncertifiedInput,
  ParseError,
  ValidationError,
  InvalidArgument,
};

std::string_view to_string(ErrorCode code);

/// Every failure in the library surfaces as this exception; `code()` names
/// the failure class, `what()` carries the human-readable detail.
class Error : public std::runtime_error {
public:
  Error(ErrorCode code, const std::string& detail);

  ErrorCode code() const noexcept { return code_; }
  const std::string& detail() const noexcept { return detail_; }

private:
  ErrorCode code_;
  std::string detail_;
};

}  // namespace tranent
