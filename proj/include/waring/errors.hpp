#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace waring {

enum class ErrorCode {
  NotPrime,
  ZeroPoint,
  DuplicatePoint,
  DimensionMismatch,
  DegreeMismatch,
  InconsistentSystem,
  InhomogeneousDeterminant,
  BadSplit,
  RedundancyDetected,
  NotConcise,
  PreconditionFailed,
  QuarticNotUnique,
  IdealDimension,
  SyzygyDimension,
  MinorDegenerate,
  NormalizationDegenerate,
  DegenerateCofactors,
  SelectionFailed,
  WitnessRejected,
  GenerationExhausted,
  AnnihilatorDimension,
  ScanBudgetExceeded,
  ParseError,
};

std::string_view to_string(ErrorCode code) noexcept;

/// Every failure raised by the library carries one of the codes above so the
/// CLI and the certifiers can map it onto a verdict or an exit status.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace waring
