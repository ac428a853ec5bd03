#include "waring/errors.hpp"

namespace waring {

std::string_view to_string(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::NotPrime: return "NotPrime";
    case ErrorCode::ZeroPoint: return "ZeroPoint";
    case ErrorCode::DuplicatePoint: return "DuplicatePoint";
    case ErrorCode::DimensionMismatch: return "DimensionMismatch";
    case ErrorCode::DegreeMismatch: return "DegreeMismatch";
    case ErrorCode::InconsistentSystem: return "InconsistentSystem";
    case ErrorCode::InhomogeneousDeterminant: return "InhomogeneousDeterminant";
    case ErrorCode::BadSplit: return "BadSplit";
    case ErrorCode::RedundancyDetected: return "RedundancyDetected";
    case ErrorCode::NotConcise: return "NotConcise";
    case ErrorCode::PreconditionFailed: return "PreconditionFailed";
    case ErrorCode::QuarticNotUnique: return "QuarticNotUnique";
    case ErrorCode::IdealDimension: return "IdealDimension";
    case ErrorCode::SyzygyDimension: return "SyzygyDimension";
    case ErrorCode::MinorDegenerate: return "MinorDegenerate";
    case ErrorCode::NormalizationDegenerate: return "NormalizationDegenerate";
    case ErrorCode::DegenerateCofactors: return "DegenerateCofactors";
    case ErrorCode::SelectionFailed: return "SelectionFailed";
    case ErrorCode::WitnessRejected: return "WitnessRejected";
    case ErrorCode::GenerationExhausted: return "GenerationExhausted";
    case ErrorCode::AnnihilatorDimension: return "AnnihilatorDimension";
    case ErrorCode::ScanBudgetExceeded: return "ScanBudgetExceeded";
    case ErrorCode::ParseError: return "ParseError";
  }
  return "Unknown";
}

}  // namespace waring
