#include "gkern/error.hpp"

namespace gkern {

std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::CapExceeded: return "CapExceeded";
    case ErrorCode::InvalidPermutation: return "InvalidPermutation";
    case ErrorCode::ParentMismatch: return "ParentMismatch";
    case ErrorCode::LengthMismatch: return "LengthMismatch";
    case ErrorCode::DegreeMismatch: return "DegreeMismatch";
    case ErrorCode::NotHermitian: return "NotHermitian";
    case ErrorCode::ConvergenceFailure: return "ConvergenceFailure";
    case ErrorCode::DecompositionUnstable: return "DecompositionUnstable";
    case ErrorCode::NotOrthogonal: return "NotOrthogonal";
    case ErrorCode::TrivialSubspace: return "TrivialSubspace";
    case ErrorCode::NonTransitive: return "NonTransitive";
    case ErrorCode::NotInSubspace: return "NotInSubspace";
    case ErrorCode::NotPairwiseOrthogonal: return "NotPairwiseOrthogonal";
    case ErrorCode::WrongCount: return "WrongCount";
    case ErrorCode::NotRelated: return "NotRelated";
    case ErrorCode::TransitivityViolation: return "TransitivityViolation";
    case ErrorCode::ClosureViolation: return "ClosureViolation";
    case ErrorCode::SearchCapExceeded: return "SearchCapExceeded";
    case ErrorCode::IdentityViolation: return "IdentityViolation";
    case ErrorCode::InvalidArgument: return "InvalidArgument";
    case ErrorCode::ParseError: return "ParseError";
  }
  return "Unknown";
}

Error::Error(ErrorCode code, const std::string& what)
    : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code) {}

}  // namespace gkern
