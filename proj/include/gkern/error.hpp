#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace gkern {

enum class ErrorCode {
  CapExceeded,
  InvalidPermutation,
  ParentMismatch,
  LengthMismatch,
  DegreeMismatch,
  NotHermitian,
  ConvergenceFailure,
  DecompositionUnstable,
  NotOrthogonal,
  TrivialSubspace,
  NonTransitive,
  NotInSubspace,
  NotPairwiseOrthogonal,
  WrongCount,
  NotRelated,
  TransitivityViolation,
  ClosureViolation,
  SearchCapExceeded,
  // An identity that an operation asserts on its own output did not hold.
  IdentityViolation,
  InvalidArgument,
  ParseError,
};

std::string_view to_string(ErrorCode code);

/// Single exception type for the library; `code()` identifies the failure.
class Error : public std::runtime_error {
public:
  Error(ErrorCode code, const std::string& what);

  ErrorCode code() const noexcept { return code_; }

private:
  ErrorCode code_;
};

}  // namespace gkern
