#pragma once

#include <stdexcept>
#include <string>

namespace gfp {

enum class ErrorCode {
  NotPrime,
  NotMonic,
  NotInvertible,
  DegreeZero,
  DegreeTooSmall,
  SingularRho,
  ZeroOmega,
  NotTorsion,
  NotAFactorization,
  DepthMismatch,
  BadVertex,
  BadDigit,
  BadVector,
  BadParameters,
  InsufficientDepth,
  TooShallow,
  NotAGroup,
  BudgetExceeded,
};

const char* error_code_name(ErrorCode code);

/// Library error; `code()` distinguishes usage errors from budget exhaustion.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

[[noreturn]] inline void fail(ErrorCode code, const std::string& msg) {
  throw Error(code, msg);
}

}  // namespace gfp
