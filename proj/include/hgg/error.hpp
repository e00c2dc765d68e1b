#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace hgg {

enum class ErrorCode {
  NotClosed,
  NotAssociative,
  NoIdentity,
  NoInverse,
  UnknownSpec,
  SizeLimitExceeded,
  IndexOutOfRange,
  NotNormal,
  NotATransversal,
  MalformedTables,
  NoSolution,
  MultipleSolutions,
  NoAmbient,
  ShapeMismatch,
  NotComposable,
  NotPrime,
  NotIrreducible,
  NotMonic,
  ParseError,
  NotAHomomorphism,
  InternalInconsistency,
};

std::string_view to_string(ErrorCode code);

// Every failure raised by the library carries one of the codes above; the
// message holds the witness when the check that failed has one.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message)
      : std::runtime_error(std::string(to_string(code)) + ": " + message), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace hgg
