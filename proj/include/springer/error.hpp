#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace springer {

enum class ErrorCode {
  CrossingArcs,
  RayUnderArc,
  VertexReuse,
  DotOnNonArc,
  BadCounts,
  DomainError,
  NotInRestrictableSet,
  NotStandard,
  ShapeMismatch,
  NoStandardCompletion,
  SyntaxError,
  TypeMismatch,
  CycleDetected,
  NotFound,
  PadSizeMismatch,
  NotAnArrowPair,
  InhomogeneousClass,
  SizeMismatch,
  SolveFailed,
  PullbackFailed,
  UncalibratedConvention,
  NoConventionFits,
};

std::string_view to_string(ErrorCode code);

// Every failure raised by the library carries one of the codes above so the
// CLI can map it to an exit status and callers can branch on it.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace springer
