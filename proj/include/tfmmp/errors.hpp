#pragma once

#include <stdexcept>
#include <string>

namespace tfmmp {

// Error codes shared between the library, the CLI exit-code mapping and the
// python bindings.
enum class ErrorCode {
  ZeroVector,
  NotInSpan,
  NotSimplicial,
  NotInSupport,
  NotPrimitive,
  AlreadyRay,
  BoundaryWall,
  NoCompactCurves,
  NotComplete,
  NotMaximal,
  UnboundedWithBoundary,
  InconsistentRay,
  NonSimplicialResult,
  UnsupportedCircuit,
  TheoremViolation,
  StepCapExceeded,
  ParseError,
  ValidationError,
  Internal,
};

const char* error_code_name(ErrorCode code);

class TfError : public std::runtime_error {
 public:
  TfError(ErrorCode code, const std::string& message)
      : std::runtime_error(std::string(error_code_name(code)) + ": " + message),
        code_(code) {}

  ErrorCode code() const { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace tfmmp
