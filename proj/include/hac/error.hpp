#ifndef HAC_ERROR_HPP
#define HAC_ERROR_HPP

#include <stdexcept>
#include <string>

namespace hac {

enum class ErrorKind {
  ParseError,
  NonMonotone,
  TooFewPoints,
  OutOfDomain,
  DomainMismatch,
  BreakpointBudgetExceeded,
  BadParameter,
  NotAFixedPoint,
  OverlappingSites,
  SharedFixedPoint,
  ParityMismatch,
  HasInteriorFixedPoint,
  IterationCapExceeded,
  OracleEvaluationFailure,
  OrbitalMismatch,
  BudgetExhausted,
  PushFailed,
  NoEscape,
};

const char* error_kind_name(ErrorKind kind);

/// Process exit code associated with an error family (used by the CLI).
int error_kind_exit_code(ErrorKind kind);

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& message)
      : std::runtime_error(std::string(error_kind_name(kind)) + ": " + message),
        kind_(kind) {}

  ErrorKind kind() const { return kind_; }

 private:
  ErrorKind kind_;
};

[[noreturn]] inline void fail(ErrorKind kind, const std::string& message) {
  throw Error(kind, message);
}

inline void require(bool condition, ErrorKind kind, const std::string& message) {
  if (!condition) fail(kind, message);
}

}  // namespace hac

#endif
