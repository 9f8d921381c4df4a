#pragma once

#include <stdexcept>
#include <string>

namespace hlya {

enum class ErrorCode {
  Parse,
  Validation,
  DivisionByZero,
  DimMismatch,
  ArityOutOfRange,
  NotHomLie,
  AxiomFail,
  NotMorphism,
  PreconditionFail,
  BaseMismatch,
  NotInZ2Z3,
  // The codes below mean a proven identity failed to hold: either an
  // implementation bug or an erratum in the underlying theory.
  NotACochain,
  NotContained,
  ClosureViolation,
  NotCocycle,
};

[[nodiscard]] const char* error_code_name(ErrorCode code);

/// True for codes that signal a violated theorem rather than bad input.
[[nodiscard]] bool is_theorem_violation(ErrorCode code);

class Error : public std::runtime_error {
public:
  Error(ErrorCode code, const std::string& message)
      : std::runtime_error(std::string(error_code_name(code)) + ": " + message), code_(code) {}

  [[nodiscard]] ErrorCode code() const { return code_; }

private:
  ErrorCode code_;
};

}  // namespace hlya
