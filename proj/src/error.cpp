#include "hlya/error.hpp"

namespace hlya {

const char* error_code_name(ErrorCode code) {
  switch (code) {
    case ErrorCode::Parse: return "PARSE_ERROR";
    case ErrorCode::Validation: return "VALIDATION_ERROR";
    case ErrorCode::DivisionByZero: return "DIVISION_BY_ZERO";
    case ErrorCode::DimMismatch: return "DIM_MISMATCH";
    case ErrorCode::ArityOutOfRange: return "ARITY_OUT_OF_RANGE";
    case ErrorCode::NotHomLie: return "NOT_HOM_LIE";
    case ErrorCode::AxiomFail: return "AXIOM_FAIL";
    case ErrorCode::NotMorphism: return "NOT_MORPHISM";
    case ErrorCode::PreconditionFail: return "PRECONDITION_FAIL";
    case ErrorCode::BaseMismatch: return "BASE_MISMATCH";
    case ErrorCode::NotInZ2Z3: return "NOT_IN_Z2Z3";
    case ErrorCode::NotACochain: return "NOT_A_COCHAIN";
    case ErrorCode::NotContained: return "NOT_CONTAINED";
    case ErrorCode::ClosureViolation: return "CLOSURE_VIOLATION";
    case ErrorCode::NotCocycle: return "NOT_COCYCLE";
  }
  return "UNKNOWN";
}

bool is_theorem_violation(ErrorCode code) {
  switch (code) {
    case ErrorCode::NotACochain:
    case ErrorCode::NotContained:
    case ErrorCode::ClosureViolation:
    case ErrorCode::NotCocycle:
      return true;
    default:
      return false;
  }
}

}  // namespace hlya
