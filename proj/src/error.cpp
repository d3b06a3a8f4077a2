#include "biquad/error.hpp"

namespace biquad {

const char* to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::ZeroInput: return "ZeroInput";
    case ErrorCode::UnfactorableInteger: return "UnfactorableInteger";
    case ErrorCode::SquareInput: return "SquareInput";
    case ErrorCode::NonInvertible: return "NonInvertible";
    case ErrorCode::ZeroConstantTerm: return "ZeroConstantTerm";
    case ErrorCode::ReduciblePolynomial: return "ReduciblePolynomial";
    case ErrorCode::NotElementaryAbelian: return "NotElementaryAbelian";
    case ErrorCode::DegenerateParameters: return "DegenerateParameters";
    case ErrorCode::NotRadicalElementaryAbelian: return "NotRadicalElementaryAbelian";
    case ErrorCode::CyclicInput: return "CyclicInput";
    case ErrorCode::NotNonGalois: return "NotNonGalois";
    case ErrorCode::OracleScopeExceeded: return "OracleScopeExceeded";
    case ErrorCode::ReducibleInput: return "ReducibleInput";
    case ErrorCode::GeneratorIsSquare: return "GeneratorIsSquare";
    case ErrorCode::InvalidField: return "InvalidField";
    case ErrorCode::MalformedInput: return "MalformedInput";
  }
  return "Unknown";
}

Error::Error(ErrorCode code, std::string detail)
    : std::runtime_error(std::string(to_string(code)) + ": " + detail),
      code_(code),
      detail_(std::move(detail)) {}

}  // namespace biquad
