#pragma once

#include <stdexcept>
#include <string>

namespace biquad {

// Error codes surfaced verbatim in the CLI's JSON error document.
enum class ErrorCode {
  ZeroInput,
  UnfactorableInteger,
  SquareInput,
  NonInvertible,
  ZeroConstantTerm,
  ReduciblePolynomial,
  NotElementaryAbelian,
  DegenerateParameters,
  NotRadicalElementaryAbelian,
  CyclicInput,
  NotNonGalois,
  OracleScopeExceeded,
  ReducibleInput,
  GeneratorIsSquare,
  InvalidField,
  MalformedInput,
};

const char* to_string(ErrorCode code);

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, std::string detail);

  ErrorCode code() const noexcept { return code_; }
  const std::string& detail() const noexcept { return detail_; }

 private:
  ErrorCode code_;
  std::string detail_;
};

}  // namespace biquad
