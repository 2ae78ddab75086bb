#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace acfu {

enum class ErrorCode {
  NotPrime,
  ReducibleModulus,
  UnsupportedSize,
  ZeroInverse,
  BadLength,
  DomainError,
  UnsupportedParameters,
  BudgetExceeded,
  NotRegular,
  NotHomomorphic,
  TrivialDomain,
  InfeasibleEpsilon,
  NotAMosaic,
  SearchBudgetExceeded,
  BadLabeling,
  NotLatinSquare,
  CarrierMismatch,
  DomainMismatch,
  NotBalanced,
  AlphabetMismatch,
  ZeroMassKeyValue,
  NegativeRadicand,
  TheoremViolation,
  ParseError,
};

std::string_view to_string(ErrorCode code);

// Every library failure surfaces as this exception; `code()` identifies the
// contract that was violated.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message)
      : std::runtime_error(std::string(to_string(code)) + ": " + message), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace acfu
