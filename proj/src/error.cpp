#include "acfu/error.hpp"

namespace acfu {

std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::NotPrime: return "NotPrime";
    case ErrorCode::ReducibleModulus: return "ReducibleModulus";
    case ErrorCode::UnsupportedSize: return "UnsupportedSize";
    case ErrorCode::ZeroInverse: return "ZeroInverse";
    case ErrorCode::BadLength: return "BadLength";
    case ErrorCode::DomainError: return "DomainError";
    case ErrorCode::UnsupportedParameters: return "UnsupportedParameters";
    case ErrorCode::BudgetExceeded: return "BudgetExceeded";
    case ErrorCode::NotRegular: return "NotRegular";
    case ErrorCode::NotHomomorphic: return "NotHomomorphic";
    case ErrorCode::TrivialDomain: return "TrivialDomain";
    case ErrorCode::InfeasibleEpsilon: return "InfeasibleEpsilon";
    case ErrorCode::NotAMosaic: return "NotAMosaic";
    case ErrorCode::SearchBudgetExceeded: return "SearchBudgetExceeded";
    case ErrorCode::BadLabeling: return "BadLabeling";
    case ErrorCode::NotLatinSquare: return "NotLatinSquare";
    case ErrorCode::CarrierMismatch: return "CarrierMismatch";
    case ErrorCode::DomainMismatch: return "DomainMismatch";
    case ErrorCode::NotBalanced: return "NotBalanced";
    case ErrorCode::AlphabetMismatch: return "AlphabetMismatch";
    case ErrorCode::ZeroMassKeyValue: return "ZeroMassKeyValue";
    case ErrorCode::NegativeRadicand: return "NegativeRadicand";
    case ErrorCode::TheoremViolation: return "TheoremViolation";
    case ErrorCode::ParseError: return "ParseError";
  }
  return "Unknown";
}

}  // namespace acfu
