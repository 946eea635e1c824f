#include "cyclo/error.hpp"

namespace cyclo {

std::string_view to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::DimensionMismatch: return "DimensionMismatch";
    case ErrorKind::ModulusMismatch: return "ModulusMismatch";
    case ErrorKind::NotPrime: return "NotPrime";
    case ErrorKind::NotSquare: return "NotSquare";
    case ErrorKind::OrderViolation: return "OrderViolation";
    case ErrorKind::NotInvertible: return "NotInvertible";
    case ErrorKind::NotRealizable: return "NotRealizable";
    case ErrorKind::InvalidShape: return "InvalidShape";
    case ErrorKind::NotACocycle: return "NotACocycle";
    case ErrorKind::DoesNotDivide: return "DoesNotDivide";
    case ErrorKind::VerificationFailed: return "VerificationFailed";
    case ErrorKind::SearchSpaceTooLarge: return "SearchSpaceTooLarge";
    case ErrorKind::PrecisionExhausted: return "PrecisionExhausted";
    case ErrorKind::DivisionByZero: return "DivisionByZero";
    case ErrorKind::InsufficientPrecision: return "InsufficientPrecision";
    case ErrorKind::FactorizationBound: return "FactorizationBound";
    case ErrorKind::ReciprocityViolation: return "ReciprocityViolation";
    case ErrorKind::InadmissibleSpec: return "InadmissibleSpec";
    case ErrorKind::NotFoundBelowLimit: return "NotFoundBelowLimit";
    case ErrorKind::Mismatch: return "Mismatch";
    case ErrorKind::MissingRootOfUnity: return "MissingRootOfUnity";
    case ErrorKind::TowerMismatch: return "TowerMismatch";
    case ErrorKind::DegenerateWitness: return "DegenerateWitness";
    case ErrorKind::InvalidArgument: return "InvalidArgument";
    case ErrorKind::InternalInvariant: return "InternalInvariant";
  }
  return "Unknown";
}

}  // namespace cyclo
