#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace cyclo {

enum class ErrorKind {
  DimensionMismatch,
  ModulusMismatch,
  NotPrime,
  NotSquare,
  OrderViolation,
  NotInvertible,
  NotRealizable,
  InvalidShape,
  NotACocycle,
  DoesNotDivide,
  VerificationFailed,
  SearchSpaceTooLarge,
  PrecisionExhausted,
  DivisionByZero,
  InsufficientPrecision,
  FactorizationBound,
  ReciprocityViolation,
  InadmissibleSpec,
  NotFoundBelowLimit,
  Mismatch,
  MissingRootOfUnity,
  TowerMismatch,
  DegenerateWitness,
  InvalidArgument,
  InternalInvariant,
};

std::string_view to_string(ErrorKind kind);

/// Single exception type for the library; `kind()` distinguishes the cause.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(std::string(to_string(kind)) + ": " + what), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

}  // namespace cyclo
