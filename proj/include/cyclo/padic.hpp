#pragma once

// Bounded-precision p-adic numbers and local Hilbert symbols over Q_p and R.

#include <gmpxx.h>

#include <climits>
#include <cstdint>
#include <optional>
#include <string>
#include <variant>
#include <vector>

namespace cyclo {

/// p^v * unit with unit known modulo p^N (N = relative precision). The exact
/// zero has its own canonical form.
class PadicNumber {
 public:
  static constexpr unsigned kDefaultPrecision = 32;
  static constexpr long kInfiniteValuation = LONG_MAX;

  static PadicNumber zero(unsigned long p, unsigned precision = kDefaultPrecision);
  static PadicNumber from_integer(const mpz_class& x, unsigned long p, unsigned precision = kDefaultPrecision);
  /// Throws DivisionByZero for a zero denominator.
  static PadicNumber from_rational(const mpq_class& x, unsigned long p, unsigned precision = kDefaultPrecision);
  /// Throws InvalidArgument unless p does not divide unit.
  static PadicNumber from_parts(unsigned long p, long valuation, const mpz_class& unit, unsigned precision);

  unsigned long prime() const { return p_; }
  bool is_zero() const { return zero_; }
  /// kInfiniteValuation for zero.
  long valuation() const { return zero_ ? kInfiniteValuation : valuation_; }
  /// Number of known unit digits.
  unsigned precision() const { return precision_; }
  /// Representative in [0, p^precision).
  const mpz_class& unit() const { return unit_; }
  /// unit mod p^k; throws InsufficientPrecision if k > precision.
  mpz_class unit_mod(unsigned k) const;
  /// Modulus p^precision.
  mpz_class unit_modulus() const;

  std::string to_string() const;

 private:
  PadicNumber(unsigned long p, bool zero, long valuation, mpz_class unit, unsigned precision)
      : p_(p), zero_(zero), valuation_(valuation), unit_(std::move(unit)), precision_(precision) {}

  unsigned long p_;
  bool zero_;
  long valuation_;
  mpz_class unit_;
  unsigned precision_;
};

/// Addition loses precision under cancellation; throws PrecisionExhausted when
/// nothing is left, ModulusMismatch for different primes.
PadicNumber operator+(const PadicNumber& x, const PadicNumber& y);
PadicNumber operator-(const PadicNumber& x);
PadicNumber operator-(const PadicNumber& x, const PadicNumber& y);
PadicNumber operator*(const PadicNumber& x, const PadicNumber& y);
/// Throws DivisionByZero.
PadicNumber inverse(const PadicNumber& x);
PadicNumber operator/(const PadicNumber& x, const PadicNumber& y);

/// Equality at the smaller of the two precisions.
bool agree(const PadicNumber& x, const PadicNumber& y);

/// Square root if one exists. Odd p: the root whose unit is the smaller
/// residue mod p; p = 2: the root with unit = 1 mod 4, known to one digit
/// less than x. Throws InsufficientPrecision for p = 2 below 4 digits,
/// InvalidArgument for zero.
std::optional<PadicNumber> hensel_sqrt(const PadicNumber& x);

struct Place {
  /// 0 encodes the infinite place.
  std::uint64_t prime = 0;

  static Place infinite() { return {0}; }
  static Place at(std::uint64_t p) { return {p}; }
  bool is_infinite() const { return prime == 0; }
  std::string to_string() const { return is_infinite() ? "inf" : std::to_string(prime); }
  bool operator==(const Place&) const = default;
  auto operator<=>(const Place&) const = default;
};

/// A rational number entered exactly, or an intrinsically p-adic element.
using LocalValue = std::variant<mpq_class, PadicNumber>;

/// (a, b)_v in {+1, -1}. Throws InsufficientPrecision when a p-adic input's
/// unit is not known well enough, InvalidArgument for zero inputs or a p-adic
/// input at a foreign place.
int hilbert_symbol(const LocalValue& a, const LocalValue& b, Place place);

/// s is a sum of two squares in Q_2, i.e. (s, -1)_2 = +1.
bool sum_of_two_squares_q2(const LocalValue& s);

struct PlaceSymbol {
  Place place;
  int symbol = 1;
};

struct QuaternionReport {
  std::vector<PlaceSymbol> symbols;  // inf, 2, then odd primes ascending
  bool splits = true;

  std::vector<Place> ramified() const;
};

/// Symbols of (a, b)_Q at every place where they can be -1. Checks the
/// product formula, throwing ReciprocityViolation if it fails.
QuaternionReport quaternion_splits_q(const mpq_class& a, const mpq_class& b);

/// Odd primes dividing numerator or denominator (trial division, bound 10^12).
std::vector<std::uint64_t> odd_prime_support(const mpq_class& x);

}  // namespace cyclo
