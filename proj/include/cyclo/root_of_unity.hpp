#pragma once

#include <cstdint>
#include <string>

namespace cyclo {

/// Which roots of unity a base field holds: either Q(xi_N) for a conductor N,
/// or a finite field F_l. xi_2 = -1 is present in both (characteristic != 2
/// is assumed for the prime in question).
class RootOfUnityContent {
 public:
  enum class Kind { Cyclotomic, FiniteField };

  /// N = 2 mod 4 is replaced by N/2 (Q(xi_N) = Q(xi_{N/2})).
  static RootOfUnityContent cyclotomic(std::uint64_t conductor);
  /// l must be prime.
  static RootOfUnityContent finite_field(std::uint64_t l);

  Kind kind() const { return kind_; }
  std::uint64_t value() const { return value_; }

  /// Largest k with xi_{p^k} in the field.
  unsigned exponent(std::uint64_t p) const;
  bool contains(std::uint64_t p, unsigned k) const { return exponent(p) >= k; }

  std::string to_string() const;

 private:
  RootOfUnityContent(Kind kind, std::uint64_t value) : kind_(kind), value_(value) {}
  Kind kind_;
  std::uint64_t value_;
};

}  // namespace cyclo
