#pragma once

// Multivariate polynomials and rational functions over a prime field F_l,
// with the cyclic permutation action on the variables and its orbit norm.

#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "cyclo/m_value.hpp"
#include "cyclo/root_of_unity.hpp"

namespace cyclo {

using Monomial = std::vector<std::uint16_t>;

/// Graded lexicographic order, descending: higher total degree first, ties
/// broken by the exponent of mu_1, then mu_2, ...
struct GrlexGreater {
  bool operator()(const Monomial& a, const Monomial& b) const;
};

class Poly {
 public:
  using Terms = std::map<Monomial, std::uint64_t, GrlexGreater>;

  Poly(std::uint64_t l, std::size_t nvars);
  static Poly constant(std::uint64_t l, std::size_t nvars, std::uint64_t c);
  /// mu_{index+1}^exp (indices are 0-based).
  static Poly variable(std::uint64_t l, std::size_t nvars, std::size_t index, unsigned exp = 1);

  std::uint64_t modulus() const { return l_; }
  std::size_t nvars() const { return nvars_; }
  const Terms& terms() const { return terms_; }

  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const;
  /// Value of a constant polynomial (0 for the zero polynomial).
  std::uint64_t constant_value() const;
  unsigned total_degree() const;
  unsigned degree_in(std::size_t var) const;
  /// Largest term in grlex order; undefined for zero.
  const Monomial& leading_monomial() const { return terms_.begin()->first; }
  std::uint64_t leading_coefficient() const { return terms_.empty() ? 0 : terms_.begin()->second; }
  std::uint64_t coefficient(const Monomial& mono) const;

  /// Adds c * mono.
  void add_term(const Monomial& mono, std::uint64_t c);
  Poly scaled(std::uint64_t c) const;
  Poly monic() const;

  bool operator==(const Poly&) const = default;
  /// "2*m1^2*m2 + m3 + 1", terms in grlex order.
  std::string to_string() const;

 private:
  std::uint64_t l_;
  std::size_t nvars_;
  Terms terms_;
};

Poly operator+(const Poly& a, const Poly& b);
Poly operator-(const Poly& a, const Poly& b);
Poly operator-(const Poly& a);
Poly operator*(const Poly& a, const Poly& b);
Poly poly_pow(const Poly& a, unsigned k);

/// a / b when b divides a exactly, nullopt otherwise. Throws DivisionByZero
/// for b = 0.
std::optional<Poly> exact_divide(const Poly& a, const Poly& b);

/// Monic greatest common divisor; gcd(0, 0) = 0.
Poly poly_gcd(const Poly& a, const Poly& b);

/// num/den with gcd(num, den) = 1 and den monic; zero is 0/1.
class RationalFunction {
 public:
  /// Throws DivisionByZero when den is zero.
  RationalFunction(Poly num, Poly den);
  explicit RationalFunction(Poly num);

  const Poly& num() const { return num_; }
  const Poly& den() const { return den_; }
  bool is_zero() const { return num_.is_zero(); }
  bool is_constant() const { return num_.is_constant() && den_.is_constant(); }

  bool operator==(const RationalFunction&) const = default;
  std::string to_string() const;

 private:
  Poly num_;
  Poly den_;
};

RationalFunction operator*(const RationalFunction& a, const RationalFunction& b);
RationalFunction operator/(const RationalFunction& a, const RationalFunction& b);

/// F_l[mu_1..mu_g] with sigma cycling each consecutive block of n variables:
/// mu_{kn+j} -> mu_{kn+(j+1 mod n)}. sigma has order n.
class PolyRing {
 public:
  /// g = 0 means g = n. Throws InvalidArgument unless n | g, NotPrime unless
  /// l is prime.
  PolyRing(std::uint64_t l, unsigned n, unsigned g = 0);

  std::uint64_t l() const { return l_; }
  unsigned n() const { return n_; }
  std::size_t nvars() const { return g_; }

  Poly variable(std::size_t index) const { return Poly::variable(l_, g_, index); }
  Poly constant(std::uint64_t c) const { return Poly::constant(l_, g_, c); }

  /// sigma^k applied to f.
  Poly act(const Poly& f, unsigned k = 1) const;
  RationalFunction act(const RationalFunction& w, unsigned k = 1) const;

 private:
  std::uint64_t l_;
  unsigned n_;
  std::size_t g_;
};

/// Product of the n conjugates sigma^k(f), k = 0..n-1.
Poly orbit_norm(const Poly& f, const PolyRing& ring);
RationalFunction orbit_norm(const RationalFunction& w, const PolyRing& ring);

struct PropositionReport {
  std::uint64_t l = 0;
  unsigned n = 0;
  unsigned deg_bound = 0;
  std::uint64_t polynomials = 0;  // nonzero polynomials enumerated
  std::set<std::uint64_t> unit_norms;
  std::set<std::uint64_t> nth_powers;
  /// One quotient f/g realizing each unit norm.
  std::map<std::uint64_t, std::string> witnesses;

  bool holds() const { return unit_norms == nth_powers; }
};

/// Enumerates every f/g with f, g nonzero of total degree <= deg_bound in
/// F_l[mu_1..mu_n] and collects the orbit norms that land in F_l^x.
///
/// N(f/g) = N(f)/N(g) is a constant exactly when N(f) and N(g) have the same
/// monic part, so norms are bucketed by monic part and each bucket yields
/// the ratios of its leading coefficients.
///
/// Throws SearchSpaceTooLarge unless l <= 7, n <= 3, deg_bound <= 2 and the
/// polynomial count stays below kPropositionPolyLimit.
PropositionReport proposition_check(std::uint64_t l, unsigned n, unsigned deg_bound);

inline constexpr std::uint64_t kPropositionPolyLimit = 200'000;

struct Theorem3Result {
  MValue m = MValue::undetermined();
  unsigned s = 0;  // largest k with xi_{p^k} in the base
  /// Levels i in 0..n at which xi_p is a norm from the top of the tower
  /// down to the i-th layer; always of the form {t+1, ..., n}.
  std::vector<unsigned> norm_levels;
};

/// m for the generic tower over a base with the given roots of unity.
/// xi_p is a norm down to level i iff xi_{p^{n-i+1}} lies in the base.
/// Throws MissingRootOfUnity when xi_p is absent.
Theorem3Result theorem3_m(const RootOfUnityContent& base, std::uint64_t p, unsigned n);

}  // namespace cyclo
