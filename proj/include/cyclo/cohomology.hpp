#pragma once

// Normalized 2-cocycles on G = Z/a with values in M = Z/r (trivial action),
// stored as exponents of a fixed generator alpha of M.

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace cyclo {

class Cocycle2 {
 public:
  /// Table indexed [i * a + j]; entries are reduced mod r.
  Cocycle2(std::uint32_t a, std::uint32_t r, std::vector<std::uint32_t> table);
  static Cocycle2 zero(std::uint32_t a, std::uint32_t r);

  std::uint32_t group_order() const { return a_; }
  std::uint32_t coeff_order() const { return r_; }
  /// Indices are taken mod a.
  std::uint32_t operator()(std::uint64_t i, std::uint64_t j) const { return table_[(i % a_) * a_ + (j % a_)]; }
  const std::vector<std::uint32_t>& table() const { return table_; }

  bool operator==(const Cocycle2&) const = default;
  std::string to_string() const;

 private:
  std::uint32_t a_;
  std::uint32_t r_;
  std::vector<std::uint32_t> table_;
};

/// c(i, j) = floor((i+j)/b) - floor(i/b) - floor(j/b) mod r: the carry of
/// base-b addition. Throws DoesNotDivide unless b | a.
Cocycle2 carrying_cocycle(std::uint32_t a, std::uint32_t b, std::uint32_t r);

Cocycle2 scale_cocycle(const Cocycle2& c, std::uint64_t q);

/// The two cocycles of the restriction identity for a tower of degrees
/// b | a with q = a/b: the carry cocycle modulo b, and q times the carry
/// cocycle modulo a.
Cocycle2 psi_cocycle(std::uint32_t a, std::uint32_t b, std::uint32_t r);
Cocycle2 phi_cocycle(std::uint32_t a, std::uint32_t b, std::uint32_t r);

/// Normalization plus c(i,j) + c(i+j,k) == c(j,k) + c(i,j+k) for all i, j, k.
bool is_cocycle(const Cocycle2& c);

/// c(x, y) = c(d*x, d*y) on the subgroup Z/(a/d) generated by d.
Cocycle2 restrict_cocycle(const Cocycle2& c, std::uint32_t index);

/// sum_{i<a} c(i, 1) mod gcd(a, r); a complete invariant of the class in
/// H^2(Z/a, Z/r) = Z/gcd(a, r). Throws NotACocycle.
std::uint32_t h2_invariant(const Cocycle2& c);

/// Lexicographically first normalized f : Z/a -> Z/r with
/// c1(i,j) - c2(i,j) = f(i) + f(j) - f(i+j). Throws SearchSpaceTooLarge when
/// r^{a-1} > 10^6, DimensionMismatch for different (a, r).
std::optional<std::vector<std::uint32_t>> cohomologous_bruteforce(const Cocycle2& c1, const Cocycle2& c2);

/// Central extension 1 -> Z/r -> H -> Z/a -> 1 with elements (m, g) and
/// (m1, g1)(m2, g2) = (m1 + m2 + c(g1, g2), g1 + g2).
class ExtensionGroup {
 public:
  struct Element {
    std::uint32_t m = 0;
    std::uint32_t g = 0;
    bool operator==(const Element&) const = default;
  };

  /// Throws NotACocycle; verifies associativity at construction.
  explicit ExtensionGroup(Cocycle2 c);

  const Cocycle2& cocycle() const { return c_; }
  std::uint64_t order() const { return std::uint64_t{c_.group_order()} * c_.coeff_order(); }

  Element identity() const { return {0, 0}; }
  Element mul(Element x, Element y) const;
  Element inverse(Element x) const;
  Element pow(Element x, std::uint64_t k) const;
  std::uint64_t element_order(Element x) const;
  std::vector<Element> elements() const;
  std::size_t index_of(Element x) const { return std::size_t{x.g} * c_.coeff_order() + x.m; }

  bool is_cyclic() const;

 private:
  Cocycle2 c_;
};

/// Exhaustive search for an abstract group isomorphism between two extension
/// groups, through all images of the generators (0,1) and (1,0). Throws
/// SearchSpaceTooLarge above order 64.
bool isomorphic_exhaustive(const ExtensionGroup& h1, const ExtensionGroup& h2);

struct GammaVerification {
  std::uint32_t a = 0, b = 0, r = 0, q = 0;
  std::uint64_t pairs_checked = 0;
  bool homomorphism = false;
  bool bijective = false;
  bool fixes_kernel = false;
  bool identity_on_quotient = false;

  bool ok() const { return homomorphism && bijective && fixes_kernel && identity_on_quotient; }
};

/// The map H_Phi -> H_Psi, (m, i) -> (m + floor(i/b), i), checked on every
/// pair of elements. Throws DoesNotDivide, or VerificationFailed if any
/// check fails.
GammaVerification gamma_isomorphism(std::uint32_t a, std::uint32_t b, std::uint32_t r);

ExtensionGroup::Element gamma_map(ExtensionGroup::Element x, std::uint32_t b, std::uint32_t r);

}  // namespace cyclo
