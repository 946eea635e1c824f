#pragma once

// Modules over F_p[C_{p^n}] and their decomposition into indecomposables.
//
// F_p[C_{p^n}] is isomorphic to F_p[t]/(t-1)^{p^n}, so an indecomposable
// summand is a single unipotent Jordan block of size 1..p^n, and a module is
// classified by the multiset of its block sizes.

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "cyclo/fp_matrix.hpp"
#include "cyclo/m_value.hpp"

namespace cyclo {

/// F_p-vector space with an automorphism sigma satisfying sigma^{p^n} = I.
class GModule {
 public:
  /// Throws OrderViolation if sigma^{p^n} != I, NotInvertible if sigma is
  /// singular, DimensionMismatch if it is not square.
  GModule(Residue p, unsigned n, FpMatrix sigma);

  Residue p() const { return p_; }
  unsigned n() const { return n_; }
  std::size_t dim() const { return sigma_.rows(); }
  const FpMatrix& sigma() const { return sigma_; }
  /// |G| = p^n.
  std::uint64_t group_order() const { return order_; }

 private:
  Residue p_;
  unsigned n_;
  std::uint64_t order_;
  FpMatrix sigma_;
};

struct JordanProfile {
  std::vector<std::size_t> sizes;  // non-increasing
  std::size_t total = 0;

  bool operator==(const JordanProfile&) const = default;
};

JordanProfile make_profile(std::vector<std::size_t> sizes);

struct ExceptionalSummand {
  unsigned m = 0;
  std::size_t dim = 0;  // p^m + 1

  bool operator==(const ExceptionalSummand&) const = default;
};

/// Free ranks y_0..y_n (number of blocks of size p^i) and at most one
/// exceptional block of size p^m + 1, 0 <= m < n.
struct Theorem1Shape {
  std::vector<std::size_t> free_ranks;
  std::optional<ExceptionalSummand> exceptional;

  bool operator==(const Theorem1Shape&) const = default;
  std::string to_string() const;
};

/// rank((sigma - I)^k) for k = 0, 1, ... up to the first zero.
std::vector<std::size_t> rank_sequence(const GModule& m);

JordanProfile jordan_profile(const GModule& m);

/// Throws NotRealizable for two or more non-p-power sizes, or a non-p-power
/// size not of the form p^m + 1 with m < n.
///
/// For p = 2 a block of size 2 is both p^1 and p^0 + 1. When no other
/// exceptional block is present one such block is reported as the m = 0
/// summand; `canonical_shape` applies the same rule to hand-built shapes.
Theorem1Shape classify_theorem1(const JordanProfile& profile, Residue p, unsigned n);

/// Normal form under the p = 2 convention above; identity for odd p.
Theorem1Shape canonical_shape(Theorem1Shape shape, Residue p, unsigned n);

/// Upper-triangular unipotent Jordan block.
FpMatrix jordan_block(Residue p, std::size_t size);

/// Block-diagonal module: exceptional block first, then y_n .. y_0 blocks.
/// Throws InvalidShape.
GModule synthesize(const Theorem1Shape& shape, Residue p, unsigned n);

/// m of the exceptional summand, or Undetermined when there is none (a
/// one-dimensional X cannot be told apart from a free Y_0 summand).
MValue m_from_shape(const Theorem1Shape& shape);

/// Q^{-1} sigma Q.
GModule conjugate(const GModule& m, const FpMatrix& q);

struct RandomModule {
  GModule module;
  std::vector<std::size_t> block_sizes;  // as drawn, before conjugation
};

/// Random block sizes in [1, p^n] summing to dim, conjugated by a random
/// invertible matrix. Deterministic in seed.
RandomModule random_gmodule_with_blocks(Residue p, unsigned n, std::size_t dim, std::uint64_t seed);
GModule random_gmodule(Residue p, unsigned n, std::size_t dim, std::uint64_t seed);

/// Uniform random invertible matrix (rejection sampling).
FpMatrix random_invertible(Residue p, std::size_t dim, std::uint64_t seed);

}  // namespace cyclo
