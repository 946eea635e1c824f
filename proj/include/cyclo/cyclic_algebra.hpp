#pragma once

// Cyclic crossed-product algebras (L/E, tau, b) over finite fields:
// B = sum_{0<=j<r} u^j L with u^{-1} c u = tau(c) and u^r = b.

#include <cstdint>
#include <memory>
#include <random>
#include <string>
#include <vector>

#include "cyclo/cohomology.hpp"
#include "cyclo/fp_matrix.hpp"
#include "cyclo/m_value.hpp"

namespace cyclo {

/// F_{l^k} = F_l[x]/(f), f the least monic irreducible of degree k when
/// polynomials are ordered by their coefficient code sum c_i l^i.
class FiniteField {
 public:
  using Elem = std::vector<std::uint32_t>;  // coefficient of x^i at index i

  /// Throws NotPrime for composite l, InvalidArgument for k = 0 or a field
  /// with more than kMaxOrder elements.
  FiniteField(std::uint32_t l, unsigned k);

  std::uint32_t characteristic() const { return l_; }
  unsigned degree() const { return k_; }
  std::uint64_t order() const { return order_; }
  /// Coefficients of f, low degree first, leading 1 included.
  const std::vector<std::uint32_t>& modulus_poly() const { return f_; }

  Elem zero() const { return Elem(k_, 0); }
  Elem one() const;
  /// Base-l digits of code, low digit first; code < order().
  Elem from_code(std::uint64_t code) const;
  std::uint64_t code(const Elem& x) const;

  Elem add(const Elem& x, const Elem& y) const;
  Elem sub(const Elem& x, const Elem& y) const;
  Elem neg(const Elem& x) const;
  Elem mul(const Elem& x, const Elem& y) const;
  Elem pow(const Elem& x, std::uint64_t e) const;
  /// Throws DivisionByZero for zero.
  Elem inv(const Elem& x) const;
  /// x^{l^times}.
  Elem frobenius(const Elem& x, unsigned times = 1) const;
  bool is_zero(const Elem& x) const;

  /// Generator of the multiplicative group with the smallest code.
  const Elem& primitive_element() const { return generator_; }
  /// Exponent e with g^e = x for the primitive element g (baby-step
  /// giant-step). Throws DivisionByZero for zero.
  std::uint64_t discrete_log(const Elem& x) const;

  /// "2x^2 + 1" style, or the code when the field is prime.
  std::string to_string(const Elem& x) const;

  static constexpr std::uint64_t kMaxOrder = 1ULL << 32;

 private:
  std::uint32_t l_;
  unsigned k_;
  std::uint64_t order_;
  std::vector<std::uint32_t> f_;
  Elem generator_;
};

/// True iff the monic polynomial (low degree first) is irreducible over F_l.
bool is_irreducible_mod(const std::vector<std::uint32_t>& poly, std::uint32_t l);

/// L = F_{l^{rd}} over E = F_{l^d}, with tau = Frobenius^d generating
/// Gal(L/E). Elements of E are stored as tau-fixed elements of L.
class FiniteFieldTower {
 public:
  /// Throws InvalidArgument for d = 0 or r < 2.
  FiniteFieldTower(std::uint32_t l, unsigned d, unsigned r);

  std::uint32_t l() const { return field_.characteristic(); }
  unsigned d() const { return d_; }
  unsigned r() const { return r_; }
  const FiniteField& field() const { return field_; }
  std::uint64_t base_order() const { return base_order_; }

  FiniteField::Elem tau(const FiniteField::Elem& x, unsigned times = 1) const;
  bool in_base(const FiniteField::Elem& x) const;
  /// prod_{j<r} tau^j(w).
  FiniteField::Elem norm(const FiniteField::Elem& w) const;
  /// Uniform element of E^x (the norm of a uniform element of L^x).
  FiniteField::Elem random_base_unit(std::mt19937_64& rng) const;
  /// Base element from its L-code, checked to be tau-fixed.
  FiniteField::Elem base_from_code(std::uint64_t code) const;

  bool operator==(const FiniteFieldTower& o) const { return l() == o.l() && d_ == o.d_ && r_ == o.r_; }
  std::string to_string() const;

 private:
  unsigned d_, r_;
  FiniteField field_;
  std::uint64_t base_order_;
};

/// w with N_{L/E}(w) = b, by exhaustion when |L| <= kNormExhaustLimit and by
/// discrete logarithm otherwise. Throws InvalidArgument unless b is in E^x.
FiniteField::Elem solve_norm(const FiniteFieldTower& tower, const FiniteField::Elem& b);

inline constexpr std::uint64_t kNormExhaustLimit = 100'000;

class CyclicAlgebra;

struct CyclicAlgebraElement {
  std::shared_ptr<const CyclicAlgebra> algebra;
  std::vector<FiniteField::Elem> coeffs;  // x = sum_j u^j coeffs[j]
};

class CyclicAlgebra : public std::enable_shared_from_this<CyclicAlgebra> {
 public:
  /// Throws InvalidArgument unless b is in E^x.
  static std::shared_ptr<const CyclicAlgebra> create(FiniteFieldTower tower, FiniteField::Elem b);

  const FiniteFieldTower& tower() const { return tower_; }
  const FiniteField::Elem& b() const { return b_; }
  /// r^2, the dimension over E.
  std::size_t dimension_over_base() const { return static_cast<std::size_t>(tower_.r()) * tower_.r(); }

  CyclicAlgebraElement zero() const;
  CyclicAlgebraElement one() const;
  /// u^j c.
  CyclicAlgebraElement monomial(unsigned j, const FiniteField::Elem& c) const;
  CyclicAlgebraElement scalar(const FiniteField::Elem& c) const { return monomial(0, c); }
  CyclicAlgebraElement u() const { return monomial(1, tower_.field().one()); }
  CyclicAlgebraElement random_element(std::mt19937_64& rng) const;

 private:
  CyclicAlgebra(FiniteFieldTower tower, FiniteField::Elem b) : tower_(std::move(tower)), b_(std::move(b)) {}
  FiniteFieldTower tower_;
  FiniteField::Elem b_;
};

/// Throw TowerMismatch when the operands live in different algebras.
CyclicAlgebraElement ca_add(const CyclicAlgebraElement& x, const CyclicAlgebraElement& y);
CyclicAlgebraElement ca_sub(const CyclicAlgebraElement& x, const CyclicAlgebraElement& y);
CyclicAlgebraElement ca_mul(const CyclicAlgebraElement& x, const CyclicAlgebraElement& y);
CyclicAlgebraElement ca_pow(const CyclicAlgebraElement& x, unsigned k);
bool ca_equal(const CyclicAlgebraElement& x, const CyclicAlgebraElement& y);
bool ca_is_zero(const CyclicAlgebraElement& x);
std::string ca_to_string(const CyclicAlgebraElement& x);

/// Matrix of left multiplication by x over F_l, on the basis u^j x^k
/// (j < r, k < rd), ordered j-major. Size r^2 d.
FpMatrix regular_representation(const CyclicAlgebraElement& x);

struct SplitCertificate {
  FiniteField::Elem w;     // N(w) = b
  CyclicAlgebraElement v;  // u w^{-1}, v^r = 1
  CyclicAlgebraElement z;  // 1 + v + ... + v^{r-1}
  std::size_t z_rank = 0;  // rank of left multiplication by z
  std::size_t dimension = 0;
  unsigned retries = 0;
};

/// Zero divisor witnessing that the algebra splits. Verifies v^r = 1,
/// z != 0, (v - 1) z = 0 and that z is singular; throws VerificationFailed
/// if any of these fails, DegenerateWitness if no norm preimage gives z != 0.
SplitCertificate split_certificate(const std::shared_ptr<const CyclicAlgebra>& algebra);

struct LadderRow {
  unsigned i = 0;
  std::uint64_t dim_field = 0;         // [F_i : F] = p^{i-1}
  std::uint64_t dim_centralizer_F = 0; // dim_F C_A(F_i)
  std::uint64_t dim_centralizer = 0;   // dim_{F_i} C_A(F_i)
  std::uint64_t index = 0;             // ind A_i, the degree of C_A(F_i)
  MValue m = MValue::undetermined();   // from index = p^{m+1}
  bool consistent = false;
};

/// Dimension bookkeeping for A of degree p^n over F and the subfields F_i,
/// i = 1..n. Throws InvalidArgument when p^{2n} overflows.
std::vector<LadderRow> index_ladder(std::uint64_t p, unsigned n);

struct RestrictionVerdict {
  std::uint32_t inv_psi = 0, inv_phi = 0;
  GammaVerification gamma;
  bool consistent = false;
};

/// Compares the carrying class on Z/a with the scaled class inflated from
/// Z/b_div, by invariant and by the explicit extension isomorphism.
/// Throws InvalidArgument unless b_div | a and q = a / b_div.
RestrictionVerdict restriction_consistency(std::uint32_t a, std::uint32_t b_div, std::uint32_t r, std::uint32_t q);

}  // namespace cyclo
