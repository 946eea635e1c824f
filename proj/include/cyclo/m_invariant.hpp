#pragma once

// The norm invariant m(K/F) of a cyclic p-power tower F = K_0 < ... < K_n = K:
// one less than the least s with xi_p a norm from K to K_s, or -inf when
// xi_p is already a norm to F.

#include <cstdint>
#include <string>
#include <variant>
#include <vector>

#include <gmpxx.h>

#include "cyclo/galois_module.hpp"
#include "cyclo/m_value.hpp"
#include "cyclo/root_of_unity.hpp"

namespace cyclo {

namespace tower {

/// Fixed field inside Q(xi_{p^{n-t}})(mu_1..mu_{p^n}); t = -inf uses the
/// base Q(xi_{p^{n+1}}).
struct BrauerRowen {
  std::uint64_t p;
  unsigned n;
  MValue t;
};

/// Rational function field over a base with the given roots of unity.
struct FunctionField {
  std::uint64_t p;
  unsigned n;
  RootOfUnityContent base;
};

/// The degree p^n subextension of Q_q(xi_q)/Q_q.
struct LocalCyclotomic {
  std::uint64_t p;
  unsigned n;
  std::uint64_t q;
};

/// F = Q_l(xi_{p^{n+1}}) and K = F(a^{1/p^n}) for a Kummer generator a.
struct LocalKummer {
  std::uint64_t p;
  unsigned n;
  std::uint64_t l;
};

/// p = 2, n = 2 over Q: K_1 = Q(sqrt a), K_2 = K_1(sqrt(d(a + sqrt a))).
struct Biquadratic {
  mpz_class a;
  int d;
};

}  // namespace tower

using TowerSpec =
    std::variant<tower::BrauerRowen, tower::FunctionField, tower::LocalCyclotomic, tower::LocalKummer, tower::Biquadratic>;

std::uint64_t tower_prime(const TowerSpec& spec);
unsigned tower_length(const TowerSpec& spec);
std::string tower_name(const TowerSpec& spec);

struct MResult {
  MValue m = MValue::undetermined();
  std::vector<std::string> evidence;
};

inline constexpr unsigned kDefaultTowerPrecision = 64;

/// Throws InadmissibleSpec (with the reason) when the parameters do not
/// describe a tower of the stated kind. padic_precision is the number of
/// 2-adic digits used for the biquadratic tower.
MResult compute_m(const TowerSpec& spec, unsigned padic_precision = kDefaultTowerPrecision);

/// Smallest prime q <= limit with q = 1 + p^n (mod p^{n+1}). Throws
/// NotFoundBelowLimit, or InvalidArgument when limit < 1 + p^n.
std::uint64_t find_dirichlet_prime(std::uint64_t p, unsigned n, std::uint64_t limit);

struct ResidueNormResult {
  bool in_norm_group = false;
  bool exhaustive = false;
  std::vector<std::uint64_t> order_p_elements;  // exhaustive mode only
  std::vector<std::uint64_t> order_p_powers;    // those that are p^n-th powers
  std::uint64_t power_count = 0;                 // |(F_q^x)^{p^n}|
};

/// Whether an element of order p in F_q^x is a p^n-th power. Exhaustive up
/// to kResidueExhaustLimit, otherwise by the power-residue criterion.
/// Throws InadmissibleSpec unless q is prime and q = 1 + p^n mod p^{n+1}.
ResidueNormResult residue_norm_details(std::uint64_t p, unsigned n, std::uint64_t q);
bool residue_norm_test(std::uint64_t p, unsigned n, std::uint64_t q);

inline constexpr std::uint64_t kResidueExhaustLimit = 1'000'000;

/// ind <= p^{m+1}, reading p^{-inf+1} as 1. Throws InvalidArgument when ind
/// is not a power of p or m is not decided.
bool index_bound_check(const MValue& m, std::uint64_t ind, std::uint64_t p);

struct ProfileVerdict {
  MValue from_spec;
  MValue from_module;
  Theorem1Shape shape;
};

/// Compares m read off the decomposition of M with compute_m(spec). A module
/// without exceptional summand matches -inf, and a compute_m answer of "<= 0"
/// matches either. Throws Mismatch with both values otherwise.
ProfileVerdict cross_check_profile(const TowerSpec& spec, const GModule& module);

/// The n = 1 tower over Q(xi_p)(X) whose cyclic algebra is not split; its m
/// is recorded rather than recomputed.
MResult rational_function_field_fixture(std::uint64_t p);

}  // namespace cyclo
