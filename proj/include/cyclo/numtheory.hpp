#pragma once

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

namespace cyclo::nt {

std::uint64_t mul_mod(std::uint64_t a, std::uint64_t b, std::uint64_t m);
std::uint64_t pow_mod(std::uint64_t base, std::uint64_t exp, std::uint64_t m);

/// Inverse of a modulo m; nullopt when gcd(a, m) != 1.
std::optional<std::uint64_t> inv_mod(std::uint64_t a, std::uint64_t m);

/// Deterministic Miller-Rabin, exact for every 64-bit input.
bool is_prime(std::uint64_t n);

/// Checked power; nullopt on 64-bit overflow.
std::optional<std::uint64_t> checked_pow(std::uint64_t base, unsigned exp);

/// Largest k with p^k | n (n != 0).
unsigned valuation(std::uint64_t n, std::uint64_t p);

/// True iff n == p^k for some k >= 0; writes k.
bool is_power_of(std::uint64_t n, std::uint64_t p, unsigned* k = nullptr);

/// Trial-division factorization; throws FactorizationBound above 10^12.
std::vector<std::pair<std::uint64_t, unsigned>> factorize(std::uint64_t n);

/// Legendre symbol (a/p) for odd prime p, in {-1, 0, 1}.
int legendre(std::uint64_t a, std::uint64_t p);

/// Multiplicative order of a modulo m (gcd(a, m) == 1).
std::uint64_t mult_order(std::uint64_t a, std::uint64_t m);

inline constexpr std::uint64_t kTrialFactorBound = 1'000'000'000'000ULL;

}  // namespace cyclo::nt
