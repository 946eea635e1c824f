#include <functional>

#include "cyclo/cohomology.hpp"
#include "cyclo/error.hpp"
#include "doctest.h"

using namespace cyclo;

namespace {

ErrorKind kind_of(const std::function<void()>& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.kind();
  }
  FAIL("no error thrown");
  return ErrorKind::InternalInvariant;
}

// Direct transcription of the piecewise definitions, independent of the
// floor-difference formula used by carrying_cocycle.
std::uint32_t psi_piecewise(std::uint32_t i, std::uint32_t j, std::uint32_t b) {
  return (i % b) + (j % b) >= b ? 1 : 0;
}
std::uint32_t phi_piecewise(std::uint32_t i, std::uint32_t j, std::uint32_t a, std::uint32_t q, std::uint32_t r) {
  return i + j >= a ? q % r : 0;
}

}  // namespace

TEST_CASE("carrying_cocycle examples") {
  const auto c = carrying_cocycle(4, 2, 8);
  CHECK(c(1, 1) == 1);
  CHECK(c(1, 2) == 0);
  CHECK(c(3, 3) == 1);
  for (std::uint32_t j = 0; j < 4; ++j) CHECK(c(0, j) == 0);

  const auto d = carrying_cocycle(4, 4, 8);
  for (std::uint32_t i = 0; i < 4; ++i) {
    for (std::uint32_t j = 0; j < 4; ++j) CHECK(d(i, j) == (i + j >= 4 ? 1u : 0u));
  }
  CHECK(kind_of([] { carrying_cocycle(6, 4, 2); }) == ErrorKind::DoesNotDivide);
  CHECK(kind_of([] { carrying_cocycle(6, 0, 2); }) == ErrorKind::DoesNotDivide);
}

TEST_CASE("carrying matches the piecewise definitions") {
  for (std::uint32_t a = 1; a <= 12; ++a) {
    for (std::uint32_t b = 1; b <= a; ++b) {
      if (a % b) continue;
      for (std::uint32_t r = 1; r <= 6; ++r) {
        const auto psi = psi_cocycle(a, b, r), phi = phi_cocycle(a, b, r);
        for (std::uint32_t i = 0; i < a; ++i) {
          for (std::uint32_t j = 0; j < a; ++j) {
            REQUIRE(psi(i, j) == psi_piecewise(i, j, b) % r);
            REQUIRE(phi(i, j) == phi_piecewise(i, j, a, a / b, r));
          }
        }
      }
    }
  }
}

TEST_CASE("scale_cocycle examples") {
  const auto c = carrying_cocycle(4, 4, 4);
  CHECK(scale_cocycle(c, 1) == c);
  CHECK(scale_cocycle(c, 0) == Cocycle2::zero(4, 4));
  CHECK(scale_cocycle(c, 2)(3, 1) == 2);
}

TEST_CASE("is_cocycle examples") {
  CHECK(is_cocycle(Cocycle2::zero(5, 3)));
  CHECK(is_cocycle(carrying_cocycle(12, 4, 6)));
  // c(1,1) = 1 on Z/2 is a cocycle; breaking normalization is not.
  CHECK(is_cocycle(Cocycle2(2, 2, {0, 0, 0, 1})));
  CHECK_FALSE(is_cocycle(Cocycle2(2, 2, {0, 1, 0, 1})));
  // Normalized but failing the identity: c(1,1)=1 only on Z/3.
  CHECK_FALSE(is_cocycle(Cocycle2(3, 2, {0, 0, 0, 0, 1, 0, 0, 0, 0})));
}

TEST_CASE("extension_group examples") {
  const ExtensionGroup split(Cocycle2::zero(2, 2));
  CHECK(split.order() == 4);
  CHECK_FALSE(split.is_cyclic());
  for (auto x : split.elements()) CHECK(split.element_order(x) <= 2);

  const ExtensionGroup z4(carrying_cocycle(2, 2, 2));
  CHECK(z4.element_order({0, 1}) == 4);
  CHECK(z4.is_cyclic());

  const ExtensionGroup h(carrying_cocycle(6, 3, 4));
  for (std::uint32_t m = 0; m < 4; ++m) {
    for (std::uint32_t m2 = 0; m2 < 4; ++m2) {
      const auto prod = h.mul({m, 0}, {m2, 0});
      CHECK(prod == ExtensionGroup::Element{(m + m2) % 4, 0});
    }
    for (auto x : h.elements()) CHECK(h.mul({m, 0}, x) == h.mul(x, {m, 0}));
  }
  for (auto x : h.elements()) CHECK(h.mul(x, h.inverse(x)) == h.identity());
  CHECK(kind_of([] { ExtensionGroup(Cocycle2(2, 2, {0, 1, 0, 1})); }) == ErrorKind::NotACocycle);
}

TEST_CASE("gamma_isomorphism examples") {
  const auto v = gamma_isomorphism(4, 2, 2);
  CHECK(v.ok());
  CHECK(v.pairs_checked == 64);
  CHECK(v.q == 2);

  // b = a: gamma is the identity map.
  for (std::uint32_t i = 0; i < 5; ++i) CHECK(gamma_map({1, i}, 5, 3) == ExtensionGroup::Element{1, i});
  CHECK(gamma_isomorphism(5, 5, 3).ok());

  CHECK(gamma_isomorphism(8, 2, 4).ok());
  CHECK(kind_of([] { gamma_isomorphism(8, 3, 4); }) == ErrorKind::DoesNotDivide);
}

TEST_CASE("h2_invariant examples") {
  CHECK(h2_invariant(Cocycle2::zero(4, 6)) == 0);
  CHECK(h2_invariant(psi_cocycle(4, 2, 2)) == 0);
  CHECK(h2_invariant(phi_cocycle(4, 2, 2)) == 0);
  // q = 2, gcd(4, 4) = 4.
  CHECK(h2_invariant(psi_cocycle(4, 2, 4)) == 2);
  CHECK(h2_invariant(phi_cocycle(4, 2, 4)) == 2);
  CHECK(kind_of([] { h2_invariant(Cocycle2(2, 2, {0, 1, 0, 1})); }) == ErrorKind::NotACocycle);
}

TEST_CASE("cohomologous_bruteforce examples") {
  const auto c = carrying_cocycle(4, 2, 3);
  const auto self = cohomologous_bruteforce(c, c);
  REQUIRE(self);
  CHECK(*self == std::vector<std::uint32_t>{0, 0, 0, 0});

  const auto w = cohomologous_bruteforce(psi_cocycle(4, 2, 2), phi_cocycle(4, 2, 2));
  REQUIRE(w);
  // Witness: f(i) = floor(i/2) reproduces the gamma correction term.
  CHECK(*w == std::vector<std::uint32_t>{0, 0, 1, 1});

  // c(1,1) = 1 on Z/2 gives Z/4, not cohomologous to the split Z/2 x Z/2.
  CHECK_FALSE(cohomologous_bruteforce(carrying_cocycle(2, 2, 2), Cocycle2::zero(2, 2)));

  CHECK(kind_of([] { cohomologous_bruteforce(Cocycle2::zero(12, 6), Cocycle2::zero(12, 6)); }) ==
        ErrorKind::SearchSpaceTooLarge);
  CHECK(kind_of([] { cohomologous_bruteforce(Cocycle2::zero(2, 2), Cocycle2::zero(3, 2)); }) ==
        ErrorKind::DimensionMismatch);
}

TEST_CASE("restrict_cocycle examples") {
  CHECK(restrict_cocycle(Cocycle2::zero(4, 2), 2) == Cocycle2::zero(2, 2));
  const auto r = restrict_cocycle(carrying_cocycle(4, 4, 2), 2);
  CHECK(r.group_order() == 2);
  CHECK(r(1, 1) == 1);
  CHECK(h2_invariant(restrict_cocycle(psi_cocycle(4, 2, 2), 2)) == 0);
  CHECK(kind_of([] { restrict_cocycle(Cocycle2::zero(4, 2), 3); }) == ErrorKind::DoesNotDivide);
}

TEST_CASE("property: invariant equals brute-force cohomology and group isomorphism") {
  for (std::uint32_t a = 1; a <= 4; ++a) {
    for (std::uint32_t r = 1; r <= 3; ++r) {
      // All normalized cocycles on Z/a with values in Z/r, enumerated.
      std::vector<Cocycle2> all;
      const std::uint32_t free = (a - 1) * (a - 1);
      std::uint64_t total = 1;
      for (std::uint32_t i = 0; i < free; ++i) total *= r;
      for (std::uint64_t code = 0; code < total; ++code) {
        std::vector<std::uint32_t> t(std::size_t{a} * a, 0);
        std::uint64_t x = code;
        for (std::uint32_t i = 1; i < a; ++i) {
          for (std::uint32_t j = 1; j < a; ++j) {
            t[i * a + j] = x % r;
            x /= r;
          }
        }
        Cocycle2 c(a, r, t);
        if (is_cocycle(c)) all.push_back(c);
      }
      REQUIRE_FALSE(all.empty());
      for (std::size_t i = 0; i < all.size(); i += 1 + all.size() / 12) {
        for (std::size_t j = 0; j < all.size(); j += 1 + all.size() / 12) {
          const bool same = h2_invariant(all[i]) == h2_invariant(all[j]);
          const auto witness = cohomologous_bruteforce(all[i], all[j]);
          CHECK(same == witness.has_value());
          if (same) CHECK(isomorphic_exhaustive(ExtensionGroup(all[i]), ExtensionGroup(all[j])));
        }
      }
    }
  }
}
