#include <cmath>
#include <functional>

#include "cyclo/error.hpp"
#include "cyclo/galois_module.hpp"
#include "doctest.h"
#include "module_oracles.hpp"

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

Theorem1Shape shape(std::vector<std::size_t> ranks, std::optional<ExceptionalSummand> x = std::nullopt) {
  return Theorem1Shape{std::move(ranks), x};
}

}  // namespace

TEST_CASE("new_gmodule validation") {
  CHECK_NOTHROW(GModule(2, 1, FpMatrix::identity(2, 2)));
  CHECK_NOTHROW(GModule(2, 1, FpMatrix(2, {{1, 1}, {0, 1}})));
  CHECK(kind_of([] { GModule(2, 1, FpMatrix(2, {{0, 1}, {1, 1}})); }) == ErrorKind::OrderViolation);
  CHECK(kind_of([] { GModule(3, 1, FpMatrix(3, {{1, 1}, {0, 0}})); }) == ErrorKind::NotInvertible);
  // Order 4 is fine for n = 2 but not n = 1.
  CHECK(kind_of([] { GModule(2, 1, jordan_block(2, 3)); }) == ErrorKind::OrderViolation);
  CHECK_NOTHROW(GModule(2, 2, jordan_block(2, 3)));
}

TEST_CASE("jordan_profile examples") {
  CHECK(jordan_profile(GModule(3, 1, FpMatrix::identity(3, 3))).sizes == std::vector<std::size_t>{1, 1, 1});
  CHECK(jordan_profile(GModule(2, 2, jordan_block(2, 4))).sizes == std::vector<std::size_t>{4});
  const FpMatrix blocks[] = {jordan_block(2, 3), jordan_block(2, 1)};
  const auto prof = jordan_profile(GModule(2, 2, block_diagonal(2, blocks)));
  CHECK(prof.sizes == std::vector<std::size_t>{3, 1});
  CHECK(prof.total == 4);
  // (sigma - I) has rank 2 and square rank 1: r = (4, 2, 1, 0).
  CHECK(rank_sequence(GModule(2, 2, block_diagonal(2, blocks))) == std::vector<std::size_t>{4, 2, 1, 0});
}

TEST_CASE("shape classifier examples") {
  const auto a = classify_theorem1(make_profile({4, 4, 2, 1}), 2, 2);
  CHECK(a.free_ranks == std::vector<std::size_t>{1, 0, 2});
  REQUIRE(a.exceptional);
  CHECK(a.exceptional->m == 0);
  CHECK(a.exceptional->dim == 2);

  const auto b = classify_theorem1(make_profile({3}), 2, 2);
  CHECK(b.free_ranks == std::vector<std::size_t>{0, 0, 0});
  REQUIRE(b.exceptional);
  CHECK(b.exceptional->m == 1);
  CHECK(b.exceptional->dim == 3);

  CHECK(kind_of([] { classify_theorem1(make_profile({3, 3}), 2, 2); }) == ErrorKind::NotRealizable);

  const auto c = classify_theorem1(make_profile({3, 3, 1}), 3, 1);
  CHECK(c.free_ranks == std::vector<std::size_t>{1, 2});
  CHECK_FALSE(c.exceptional);
  CHECK(m_from_shape(c) == MValue::undetermined());
}

TEST_CASE("shape classifier error paths") {
  // 5 = 2^2 + 1 needs m = 2 < n.
  CHECK(kind_of([] { classify_theorem1(make_profile({5}), 2, 2); }) == ErrorKind::NotRealizable);
  CHECK_NOTHROW(classify_theorem1(make_profile({5}), 2, 3));
  // 7 is neither 3^i nor 3^m + 1.
  CHECK(kind_of([] { classify_theorem1(make_profile({7}), 3, 2); }) == ErrorKind::NotRealizable);
  CHECK(kind_of([] { classify_theorem1(make_profile({9}), 2, 3); }) == ErrorKind::NotRealizable);
  // The p = 2 size-2 convention yields to a genuine exceptional block.
  const auto s = classify_theorem1(make_profile({3, 2, 2}), 2, 2);
  CHECK(s.free_ranks == std::vector<std::size_t>{0, 2, 0});
  CHECK(s.exceptional->m == 1);
}

TEST_CASE("synthesize examples") {
  const auto one = synthesize(shape({1, 0}), 2, 1);
  CHECK(one.sigma() == FpMatrix::identity(2, 1));

  const auto x = synthesize(shape({0, 0}, ExceptionalSummand{0, 2}), 3, 1);
  CHECK(x.sigma() == FpMatrix(3, {{1, 1}, {0, 1}}));

  const auto y = synthesize(shape({0, 0, 1}), 2, 2);
  CHECK(jordan_profile(y).sizes == std::vector<std::size_t>{4});

  CHECK(kind_of([] { synthesize(shape({0, 0}, ExceptionalSummand{1, 4}), 3, 1); }) == ErrorKind::InvalidShape);
  CHECK(kind_of([] { synthesize(shape({0, 0}, ExceptionalSummand{0, 3}), 3, 1); }) == ErrorKind::InvalidShape);
  CHECK(kind_of([] { synthesize(shape({1}), 3, 1); }) == ErrorKind::InvalidShape);
}

TEST_CASE("m_from_shape examples") {
  CHECK(m_from_shape(shape({0, 0, 0}, ExceptionalSummand{1, 3})) == MValue::finite(1));
  CHECK(m_from_shape(shape({0, 0, 0})) == MValue::undetermined());
  CHECK(m_from_shape(shape({0, 0}, ExceptionalSummand{0, 2})) == MValue::finite(0));
}

TEST_CASE("random_gmodule") {
  const auto r = random_gmodule_with_blocks(2, 2, 7, 1);
  CHECK(r.module.dim() == 7);
  CHECK(jordan_profile(r.module) == make_profile(r.block_sizes));
  // Deterministic in the seed.
  CHECK(random_gmodule(2, 2, 7, 1).sigma() == r.module.sigma());
  CHECK(random_gmodule(2, 2, 7, 2).sigma() != r.module.sigma());
  CHECK_THROWS_AS(random_gmodule(2, 2, 0, 1), Error);
}

TEST_CASE("property: round trip over small shapes") {
  for (Residue p : {2u, 3u}) {
    for (unsigned n = 1; n <= 2; ++n) {
      for (std::size_t y0 = 0; y0 <= 1; ++y0) {
        for (std::size_t y1 = 0; y1 <= 2; ++y1) {
          std::vector<std::size_t> ranks{y0, y1};
          if (n == 2) ranks.push_back(1);
          for (int m = -1; m < static_cast<int>(n); ++m) {
            auto s = shape(ranks);
            if (m >= 0) s.exceptional = ExceptionalSummand{unsigned(m), std::size_t(std::pow(p, m)) + 1};
            const auto back = classify_theorem1(jordan_profile(synthesize(s, p, n)), p, n);
            CHECK(back == canonical_shape(s, p, n));
          }
        }
      }
    }
  }
}

TEST_CASE("property: profile is similarity invariant and matches enumeration oracles") {
  for (Residue p : {2u, 3u}) {
    for (std::size_t dim = 1; dim <= (p == 2 ? 6u : 5u); ++dim) {
      for (std::uint64_t seed = 0; seed < 4; ++seed) {
        const auto r = random_gmodule_with_blocks(p, 2, dim, seed * 31 + dim);
        const auto prof = jordan_profile(r.module);
        CHECK(prof.total == dim);
        CHECK(prof == make_profile(r.block_sizes));
        const auto q = random_invertible(p, dim, seed + 1000);
        CHECK(jordan_profile(conjugate(r.module, q)) == prof);
        CHECK(oracle::profile_by_kernel_counts(r.module) == prof.sizes);
        const auto chains = oracle::profile_by_chain_search(r.module);
        REQUIRE(chains);
        CHECK(make_profile(*chains) == prof);
      }
    }
  }
}
