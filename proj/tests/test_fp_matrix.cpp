#include <random>

#include "cyclo/error.hpp"
#include "cyclo/fp_matrix.hpp"
#include "doctest.h"

using namespace cyclo;

namespace {

FpMatrix random_matrix(std::mt19937& rng, Residue p, std::size_t r, std::size_t c, int zero_bias) {
  FpMatrix m(p, r, c);
  std::uniform_int_distribution<int> d(0, static_cast<int>(p) - 1 + zero_bias);
  for (std::size_t i = 0; i < r; ++i) {
    for (std::size_t j = 0; j < c; ++j) {
      int v = d(rng);
      m.set(i, j, v >= static_cast<int>(p) ? 0 : v);
    }
  }
  return m;
}

}  // namespace

TEST_CASE("mat_mul examples") {
  const FpMatrix m(7, {{1, 2, 3}, {4, 5, 6}, {0, 6, 1}});
  CHECK(mat_mul(FpMatrix::identity(7, 3), m) == m);

  const FpMatrix u2(2, {{1, 1}, {0, 1}});
  CHECK(mat_mul(u2, u2) == FpMatrix::identity(2, 2));

  const FpMatrix u3(3, {{1, 1}, {0, 1}});
  CHECK(mat_mul(mat_mul(u3, u3), u3) == FpMatrix::identity(3, 2));
  CHECK(mat_mul(u3, u3) != FpMatrix::identity(3, 2));
}

TEST_CASE("mat_mul rejects mismatched operands") {
  CHECK_THROWS_AS(mat_mul(FpMatrix(3, 2, 3), FpMatrix(3, 2, 3)), Error);
  try {
    mat_mul(FpMatrix(3, 2, 2), FpMatrix(5, 2, 2));
    FAIL("expected ModulusMismatch");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::ModulusMismatch);
  }
}

TEST_CASE("constructor validates the modulus") {
  CHECK_THROWS_AS(FpMatrix(4, 2, 2), Error);
  CHECK_THROWS_AS(FpMatrix(1, 2, 2), Error);
  CHECK_NOTHROW(FpMatrix(2147483647u, 1, 1));
  const FpMatrix neg(5, {{-1, -6}});
  CHECK(neg(0, 0) == 4);
  CHECK(neg(0, 1) == 4);
}

TEST_CASE("rank examples") {
  CHECK(rank(FpMatrix(5, 3, 4)) == 0);
  CHECK(rank(FpMatrix::identity(5, 6)) == 6);
  CHECK(rank(FpMatrix(2, {{1, 1}, {1, 1}})) == 1);
  // Over F_3, (1,2) and (2,1) are dependent: 2*(1,2) = (2,1).
  CHECK(rank(FpMatrix(3, {{1, 2}, {2, 1}})) == 1);
  CHECK(rank(FpMatrix(5, {{1, 2}, {2, 1}})) == 2);
}

TEST_CASE("kernel_basis examples") {
  CHECK(kernel_basis(FpMatrix::identity(3, 4)).empty());

  const auto zero_kernel = kernel_basis(FpMatrix(3, 3, 3));
  REQUIRE(zero_kernel.size() == 3);
  CHECK(zero_kernel[0] == FpVector{1, 0, 0});
  CHECK(zero_kernel[2] == FpVector{0, 0, 1});

  const auto k = kernel_basis(FpMatrix(3, {{1, 2}}));
  REQUIRE(k.size() == 1);
  CHECK(k[0] == FpVector{1, 1});
}

TEST_CASE("mat_pow examples") {
  const FpMatrix a(5, {{1, 2}, {3, 4}});
  CHECK(mat_pow(a, 0) == FpMatrix::identity(5, 2));
  CHECK(mat_pow(a, 1) == a);
  CHECK(mat_pow(a, 5) == a * a * a * a * a);
  CHECK(mat_pow(FpMatrix(2, {{1, 1}, {0, 1}}), 2) == FpMatrix::identity(2, 2));
  CHECK_THROWS_AS(mat_pow(FpMatrix(5, 2, 3), 2), Error);
}

TEST_CASE("inverse") {
  const FpMatrix a(7, {{2, 1}, {1, 1}});
  CHECK(inverse(a) * a == FpMatrix::identity(7, 2));
  CHECK_THROWS_AS(inverse(FpMatrix(7, {{1, 2}, {2, 4}})), Error);
  CHECK(inverse(FpMatrix(7, 0, 0)).rows() == 0);
}

TEST_CASE("property: rank-nullity, kernel vectors, product rank bound") {
  std::mt19937 rng(7);
  for (Residue p : {2u, 3u, 5u, 101u, 65537u}) {
    for (int trial = 0; trial < 60; ++trial) {
      const std::size_t r = 1 + rng() % 9, c = 1 + rng() % 9, c2 = 1 + rng() % 9;
      const auto a = random_matrix(rng, p, r, c, trial % 3 == 0 ? 3 * static_cast<int>(p) : 0);
      const auto b = random_matrix(rng, p, c, c2, trial % 4 == 0 ? 3 * static_cast<int>(p) : 0);
      const auto ker = kernel_basis(a);
      CHECK(rank(a) + ker.size() == a.cols());
      for (const auto& v : ker) {
        for (auto x : mat_vec(a, v)) CHECK(x == 0);
      }
      CHECK(rank(a * b) <= std::min(rank(a), rank(b)));
      // Determinism of elimination.
      CHECK(row_reduce(a).reduced == row_reduce(a).reduced);
    }
  }
}
