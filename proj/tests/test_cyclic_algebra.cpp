#include <functional>
#include <random>
#include <set>

#include "cyclo/cyclic_algebra.hpp"
#include "cyclo/error.hpp"
#include "cyclo/numtheory.hpp"
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

struct TowerCase {
  std::uint32_t l;
  unsigned d, r;
};

const TowerCase kTowers[] = {{3, 1, 2}, {2, 1, 3}, {5, 1, 2}, {2, 2, 2}, {3, 1, 3}};

}  // namespace

TEST_CASE("irreducibility and field construction") {
  CHECK(is_irreducible_mod({1, 1, 1}, 2));      // x^2 + x + 1
  CHECK_FALSE(is_irreducible_mod({1, 0, 1}, 2));  // (x + 1)^2
  CHECK(is_irreducible_mod({1, 1, 0, 1}, 2));   // x^3 + x + 1
  CHECK_FALSE(is_irreducible_mod({0, 0, 1, 1}, 2));
  CHECK_FALSE(is_irreducible_mod({1, 0, 1, 0, 1}, 2));  // (x^2 + x + 1)^2

  const FiniteField F9(3, 2);
  CHECK(F9.order() == 9);
  CHECK(F9.modulus_poly() == std::vector<std::uint32_t>{1, 0, 1});  // x^2 + 1
  const FiniteField F8(2, 3);
  CHECK(F8.modulus_poly() == std::vector<std::uint32_t>{1, 1, 0, 1});
  CHECK(FiniteField(5, 2).modulus_poly() == std::vector<std::uint32_t>{2, 0, 1});  // x^2 + 2

  // Brute-force irreducibility check for degree 2 and 3: no roots.
  for (std::uint32_t l : {2u, 3u, 5u, 7u})
    for (unsigned k : {2u, 3u}) {
      const FiniteField F(l, k);
      const auto& f = F.modulus_poly();
      for (std::uint32_t x = 0; x < l; ++x) {
        std::uint64_t v = 0;
        for (std::size_t i = f.size(); i-- > 0;) v = (v * x + f[i]) % l;
        CHECK(v != 0);
      }
    }
  CHECK(kind_of([] { FiniteField(4, 2); }) == ErrorKind::NotPrime);
  CHECK(kind_of([] { FiniteField(2, 40); }) == ErrorKind::InvalidArgument);
}

TEST_CASE("field arithmetic") {
  for (auto [l, k] : {std::pair<std::uint32_t, unsigned>{3, 2}, {2, 3}, {5, 2}, {2, 4}, {7, 3}}) {
    const FiniteField F(l, k);
    const auto g = F.primitive_element();
    std::set<std::uint64_t> powers;
    auto x = F.one();
    for (std::uint64_t e = 0; e + 1 < F.order(); ++e) {
      powers.insert(F.code(x));
      CHECK(F.discrete_log(x) == e);
      x = F.mul(x, g);
    }
    CHECK(x == F.one());
    CHECK(powers.size() == F.order() - 1);
    for (std::uint64_t c = 1; c < F.order(); ++c) {
      const auto y = F.from_code(c);
      CHECK(F.mul(y, F.inv(y)) == F.one());
      CHECK(F.frobenius(y, k) == y);
      CHECK(F.code(y) == c);
      CHECK(F.add(y, F.neg(y)) == F.zero());
    }
    CHECK(kind_of([&] { F.inv(F.zero()); }) == ErrorKind::DivisionByZero);
  }
}

TEST_CASE("tower structure") {
  for (const auto& tc : kTowers) {
    const FiniteFieldTower T(tc.l, tc.d, tc.r);
    const FiniteField& L = T.field();
    std::uint64_t fixed = 0;
    for (std::uint64_t c = 0; c < L.order(); ++c) {
      const auto x = L.from_code(c);
      CHECK(T.tau(x, tc.r) == x);
      if (T.in_base(x)) ++fixed;
    }
    CHECK(fixed == T.base_order());
  }
  CHECK(kind_of([] { FiniteFieldTower(3, 1, 1); }) == ErrorKind::InvalidArgument);
}

TEST_CASE("solve norm") {
  const FiniteFieldTower T(3, 1, 2);
  const FiniteField& L = T.field();
  CHECK(solve_norm(T, L.one()) == L.one());
  const auto w = solve_norm(T, L.from_code(2));
  // N(w) = w^4 = -1 forces w to have order 8.
  std::uint64_t order = 1;
  for (auto y = w; y != L.one(); y = L.mul(y, w)) ++order;
  CHECK(order == 8);
  CHECK(kind_of([&] { solve_norm(T, L.zero()); }) == ErrorKind::InvalidArgument);
  CHECK(kind_of([&] { solve_norm(T, L.from_code(3)); }) == ErrorKind::InvalidArgument);  // x is not in F_3

  std::mt19937_64 rng(5);
  for (const auto& tc : kTowers) {
    const FiniteFieldTower Tc(tc.l, tc.d, tc.r);
    for (int i = 0; i < 100; ++i) {
      const auto b = Tc.random_base_unit(rng);
      CHECK(Tc.in_base(b));
      CHECK(Tc.norm(solve_norm(Tc, b)) == b);
      // For b in E, N(b) = b^r.
      CHECK(Tc.norm(b) == Tc.field().pow(b, tc.r));
    }
  }
  // Large field: the discrete-log path.
  const FiniteFieldTower big(101, 1, 3);
  REQUIRE(big.field().order() > kNormExhaustLimit);
  for (std::uint64_t c = 1; c < 101; c += 7) {
    const auto b = big.base_from_code(c);
    CHECK(big.norm(solve_norm(big, b)) == b);
  }
}

TEST_CASE("cyclic algebra relations") {
  std::mt19937_64 rng(17);
  for (const auto& tc : kTowers) {
    const FiniteFieldTower T(tc.l, tc.d, tc.r);
    const FiniteField& L = T.field();
    const auto A = CyclicAlgebra::create(T, T.random_base_unit(rng));
    CHECK(A->dimension_over_base() == tc.r * tc.r);
    const auto u = A->u();
    CHECK(ca_equal(ca_mul(u, A->monomial(tc.r - 1, L.one())), A->scalar(A->b())));
    CHECK(ca_equal(ca_pow(u, tc.r), A->scalar(A->b())));
    for (int i = 0; i < 20; ++i) {
      const auto x = A->random_element(rng);
      CHECK(ca_equal(ca_mul(A->one(), x), x));
      CHECK(ca_equal(ca_mul(x, A->one()), x));
      const auto c = L.from_code(std::uniform_int_distribution<std::uint64_t>(0, L.order() - 1)(rng));
      // u c - tau(c) u = 0.
      CHECK(ca_is_zero(ca_sub(ca_mul(A->scalar(c), u), ca_mul(u, A->scalar(T.tau(c))))));
      // Base elements are central.
      const auto e = A->scalar(T.random_base_unit(rng));
      CHECK(ca_equal(ca_mul(e, x), ca_mul(x, e)));
    }
    for (int i = 0; i < 100; ++i) {
      const auto x = A->random_element(rng), y = A->random_element(rng), z = A->random_element(rng);
      CHECK(ca_equal(ca_mul(ca_mul(x, y), z), ca_mul(x, ca_mul(y, z))));
      CHECK(ca_equal(ca_mul(x, ca_add(y, z)), ca_add(ca_mul(x, y), ca_mul(x, z))));
    }
  }
  const auto A1 = CyclicAlgebra::create(FiniteFieldTower(3, 1, 2), FiniteField(3, 2).one());
  const auto A2 = CyclicAlgebra::create(FiniteFieldTower(3, 1, 2), FiniteField(3, 2).from_code(2));
  CHECK(kind_of([&] { ca_mul(A1->u(), A2->u()); }) == ErrorKind::TowerMismatch);
  CHECK(kind_of([] { CyclicAlgebra::create(FiniteFieldTower(3, 1, 2), FiniteField(3, 2).from_code(3)); }) ==
        ErrorKind::InvalidArgument);
}

TEST_CASE("regular representation") {
  const FiniteFieldTower T(3, 1, 2);
  const auto A = CyclicAlgebra::create(T, T.field().from_code(2));
  const FpMatrix one = regular_representation(A->one());
  CHECK(one == FpMatrix::identity(3, 4));
  const FpMatrix u = regular_representation(A->u());
  // Left multiplication by u sends u^0 x^k to u^1 x^{k'} and u^1 x^k to b x^{k'}.
  CHECK(rank(u) == 4);
  for (std::size_t col = 0; col < 4; ++col) {
    std::size_t nonzero = 0;
    for (std::size_t row = 0; row < 4; ++row) nonzero += u(row, col) != 0;
    CHECK(nonzero >= 1);
  }
  std::mt19937_64 rng(3);
  for (int i = 0; i < 30; ++i) {
    const auto x = A->random_element(rng), y = A->random_element(rng);
    CHECK(regular_representation(ca_mul(x, y)) == mat_mul(regular_representation(x), regular_representation(y)));
  }
}

TEST_CASE("split certificates") {
  SUBCASE("b = 1 over F_9/F_3") {
    const FiniteFieldTower T(3, 1, 2);
    const auto A = CyclicAlgebra::create(T, T.field().one());
    const auto cert = split_certificate(A);
    CHECK(cert.w == T.field().one());
    CHECK(ca_equal(cert.z, ca_add(A->one(), A->u())));
    CHECK(cert.z_rank < cert.dimension);
  }
  SUBCASE("random b on several towers") {
    std::mt19937_64 rng(29);
    for (const auto& tc : kTowers) {
      const FiniteFieldTower T(tc.l, tc.d, tc.r);
      for (int i = 0; i < 20; ++i) {
        const auto A = CyclicAlgebra::create(T, T.random_base_unit(rng));
        const auto cert = split_certificate(A);
        CHECK(T.norm(cert.w) == A->b());
        CHECK_FALSE(ca_is_zero(cert.z));
        CHECK(ca_is_zero(ca_mul(ca_sub(cert.v, A->one()), cert.z)));
        CHECK(cert.z_rank < cert.dimension);
        CHECK(cert.dimension == tc.r * tc.r * tc.d);
      }
    }
  }
}

TEST_CASE("index ladder") {
  const auto rows = index_ladder(2, 3);
  REQUIRE(rows.size() == 3);
  CHECK(rows[0].index == 8);
  CHECK(rows[1].dim_field == 2);
  CHECK(rows[1].dim_centralizer == 16);
  CHECK(rows[1].index == 4);
  CHECK(rows[2].index == 2);
  CHECK(rows[2].m == MValue::finite(0));
  for (std::uint64_t p : {2u, 3u, 5u})
    for (unsigned n = 1; n <= 5; ++n)
      for (const auto& row : index_ladder(p, n)) {
        CHECK(row.consistent);
        CHECK(row.m == MValue::finite(static_cast<int>(n - row.i)));
      }
  CHECK(kind_of([] { index_ladder(2, 40); }) == ErrorKind::InvalidArgument);
  CHECK(kind_of([] { index_ladder(4, 2); }) == ErrorKind::NotPrime);
}

TEST_CASE("restriction consistency") {
  CHECK(restriction_consistency(4, 2, 2, 2).consistent);
  CHECK(restriction_consistency(6, 6, 3, 1).consistent);
  CHECK(restriction_consistency(8, 2, 4, 4).consistent);
  for (std::uint32_t a = 1; a <= 8; ++a)
    for (std::uint32_t b = 1; b <= a; ++b)
      if (a % b == 0)
        for (std::uint32_t r = 1; r <= 4; ++r) CHECK(restriction_consistency(a, b, r, a / b).consistent);
  CHECK(kind_of([] { restriction_consistency(4, 3, 2, 1); }) == ErrorKind::InvalidArgument);
  CHECK(kind_of([] { restriction_consistency(4, 2, 2, 3); }) == ErrorKind::InvalidArgument);
}
