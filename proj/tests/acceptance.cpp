// Acceptance gate: one PASS/FAIL line per criterion, with wall time against
// the stated budget. Optional argument: path to the cyclo executable, used
// to run the m-compute example through the command line as well.

#include <array>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <iostream>
#include <memory>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include <gmpxx.h>

#include "cyclo/cohomology.hpp"
#include "cyclo/cyclic_algebra.hpp"
#include "cyclo/error.hpp"
#include "cyclo/galois_module.hpp"
#include "cyclo/m_invariant.hpp"
#include "cyclo/numtheory.hpp"
#include "cyclo/padic.hpp"
#include "cyclo/ufd_norm.hpp"
#include "module_oracles.hpp"
#include "square_class_oracle.hpp"

using namespace cyclo;

namespace {

struct Outcome {
  bool ok = true;
  std::ostringstream detail;

  void require(bool cond, const std::string& what) {
    if (!cond) {
      if (!ok) detail << "; ";
      ok = false;
      detail << "failed: " << what;
    }
  }
};

struct Criterion {
  int number;
  std::string name;
  double budget_seconds;
  std::function<void(Outcome&)> run;
};

std::string g_cli;

// ---- 1: biquadratic a = 17, d = -1 ----

void biquadratic(Outcome& out) {
  out.require(mpz_class(17 - 1) % 8 == 0, "17 = 1 mod 8");
  const auto root = hensel_sqrt(PadicNumber::from_integer(17, 2, kDefaultTowerPrecision));
  out.require(root.has_value(), "sqrt 17 in Q_2");
  if (!root) return;
  out.require(agree(*root * *root, PadicNumber::from_integer(17, 2, root->precision())), "root squares to 17");
  const PadicNumber a = PadicNumber::from_integer(17, 2, root->precision());
  bool certified = false;
  for (const PadicNumber& r : {*root, -*root}) {
    const PadicNumber s = -(a + r);
    const bool lib = sum_of_two_squares_q2(s);
    const bool brute = oracle::q2_sum_of_two_squares_by_class(s.valuation(), s.unit_mod(3).get_ui());
    out.require(lib == brute, "2-adic sum of two squares agrees with the square-class oracle");
    certified = certified || !lib;
  }
  // Real places: -(17 +- sqrt 17) < 0 and -1 < 0.
  for (double sign : {1.0, -1.0}) {
    const double s = -(17 + sign * std::sqrt(17.0));
    const int sym = hilbert_symbol(mpq_class(s < 0 ? -1 : 1), mpq_class(-1), Place::infinite());
    out.require(s < 0 && sym == -1, "real place symbol is -1");
    certified = certified || sym == -1;
  }
  out.require(certified, "some completion certifies -1 is not a norm");
  const MResult r = compute_m(tower::Biquadratic{17, -1});
  out.require(r.m == MValue::finite(1), "compute_m gives 1, got " + r.m.to_string());

  if (!g_cli.empty()) {
    const std::string cmd = g_cli + " m-compute --spec " + CYCLO_DATA_DIR "/biquadratic-17.json";
    std::unique_ptr<FILE, int (*)(FILE*)> pipe(popen(cmd.c_str(), "r"), pclose);
    std::string text;
    std::array<char, 256> buf{};
    if (pipe)
      while (fgets(buf.data(), buf.size(), pipe.get())) text += buf.data();
    out.require(text.rfind("m = 1\n", 0) == 0, "m-compute prints m = 1");
    out.detail << "m-compute: " << text.substr(0, text.find('\n')) << "; ";
  }
  out.detail << "m = " << r.m.to_string();
}

// ---- 2: Dirichlet primes ----

void dirichlet(Outcome& out) {
  struct Case {
    std::uint64_t p;
    unsigned n;
    std::uint64_t q;
  };
  for (const Case c : {Case{2, 2, 5}, Case{3, 1, 13}}) {
    const std::uint64_t q = find_dirichlet_prime(c.p, c.n, 1000);
    out.require(q == c.q, "find_dirichlet_prime(" + std::to_string(c.p) + "," + std::to_string(c.n) + ") = " +
                              std::to_string(c.q) + ", got " + std::to_string(q));
    const ResidueNormResult r = residue_norm_details(c.p, c.n, q);
    out.require(r.exhaustive, "exhaustive residue search");
    out.require(!r.in_norm_group && !residue_norm_test(c.p, c.n, q), "xi_p is not a norm");
    // Independent count: x is a p^n-th power iff x^{(q-1)/gcd} = 1.
    const std::uint64_t pn = *nt::checked_pow(c.p, c.n);
    std::set<std::uint64_t> powers;
    for (std::uint64_t x = 1; x < q; ++x) powers.insert(nt::pow_mod(x, pn, q));
    bool order_p_power = false;
    for (std::uint64_t x = 2; x < q; ++x)
      if (nt::pow_mod(x, c.p, q) == 1 && powers.count(x)) order_p_power = true;
    out.require(!order_p_power, "no element of order p is a p^n-th power");
    const MValue m = compute_m(tower::LocalCyclotomic{c.p, c.n, q}).m;
    out.require(m == MValue::finite(0), "m = 0");
    out.detail << "(" << c.p << "," << c.n << "): q = " << q << ", m = " << m.to_string() << "; ";
  }
}

// ---- 3: Kummer towers ----

void kummer(Outcome& out) {
  struct Case {
    std::uint64_t p;
    unsigned n;
    std::uint64_t l;
  };
  for (const Case c : {Case{2, 1, 3}, Case{2, 2, 3}, Case{3, 1, 7}, Case{3, 2, 5}}) {
    const MValue m = compute_m(tower::LocalKummer{c.p, c.n, c.l}).m;
    out.require(m.is_neg_infinity(), "LocalKummer(" + std::to_string(c.p) + "," + std::to_string(c.n) + ") gives -inf");
    out.detail << "(" << c.p << "," << c.n << ";l=" << c.l << "): " << m.to_string() << " ";
  }
}

// ---- 4: realization sweep ----

void realization(Outcome& out) {
  std::size_t produced = 0;
  for (std::uint64_t p : {2u, 3u})
    for (unsigned n = 1; n <= 4; ++n) {
      std::vector<MValue> targets{MValue::neg_infinity()};
      for (unsigned t = 0; t < n; ++t) targets.push_back(MValue::finite(static_cast<int>(t)));
      for (const MValue& t : targets) {
        const MValue br = compute_m(tower::BrauerRowen{p, n, t}).m;
        // Function field over Q(xi_N) with N = p^{n-t}, or p^{n+1} for -inf.
        const unsigned e = t.is_neg_infinity() ? n + 1 : n - static_cast<unsigned>(t.value());
        const std::uint64_t N = *nt::checked_pow(p, e);
        const MValue ff = compute_m(tower::FunctionField{p, n, RootOfUnityContent::cyclotomic(N)}).m;
        out.require(br == t, "BrauerRowen p=" + std::to_string(p) + " n=" + std::to_string(n) + " t=" + t.to_string());
        out.require(ff == t, "FunctionField p=" + std::to_string(p) + " n=" + std::to_string(n) + " t=" + t.to_string());
        ++produced;
      }
    }
  out.detail << produced << " (p, n, t) targets each realized twice";
}

// ---- 5: cocycle suite ----

void cocycles(Outcome& out) {
  std::size_t triples = 0, pairs = 0;
  for (std::uint32_t a = 1; a <= 12; ++a)
    for (std::uint32_t b = 1; b <= a; ++b) {
      if (a % b) continue;
      for (std::uint32_t r = 1; r <= 6; ++r) {
        ++triples;
        const Cocycle2 psi = psi_cocycle(a, b, r), phi = phi_cocycle(a, b, r);
        const std::string tag = " (" + std::to_string(a) + "," + std::to_string(b) + "," + std::to_string(r) + ")";
        out.require(is_cocycle(psi) && is_cocycle(phi), "cocycle condition" + tag);
        out.require(h2_invariant(psi) == h2_invariant(phi), "equal invariants" + tag);
        try {
          const GammaVerification g = gamma_isomorphism(a, b, r);
          out.require(g.ok() && g.pairs_checked == std::uint64_t{a} * r * a * r, "gamma isomorphism" + tag);
        } catch (const Error& e) {
          out.require(false, std::string("gamma isomorphism") + tag + ": " + e.what());
        }
      }
    }
  for (std::uint32_t a = 1; a <= 4; ++a)
    for (std::uint32_t r = 1; r <= 3; ++r) {
      std::vector<Cocycle2> pool{Cocycle2::zero(a, r)};
      for (std::uint32_t b = 1; b <= a; ++b)
        if (a % b == 0) {
          pool.push_back(psi_cocycle(a, b, r));
          pool.push_back(phi_cocycle(a, b, r));
        }
      for (const auto& c1 : pool)
        for (const auto& c2 : pool) {
          ++pairs;
          const bool brute = cohomologous_bruteforce(c1, c2).has_value();
          out.require(brute == (h2_invariant(c1) == h2_invariant(c2)), "brute force agrees with invariant");
        }
    }
  out.detail << triples << " (a, b, r) triples, " << pairs << " brute-force pairs";
}

// ---- 6: module classifier ----

void classifier(Outcome& out) {
  std::size_t shapes = 0;
  for (Residue p : {2u, 3u})
    for (unsigned n = 1; n <= 3; ++n) {
      std::vector<std::size_t> ranks(n + 1, 0);
      for (;;) {
        for (int m = -1; m < static_cast<int>(n); ++m) {
          Theorem1Shape s;
          s.free_ranks = ranks;
          if (m >= 0) s.exceptional = ExceptionalSummand{static_cast<unsigned>(m), *nt::checked_pow(p, m) + 1};
          const auto back = classify_theorem1(jordan_profile(synthesize(s, p, n)), p, n);
          out.require(back == canonical_shape(s, p, n), "round trip " + s.to_string());
          ++shapes;
        }
        std::size_t i = 0;
        while (i <= n && ranks[i] == 2) ranks[i++] = 0;
        if (i > n) break;
        ++ranks[i];
      }
    }
  out.detail << shapes << " shapes round-tripped; ";

  std::mt19937_64 rng(2024);
  for (int k = 0; k < 200; ++k) {
    const Residue p = k % 2 ? 3 : 2;
    const unsigned n = 1 + static_cast<unsigned>(rng() % 3);
    const std::size_t dim = 1 + rng() % 12;
    const auto r = random_gmodule_with_blocks(p, n, dim, rng());
    const auto prof = jordan_profile(r.module);
    out.require(prof == make_profile(r.block_sizes), "profile equals drawn blocks");
    out.require(jordan_profile(conjugate(r.module, random_invertible(p, dim, rng()))) == prof, "similarity invariance");
  }
  out.detail << "200 conjugations; ";

  std::size_t oracle_runs = 0;
  for (Residue p : {2u, 3u})
    for (std::size_t dim = 1; dim <= 6; ++dim)
      for (std::uint64_t seed = 0; seed < 3; ++seed) {
        const auto r = random_gmodule_with_blocks(p, 2, dim, 97 * seed + dim);
        const auto prof = jordan_profile(r.module);
        const auto chains = oracle::profile_by_chain_search(r.module);
        out.require(chains && make_profile(*chains) == prof, "chain-search oracle dim " + std::to_string(dim));
        out.require(oracle::profile_by_kernel_counts(r.module) == prof.sizes, "kernel-count oracle");
        ++oracle_runs;
      }
  out.detail << oracle_runs << " modules of dim <= 6 against the block-search oracle";
}

// ---- 7: unit norms ----

void unit_norms(Outcome& out) {
  struct Case {
    std::uint64_t l;
    unsigned n, deg;
    std::set<std::uint64_t> expected;
  };
  for (const Case& c : {Case{3, 2, 2, {1}}, Case{5, 2, 1, {1, 4}}, Case{3, 3, 1, {1, 2}}}) {
    const PropositionReport r = proposition_check(c.l, c.n, c.deg);
    std::set<std::uint64_t> powers;
    for (std::uint64_t x = 1; x < c.l; ++x) powers.insert(nt::pow_mod(x, c.n, c.l));
    out.require(r.unit_norms == c.expected && r.nth_powers == powers && r.holds(),
                "unit norms for l=" + std::to_string(c.l) + " n=" + std::to_string(c.n));
    out.detail << "(l=" << c.l << ",n=" << c.n << ",deg<=" << c.deg << "): " << r.polynomials << " polys, "
               << r.unit_norms.size() << " unit norms; ";
  }
}

// ---- 8: index ladder ----

void ladder(Outcome& out) {
  std::size_t rows = 0;
  for (std::uint64_t p : {2u, 3u, 5u})
    for (unsigned n = 1; n <= 5; ++n) {
      const auto table = index_ladder(p, n);
      out.require(table.size() == n, "one row per level");
      const std::uint64_t dim_a = *nt::checked_pow(p, 2 * n);
      for (const auto& row : table) {
        const unsigned i = row.i;
        out.require(row.index == *nt::checked_pow(p, n - i + 1), "ind A_i = p^{n-i+1}");
        out.require(row.dim_centralizer == *nt::checked_pow(p, 2 * (n - i + 1)), "dim_{F_i} C = p^{2(n-i+1)}");
        out.require(row.dim_field == *nt::checked_pow(p, i - 1), "[F_i : F] = p^{i-1}");
        out.require(row.dim_centralizer_F * row.dim_field == dim_a, "double centralizer");
        out.require(row.m == MValue::finite(static_cast<int>(n - i)) && row.consistent, "m = n - i");
        ++rows;
      }
    }
  out.detail << rows << " ladder rows";
}

// ---- 9: cyclic algebra arithmetic ----

void algebra(Outcome& out) {
  std::mt19937_64 rng(9);
  struct Case {
    std::uint32_t l;
    unsigned d, r;
  };
  for (const Case c : {Case{3, 1, 2}, Case{2, 1, 3}, Case{5, 1, 2}}) {
    const FiniteFieldTower T(c.l, c.d, c.r);
    const auto A = CyclicAlgebra::create(T, T.random_base_unit(rng));
    std::size_t bad = 0;
    for (int i = 0; i < 500; ++i) {
      const auto x = A->random_element(rng), y = A->random_element(rng), z = A->random_element(rng);
      if (!ca_equal(ca_mul(ca_mul(x, y), z), ca_mul(x, ca_mul(y, z)))) ++bad;
    }
    out.require(bad == 0, "associativity over " + T.to_string());
    for (int i = 0; i < 20; ++i) {
      const auto B = CyclicAlgebra::create(T, T.random_base_unit(rng));
      const SplitCertificate cert = split_certificate(B);
      out.require(T.norm(cert.w) == B->b(), "N(w) = b");
      out.require(!ca_is_zero(cert.z) && ca_is_zero(ca_mul(ca_sub(cert.v, B->one()), cert.z)), "(v - 1) z = 0");
      out.require(rank(regular_representation(cert.z)) < cert.dimension, "z is singular");
    }
    for (std::uint64_t code = 1; code < T.base_order(); ++code) {
      const auto b = T.base_from_code(code);
      out.require(T.norm(solve_norm(T, b)) == b, "solve_norm round trip");
    }
    out.detail << T.to_string() << " ok; ";
  }
}

// ---- 10: Hilbert symbol properties ----

mpq_class small_rational(std::mt19937_64& rng) {
  static const long primes[] = {2, 3, 5, 7, 11, 13};
  mpz_class num = rng() % 2 ? -1 : 1, den = 1;
  for (long q : primes) {
    const int e = static_cast<int>(rng() % 5) - 2;
    for (int i = 0; i < e; ++i) num *= q;
    for (int i = 0; i < -e; ++i) den *= q;
  }
  mpq_class x(num, den);
  x.canonicalize();
  return x;
}

void hilbert(Outcome& out) {
  std::mt19937_64 rng(10);
  const std::vector<Place> places{Place::infinite(), Place::at(2), Place::at(3), Place::at(5),
                                  Place::at(7),      Place::at(11), Place::at(13)};
  std::size_t evaluations = 0;
  for (int k = 0; k < 1000; ++k) {
    const mpq_class a = small_rational(rng), b = small_rational(rng), c = small_rational(rng);
    int product = 1;
    for (const Place& v : places) {
      const int ab = hilbert_symbol(LocalValue{a}, LocalValue{b}, v);
      out.require(ab == hilbert_symbol(LocalValue{b}, LocalValue{a}, v), "symmetry");
      out.require(ab * hilbert_symbol(LocalValue{a}, LocalValue{c}, v) ==
                      hilbert_symbol(LocalValue{a}, LocalValue{mpq_class(b * c)}, v),
                  "bilinearity");
      out.require(hilbert_symbol(LocalValue{a}, LocalValue{mpq_class(-a)}, v) == 1, "(a, -a) = 1");
      product *= ab;
      evaluations += 4;
    }
    out.require(product == 1, "product formula");
    out.require(quaternion_splits_q(a, b).symbols.size() >= 1, "reciprocity table");
  }
  out.detail << "1000 pairs, " << evaluations << " symbol evaluations";
}

}  // namespace

int main(int argc, char** argv) {
  if (argc > 1) g_cli = argv[1];
  const std::vector<Criterion> criteria{
      {1, "biquadratic tower a=17 d=-1 has m=1", 1, biquadratic},
      {2, "Dirichlet primes 5 and 13 give m=0", 1, dirichlet},
      {3, "Kummer towers give m=-inf", 1, kummer},
      {4, "every t in {-inf,0..n-1} is realized", 1, realization},
      {5, "carrying cocycle suite", 30, cocycles},
      {6, "module classifier round trip, similarity, oracle", 60, classifier},
      {7, "unit norms are exactly the n-th powers", 60, unit_norms},
      {8, "index ladder", 1, ladder},
      {9, "cyclic algebra arithmetic", 30, algebra},
      {10, "Hilbert symbol properties", 30, hilbert},
  };
  int failures = 0;
  for (const auto& c : criteria) {
    Outcome out;
    const auto start = std::chrono::steady_clock::now();
    try {
      c.run(out);
    } catch (const std::exception& e) {
      out.require(false, std::string("exception: ") + e.what());
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (secs > c.budget_seconds) out.require(false, "over the " + std::to_string(c.budget_seconds) + " s budget");
    if (!out.ok) ++failures;
    std::printf("%s criterion %2d: %s [%.3f s / %.0f s] %s\n", out.ok ? "PASS" : "FAIL", c.number, c.name.c_str(), secs,
                c.budget_seconds, out.detail.str().c_str());
  }
  std::printf("%d of %zu criteria passed\n", static_cast<int>(criteria.size()) - failures, criteria.size());
  return failures == 0 ? 0 : 1;
}
