#include "cyclo/verify.hpp"

#include <algorithm>
#include <functional>
#include <iomanip>
#include <map>
#include <optional>
#include <random>
#include <set>
#include <sstream>
#include <tuple>

#include "cyclo/cohomology.hpp"
#include "cyclo/cyclic_algebra.hpp"
#include "cyclo/error.hpp"
#include "cyclo/galois_module.hpp"
#include "cyclo/json_io.hpp"
#include "cyclo/m_invariant.hpp"
#include "cyclo/numtheory.hpp"
#include "cyclo/padic.hpp"
#include "cyclo/ufd_norm.hpp"

namespace cyclo {

using nlohmann::json;

namespace {

struct Check {
  std::string id;
  std::string reference;
  std::function<void(CheckRecord&, const VerifyOptions&)> run;
};

void settle(CheckRecord& rec) { rec.verdict = rec.expected == rec.computed ? Verdict::Pass : Verdict::Fail; }

json set_to_json(const std::set<std::uint64_t>& s) { return json(std::vector<std::uint64_t>(s.begin(), s.end())); }

Theorem1Shape make_shape(std::vector<std::size_t> ranks, std::optional<ExceptionalSummand> x = std::nullopt) {
  Theorem1Shape s;
  s.free_ranks = std::move(ranks);
  s.exceptional = x;
  return s;
}

mpq_class random_rational(std::mt19937_64& rng) {
  static const long primes[] = {2, 3, 5, 7, 11, 13};
  mpz_class num = (rng() % 2) ? -1 : 1, den = 1;
  for (long q : primes) {
    const int e = static_cast<int>(rng() % 4) - 1;
    for (int i = 0; i < e; ++i) num *= q;
    if (e < 0 && rng() % 3 == 0) den *= q;
  }
  mpq_class out(num, den);
  out.canonicalize();
  return out;
}

// ---- cohomology ----

void cocycle_suite(CheckRecord& rec, const VerifyOptions&) {
  rec.inputs = {{"a", "1..12"}, {"b", "divisors of a"}, {"r", "1..6"}};
  rec.expected = {{"failures", 0}};
  std::size_t triples = 0, failures = 0;
  json first_failure;
  for (std::uint32_t a = 1; a <= 12; ++a)
    for (std::uint32_t b = 1; b <= a; ++b) {
      if (a % b != 0) continue;
      for (std::uint32_t r = 1; r <= 6; ++r) {
        ++triples;
        const Cocycle2 psi = psi_cocycle(a, b, r), phi = phi_cocycle(a, b, r);
        const bool ok = is_cocycle(psi) && is_cocycle(phi) && h2_invariant(psi) == h2_invariant(phi) &&
                        gamma_isomorphism(a, b, r).ok();
        if (!ok && failures++ == 0) first_failure = {a, b, r};
      }
    }
  rec.computed = {{"failures", failures}};
  if (failures) rec.computed["first"] = first_failure;
  rec.inputs["triples"] = triples;
  settle(rec);
}

void bruteforce_agreement(CheckRecord& rec, const VerifyOptions&) {
  rec.inputs = {{"a", "1..4"}, {"r", "1..3"}, {"cocycles", "psi, phi for every b | a, and zero"}};
  rec.expected = {{"disagreements", 0}};
  std::size_t pairs = 0, disagreements = 0;
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
          if (cohomologous_bruteforce(c1, c2).has_value() != (h2_invariant(c1) == h2_invariant(c2))) ++disagreements;
        }
    }
  rec.inputs["pairs"] = pairs;
  rec.computed = {{"disagreements", disagreements}};
  settle(rec);
}

void witness_422(CheckRecord& rec, const VerifyOptions&) {
  rec.inputs = {{"a", 4}, {"b", 2}, {"r", 2}};
  const auto f = cohomologous_bruteforce(psi_cocycle(4, 2, 2), phi_cocycle(4, 2, 2));
  rec.expected = {{"cohomologous", true}, {"invariants_equal", true}};
  rec.computed = {{"cohomologous", f.has_value()},
                  {"invariants_equal", h2_invariant(psi_cocycle(4, 2, 2)) == h2_invariant(phi_cocycle(4, 2, 2))}};
  settle(rec);
  if (f) rec.computed["witness"] = *f;
}

// ---- cyclic algebras ----

const FiniteFieldTower& tower_for(std::uint32_t l, unsigned d, unsigned r) {
  static std::map<std::tuple<std::uint32_t, unsigned, unsigned>, FiniteFieldTower> cache;
  auto key = std::make_tuple(l, d, r);
  auto it = cache.find(key);
  if (it == cache.end()) it = cache.emplace(key, FiniteFieldTower(l, d, r)).first;
  return it->second;
}

const std::tuple<std::uint32_t, unsigned, unsigned> kAlgebraTowers[] = {{3, 1, 2}, {2, 1, 3}, {5, 1, 2}};

void associativity(CheckRecord& rec, const VerifyOptions& opt) {
  rec.inputs = {{"towers", "F_9/F_3, F_8/F_2, F_25/F_5"}, {"triples_per_tower", 500}, {"seed", opt.seed}};
  rec.expected = {{"failures", 0}};
  std::mt19937_64 rng(opt.seed);
  std::size_t failures = 0;
  for (const auto& [l, d, r] : kAlgebraTowers) {
    const FiniteFieldTower& T = tower_for(l, d, r);
    const auto A = CyclicAlgebra::create(T, T.random_base_unit(rng));
    for (int i = 0; i < 500; ++i) {
      const auto x = A->random_element(rng), y = A->random_element(rng), z = A->random_element(rng);
      if (!ca_equal(ca_mul(ca_mul(x, y), z), ca_mul(x, ca_mul(y, z)))) ++failures;
    }
  }
  rec.computed = {{"failures", failures}};
  settle(rec);
}

void split_certificates(CheckRecord& rec, const VerifyOptions& opt) {
  rec.inputs = {{"towers", "F_9/F_3, F_8/F_2, F_25/F_5"}, {"b_per_tower", 20}, {"seed", opt.seed}};
  rec.expected = {{"verified", 60}};
  std::mt19937_64 rng(opt.seed + 1);
  std::size_t verified = 0;
  for (const auto& [l, d, r] : kAlgebraTowers) {
    const FiniteFieldTower& T = tower_for(l, d, r);
    for (int i = 0; i < 20; ++i) {
      const auto A = CyclicAlgebra::create(T, T.random_base_unit(rng));
      const SplitCertificate cert = split_certificate(A);
      if (T.norm(cert.w) == A->b() && cert.z_rank < cert.dimension) ++verified;
    }
  }
  rec.computed = {{"verified", verified}};
  settle(rec);
}

void norm_f9(CheckRecord& rec, const VerifyOptions&) {
  const FiniteFieldTower& T = tower_for(3, 1, 2);
  const FiniteField& L = T.field();
  rec.inputs = {{"L", "F_9"}, {"E", "F_3"}, {"b", 2}};
  const auto w = solve_norm(T, L.from_code(2));
  std::uint64_t order = 1;
  for (auto y = w; y != L.one(); y = L.mul(y, w)) ++order;
  rec.expected = {{"norm", 2}, {"order_of_w", 8}};
  rec.computed = {{"norm", L.code(T.norm(w))}, {"order_of_w", order}, {"w", L.to_string(w)}};
  rec.verdict = rec.computed["norm"] == 2 && order == 8 ? Verdict::Pass : Verdict::Fail;
}

void exp_identity(CheckRecord& rec, const VerifyOptions&) {
  rec.inputs = {{"towers", "F_9/F_3, F_8/F_2, F_25/F_5, F_16/F_4"}, {"b", "every unit of E"}};
  rec.expected = {{"failures", 0}};
  std::size_t failures = 0, checked = 0;
  for (const auto& [l, d, r] : {std::tuple<std::uint32_t, unsigned, unsigned>{3, 1, 2}, {2, 1, 3}, {5, 1, 2}, {2, 2, 2}}) {
    const FiniteFieldTower& T = tower_for(l, d, r);
    const FiniteField& L = T.field();
    for (std::uint64_t c = 1; c < L.order(); ++c) {
      const auto b = L.from_code(c);
      if (!T.in_base(b)) continue;
      ++checked;
      // N(b) = b^r, so b^r is a norm with preimage b.
      if (T.norm(b) != L.pow(b, r) || T.norm(solve_norm(T, L.pow(b, r))) != L.pow(b, r)) ++failures;
    }
  }
  rec.inputs["checked"] = checked;
  rec.computed = {{"failures", failures}};
  settle(rec);
}

void index_ladder_check(CheckRecord& rec, const VerifyOptions&) {
  rec.inputs = {{"p", {2, 3, 5}}, {"n", "1..5"}};
  rec.expected = {{"inconsistent_rows", 0}};
  std::size_t rows = 0, bad = 0;
  for (std::uint64_t p : {2u, 3u, 5u})
    for (unsigned n = 1; n <= 5; ++n)
      for (const auto& row : index_ladder(p, n)) {
        ++rows;
        if (!row.consistent) ++bad;
      }
  const auto sample = index_ladder(2, 3)[1];
  rec.inputs["rows"] = rows;
  rec.computed = {{"inconsistent_rows", bad},
                  {"p=2,n=3,i=2", {{"dim_F_i", sample.dim_field}, {"dim_centralizer", sample.dim_centralizer},
                                   {"index", sample.index}}}};
  rec.expected["p=2,n=3,i=2"] = {{"dim_F_i", 2}, {"dim_centralizer", 16}, {"index", 4}};
  settle(rec);
}

void restriction(CheckRecord& rec, const VerifyOptions&) {
  rec.inputs = json::array({{4, 2, 2, 2}, {8, 2, 4, 4}, {6, 6, 3, 1}});
  rec.expected = json::array({true, true, true});
  rec.computed = json::array();
  for (const auto& in : rec.inputs)
    rec.computed.push_back(restriction_consistency(in[0], in[1], in[2], in[3]).consistent);
  settle(rec);
}

// ---- galois modules ----

void decompose_examples(CheckRecord& rec, const VerifyOptions&) {
  rec.inputs = {{"modules", {"{3} + {4}, p=2, n=2", "identity on F_2^3, p=2, n=2", "{3,3}, p=2, n=2"}}};
  rec.expected = {{"m", {1, "undetermined", "not realizable"}}};
  json m = json::array();
  FpMatrix j3 = jordan_block(2, 3), j4 = jordan_block(2, 4);
  m.push_back(mvalue_to_json(m_from_shape(classify_theorem1(jordan_profile(GModule(2, 2, block_diagonal(2, std::vector<FpMatrix>{j3, j4}))), 2, 2))));
  m.push_back(mvalue_to_json(m_from_shape(classify_theorem1(jordan_profile(GModule(2, 2, FpMatrix::identity(2, 3))), 2, 2))));
  try {
    classify_theorem1(jordan_profile(GModule(2, 2, block_diagonal(2, std::vector<FpMatrix>{j3, j3}))), 2, 2);
    m.push_back("realizable");
  } catch (const Error& e) {
    m.push_back(e.kind() == ErrorKind::NotRealizable ? "not realizable" : e.what());
  }
  rec.computed = {{"m", m}};
  settle(rec);
}

void round_trip(CheckRecord& rec, const VerifyOptions&) {
  rec.inputs = {{"p", {2, 3}}, {"n", "1..3"}, {"free_ranks", "each 0..2"}, {"exceptional", "none or m = 0..n-1"}};
  rec.expected = {{"failures", 0}};
  std::size_t shapes = 0, failures = 0;
  for (Residue p : {2u, 3u})
    for (unsigned n = 1; n <= 3; ++n) {
      std::vector<std::size_t> ranks(n + 1, 0);
      while (true) {
        for (int m = -1; m < static_cast<int>(n); ++m) {
          Theorem1Shape s = make_shape(ranks);
          if (m >= 0) s.exceptional = ExceptionalSummand{unsigned(m), *nt::checked_pow(p, unsigned(m)) + 1};
          std::size_t total = 0;
          for (auto y : ranks) total += y;
          if (total == 0 && !s.exceptional) continue;
          ++shapes;
          if (classify_theorem1(jordan_profile(synthesize(s, p, n)), p, n) != canonical_shape(s, p, n)) ++failures;
        }
        std::size_t i = 0;
        while (i <= n && ranks[i] == 2) ranks[i++] = 0;
        if (i > n) break;
        ++ranks[i];
      }
    }
  rec.inputs["shapes"] = shapes;
  rec.computed = {{"failures", failures}};
  settle(rec);
}

void similarity(CheckRecord& rec, const VerifyOptions& opt) {
  rec.inputs = {{"conjugations", 200}, {"seed", opt.seed}};
  rec.expected = {{"failures", 0}};
  std::size_t failures = 0;
  for (std::uint64_t k = 0; k < 200; ++k) {
    const Residue p = k % 2 ? 3 : 2;
    const unsigned n = 1 + static_cast<unsigned>(k % 3);
    const std::size_t dim = 1 + k % 12;
    const RandomModule rm = random_gmodule_with_blocks(p, n, dim, opt.seed * 1000 + k);
    if (jordan_profile(rm.module) != make_profile(rm.block_sizes)) ++failures;
  }
  rec.computed = {{"failures", failures}};
  settle(rec);
}

// ---- m invariant ----

void biquadratic17(CheckRecord& rec, const VerifyOptions& opt) {
  rec.inputs = {{"a", 17}, {"d", -1}, {"precision", opt.precision}};
  rec.expected = {{"m", 1}};
  if (opt.precision < 8) {
    rec.verdict = Verdict::Skipped;
    rec.reason = "2-adic precision below 8 digits";
    return;
  }
  const MResult r = compute_m(tower::Biquadratic{17, -1}, opt.precision);
  rec.computed = {{"m", mvalue_to_json(r.m)}};
  settle(rec);
  rec.computed["evidence"] = r.evidence;
}

void brauer_rowen_230(CheckRecord& rec, const VerifyOptions&) {
  rec.inputs = {{"p", 2}, {"n", 3}, {"t", 0}};
  rec.expected = {{"m", 0}};
  rec.computed = {{"m", mvalue_to_json(compute_m(tower::BrauerRowen{2, 3, MValue::finite(0)}).m)}};
  settle(rec);
}

void dirichlet(CheckRecord& rec, std::uint64_t p, unsigned n, std::uint64_t q_expected) {
  rec.inputs = {{"p", p}, {"n", n}, {"limit", 100}};
  rec.expected = {{"q", q_expected}, {"residue_norm", false}, {"m", 0}};
  const std::uint64_t q = find_dirichlet_prime(p, n, 100);
  rec.computed = {{"q", q},
                  {"residue_norm", residue_norm_test(p, n, q)},
                  {"m", mvalue_to_json(compute_m(tower::LocalCyclotomic{p, n, q}).m)}};
  settle(rec);
}

void kummer(CheckRecord& rec, const VerifyOptions&) {
  rec.inputs = {{"(p,n)", {{2, 1}, {2, 2}, {3, 1}, {3, 2}}}, {"l", 7}};
  rec.expected = {{"m", {"-inf", "-inf", "-inf", "-inf"}}};
  json m = json::array();
  for (auto [p, n] : {std::pair<std::uint64_t, unsigned>{2, 1}, {2, 2}, {3, 1}, {3, 2}})
    m.push_back(mvalue_to_json(compute_m(tower::LocalKummer{p, n, 7}).m));
  rec.computed = {{"m", m}};
  settle(rec);
}

void realization_sweep(CheckRecord& rec, const VerifyOptions&) {
  rec.inputs = {{"p", {2, 3}}, {"n", "1..4"}, {"t", "-inf, 0..n-1"}};
  rec.expected = {{"missing", json::array()}};
  json missing = json::array();
  for (std::uint64_t p : {2u, 3u})
    for (unsigned n = 1; n <= 4; ++n) {
      std::set<std::string> seen;
      for (int t = -1; t < static_cast<int>(n); ++t) {
        const MValue tv = t < 0 ? MValue::neg_infinity() : MValue::finite(t);
        seen.insert(compute_m(tower::BrauerRowen{p, n, tv}).m.to_string());
        if (t >= 0) {
          const std::uint64_t l = find_dirichlet_prime(p, n - t, 10'000'000);
          seen.insert(compute_m(tower::FunctionField{p, n, RootOfUnityContent::finite_field(l)}).m.to_string());
        }
      }
      for (int t = -1; t < static_cast<int>(n); ++t) {
        const std::string want = t < 0 ? "-inf" : std::to_string(t);
        if (!seen.count(want)) missing.push_back({{"p", p}, {"n", n}, {"t", want}});
      }
    }
  rec.computed = {{"missing", missing}};
  settle(rec);
}

void n1_fixture(CheckRecord& rec, const VerifyOptions&) {
  rec.inputs = {{"p", {2, 3, 5}}, {"n", 1}};
  rec.expected = {{"recorded", {0, 0, 0}}, {"function_field", {0, 0, 0}}};
  json recorded = json::array(), ff = json::array();
  for (std::uint64_t p : {2u, 3u, 5u}) {
    recorded.push_back(mvalue_to_json(rational_function_field_fixture(p).m));
    ff.push_back(mvalue_to_json(compute_m(tower::FunctionField{p, 1, RootOfUnityContent::cyclotomic(p)}).m));
  }
  rec.computed = {{"recorded", recorded}, {"function_field", ff}};
  settle(rec);
}

void index_bound(CheckRecord& rec, const VerifyOptions&) {
  rec.inputs = json::array({{"-inf", 1, 2}, {"1", 4, 2}, {"0", 4, 2}});
  rec.expected = json::array({true, true, false});
  rec.computed = json::array();
  for (const auto& in : rec.inputs)
    rec.computed.push_back(index_bound_check(MValue::parse(in[0].get<std::string>()), in[1], in[2]));
  settle(rec);
}

// ---- p-adic ----

void hilbert_minus_one(CheckRecord& rec, const VerifyOptions&) {
  rec.inputs = {{"a", -1}, {"b", -1}, {"places", {"inf", "2", "3"}}};
  rec.expected = {{"symbols", {-1, -1, 1}}};
  rec.computed = {{"symbols",
                   {hilbert_symbol(mpq_class(-1), mpq_class(-1), Place::infinite()),
                    hilbert_symbol(mpq_class(-1), mpq_class(-1), Place::at(2)),
                    hilbert_symbol(mpq_class(-1), mpq_class(-1), Place::at(3))}}};
  settle(rec);
}

void hilbert_properties(CheckRecord& rec, const VerifyOptions& opt) {
  rec.inputs = {{"pairs", 1000}, {"seed", opt.seed}, {"places", {"inf", 2, 3, 5, 7, 11, 13}}};
  rec.expected = {{"bilinearity", 0}, {"symmetry", 0}, {"a_minus_a", 0}, {"product_formula", 0}};
  std::mt19937_64 rng(opt.seed + 7);
  std::size_t bilinear = 0, symmetric = 0, minus = 0, product = 0;
  const Place places[] = {Place::infinite(), Place::at(2), Place::at(3), Place::at(5),
                          Place::at(7),      Place::at(11), Place::at(13)};
  for (int i = 0; i < 1000; ++i) {
    mpq_class a = random_rational(rng), b = random_rational(rng), c = random_rational(rng);
    for (const Place& v : places) {
      const int ab = hilbert_symbol(a, b, v);
      if (hilbert_symbol(mpq_class(a * c), b, v) != ab * hilbert_symbol(c, b, v)) ++bilinear;
      if (hilbert_symbol(b, a, v) != ab) ++symmetric;
      if (hilbert_symbol(a, mpq_class(-a), v) != 1) ++minus;
    }
    int prod = 1;
    for (const auto& s : quaternion_splits_q(a, b).symbols) prod *= s.symbol;
    if (prod != 1) ++product;
  }
  rec.computed = {{"bilinearity", bilinear}, {"symmetry", symmetric}, {"a_minus_a", minus}, {"product_formula", product}};
  settle(rec);
}

// ---- ufd norm ----

void unit_norms(CheckRecord& rec, std::uint64_t l, unsigned n, unsigned deg) {
  rec.inputs = {{"l", l}, {"n", n}, {"deg", deg}};
  const PropositionReport r = proposition_check(l, n, deg);
  rec.expected = {{"unit_norms", set_to_json(r.nth_powers)}};
  rec.computed = {{"unit_norms", set_to_json(r.unit_norms)}};
  settle(rec);
  rec.computed["polynomials"] = r.polynomials;
}

void cyclotomic_base_q8(CheckRecord& rec, const VerifyOptions&) {
  rec.inputs = {{"base", "Q(xi_8)"}, {"p", 2}, {"n", 3}};
  const Theorem3Result r = theorem3_m(RootOfUnityContent::cyclotomic(8), 2, 3);
  rec.expected = {{"m", 0}, {"s", 3}};
  rec.computed = {{"m", mvalue_to_json(r.m)}, {"s", r.s}};
  settle(rec);
  rec.computed["norm_levels"] = r.norm_levels;
}

const std::vector<Check>& registry() {
  static const std::vector<Check> checks = [] {
    std::vector<Check> c{
        {"cohomology.bruteforce-agreement", "cohomologous iff equal invariants, by exhaustive coboundary search",
         bruteforce_agreement},
        {"cohomology.cocycle-suite", "carrying and scaled cocycles agree in H^2 and give isomorphic extensions",
         cocycle_suite},
        {"cohomology.witness-4-2-2", "explicit coboundary between the two cocycles for a=4, b=2, r=2", witness_422},
        {"cyclic-algebra.associativity", "crossed product multiplication is associative", associativity},
        {"cyclic-algebra.exp-identity", "N(b) = b^r for b in the base field", exp_identity},
        {"cyclic-algebra.index-ladder", "ind A_i = p^{n-i+1} and double centralizer dimensions", index_ladder_check},
        {"cyclic-algebra.norm-f9", "norm preimage of 2 in F_9/F_3 is a generator", norm_f9},
        {"cyclic-algebra.restriction-consistency", "restricted class equals the scaled inflated class", restriction},
        {"cyclic-algebra.split-certificates", "b a norm gives an explicit zero divisor", split_certificates},
        {"galois-module.decompose-examples", "m read off the exceptional summand", decompose_examples},
        {"galois-module.round-trip", "synthesize then classify returns the shape", round_trip},
        {"galois-module.similarity", "Jordan profile of random conjugated modules", similarity},
        {"m-invariant.biquadratic-17", "a = 17, d = -1 gives m = 1", biquadratic17},
        {"m-invariant.brauer-rowen-2-3-0", "base containing xi_8 but not xi_16 gives m = 0", brauer_rowen_230},
        {"m-invariant.dirichlet-2-2", "q = 1 + p^n mod p^{n+1} gives m = 0",
         [](CheckRecord& r, const VerifyOptions&) { dirichlet(r, 2, 2, 5); }},
        {"m-invariant.dirichlet-3-1", "q = 1 + p^n mod p^{n+1} gives m = 0",
         [](CheckRecord& r, const VerifyOptions&) { dirichlet(r, 3, 1, 13); }},
        {"m-invariant.index-bound", "ind A <= p^{m+1}", index_bound},
        {"m-invariant.kummer", "N(xi_{p^{n+1}}) = xi_p gives m = -inf", kummer},
        {"m-invariant.n1-fixture", "n = 1 over Q(xi_p)(X) has m = 0", n1_fixture},
        {"m-invariant.realization-sweep", "every t in {-inf, 0..n-1} occurs as m", realization_sweep},
        {"padic.hilbert-minus-one", "(-1,-1) ramifies exactly at 2 and infinity", hilbert_minus_one},
        {"padic.hilbert-properties", "bilinearity, symmetry, (a,-a) = 1, product formula", hilbert_properties},
        {"ufd-norm.unit-norms-l3-n2", "unit norms are the n-th powers",
         [](CheckRecord& r, const VerifyOptions&) { unit_norms(r, 3, 2, 2); }},
        {"ufd-norm.unit-norms-l3-n3", "unit norms are the n-th powers",
         [](CheckRecord& r, const VerifyOptions&) { unit_norms(r, 3, 3, 1); }},
        {"ufd-norm.unit-norms-l5-n2", "unit norms are the n-th powers",
         [](CheckRecord& r, const VerifyOptions&) { unit_norms(r, 5, 2, 1); }},
        {"ufd-norm.cyclotomic-base-q8", "xi_8 in the base, xi_16 not, gives m = 0 for n = 3", cyclotomic_base_q8},
    };
    std::sort(c.begin(), c.end(), [](const Check& x, const Check& y) { return x.id < y.id; });
    return c;
  }();
  return checks;
}

}  // namespace

std::string to_string(Verdict v) {
  switch (v) {
    case Verdict::Pass: return "pass";
    case Verdict::Fail: return "fail";
    case Verdict::Skipped: return "skipped";
  }
  return "fail";
}

std::size_t Report::count(Verdict v) const {
  return static_cast<std::size_t>(std::count_if(checks.begin(), checks.end(), [v](const auto& c) { return c.verdict == v; }));
}

json Report::to_json() const {
  json list = json::array();
  for (const auto& c : checks) {
    json entry = {{"id", c.id},
                  {"reference", c.reference},
                  {"inputs", c.inputs},
                  {"expected", c.expected},
                  {"computed", c.computed},
                  {"verdict", to_string(c.verdict)}};
    if (!c.reason.empty()) entry["reason"] = c.reason;
    list.push_back(std::move(entry));
  }
  return {{"checks", std::move(list)},
          {"summary",
           {{"total", checks.size()},
            {"pass", count(Verdict::Pass)},
            {"fail", count(Verdict::Fail)},
            {"skipped", count(Verdict::Skipped)}}}};
}

std::string Report::to_text() const {
  std::size_t width = 2;
  for (const auto& c : checks) width = std::max(width, c.id.size());
  std::ostringstream out;
  out << std::left << std::setw(static_cast<int>(width)) << "id" << "  " << std::setw(8) << "verdict" << "  reference\n";
  for (const auto& c : checks) {
    out << std::setw(static_cast<int>(width)) << c.id << "  " << std::setw(8) << to_string(c.verdict) << "  " << c.reference
        << '\n';
    if (c.verdict != Verdict::Pass) {
      out << std::string(width + 2, ' ') << "expected " << c.expected.dump() << '\n';
      out << std::string(width + 2, ' ') << "computed " << c.computed.dump() << '\n';
      if (!c.reason.empty()) out << std::string(width + 2, ' ') << c.reason << '\n';
    }
  }
  out << checks.size() << " checks: " << count(Verdict::Pass) << " pass, " << count(Verdict::Fail) << " fail, "
      << count(Verdict::Skipped) << " skipped\n";
  return out.str();
}

std::vector<std::string> verification_ids() {
  std::vector<std::string> ids;
  for (const auto& c : registry()) ids.push_back(c.id);
  return ids;
}

Report verify_paper(const VerifyOptions& options) {
  Report report;
  for (const auto& check : registry()) {
    if (check.id.rfind(options.only, 0) != 0) continue;
    CheckRecord rec;
    rec.id = check.id;
    rec.reference = check.reference;
    try {
      check.run(rec, options);
    } catch (const std::exception& e) {
      rec.verdict = Verdict::Fail;
      rec.reason = e.what();
    }
    report.checks.push_back(std::move(rec));
  }
  return report;
}

}  // namespace cyclo
