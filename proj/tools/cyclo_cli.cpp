#include <cstdint>
#include <iomanip>
#include <iostream>
#include <numeric>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <gmpxx.h>
#include <json.hpp>

#include "cyclo/cohomology.hpp"
#include "cyclo/cyclic_algebra.hpp"
#include "cyclo/error.hpp"
#include "cyclo/galois_module.hpp"
#include "cyclo/json_io.hpp"
#include "cyclo/m_invariant.hpp"
#include "cyclo/numtheory.hpp"
#include "cyclo/padic.hpp"
#include "cyclo/ufd_norm.hpp"
#include "cyclo/verify.hpp"

using namespace cyclo;
using nlohmann::json;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitUsage = 1;
constexpr int kExitVerdict = 2;
constexpr int kExitInternal = 3;

struct Globals {
  std::string format = "text";
  unsigned precision = kDefaultTowerPrecision;
  std::uint64_t seed = 1;
  std::string only;

  bool json() const { return format == "json"; }
};

int exit_code_for(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::NotRealizable:
    case ErrorKind::Mismatch:
    case ErrorKind::TowerMismatch:
    case ErrorKind::NotFoundBelowLimit:
    case ErrorKind::MissingRootOfUnity:
    case ErrorKind::InsufficientPrecision:
    case ErrorKind::PrecisionExhausted:
      return kExitVerdict;
    case ErrorKind::InternalInvariant:
    case ErrorKind::VerificationFailed:
    case ErrorKind::ReciprocityViolation:
    case ErrorKind::DegenerateWitness:
      return kExitInternal;
    default:
      return kExitUsage;
  }
}

std::string join(const std::vector<std::size_t>& v, const char* sep = ", ") {
  std::ostringstream out;
  for (std::size_t i = 0; i < v.size(); ++i) out << (i ? sep : "") << v[i];
  return out.str();
}

mpq_class parse_rational(const std::string& text) {
  mpq_class q;
  try {
    q = mpq_class(text, 10);
  } catch (const std::invalid_argument&) {
    throw Error(ErrorKind::InvalidArgument, "not a rational number: " + text);
  }
  if (q.get_den() == 0) throw Error(ErrorKind::InvalidArgument, "zero denominator in " + text);
  q.canonicalize();
  return q;
}

void emit(const Globals& g, const json& j, const std::string& text) {
  if (g.json())
    std::cout << j.dump(2) << '\n';
  else
    std::cout << text;
}

// ---- decompose ----

int cmd_decompose(const Globals& g, const std::string& file) {
  const GModule module = module_from_json(read_json_file(file));
  const JordanProfile profile = jordan_profile(module);
  json out = {{"p", module.p()}, {"n", module.n()}, {"dim", module.dim()}, {"profile", profile.sizes}};
  std::ostringstream text;
  text << "module   p = " << module.p() << ", n = " << module.n() << ", dim = " << module.dim() << '\n';
  text << "profile  {" << join(profile.sizes) << "}\n";
  Theorem1Shape shape;
  try {
    shape = classify_theorem1(profile, module.p(), module.n());
  } catch (const Error& e) {
    if (e.kind() != ErrorKind::NotRealizable) throw;
    out["error"] = e.what();
    text << "shape    not realizable: " << e.what() << '\n';
    emit(g, out, text.str());
    return kExitVerdict;
  }
  const MValue m = m_from_shape(shape);
  out["shape"] = shape_to_json(shape);
  out["m"] = mvalue_to_json(m);
  text << "shape    " << shape.to_string() << '\n';
  text << "m        " << m.to_string() << '\n';
  emit(g, out, text.str());
  return kExitOk;
}

// ---- synthesize ----

struct SynthesizeArgs {
  std::uint64_t p = 0;
  unsigned n = 0;
  std::vector<std::size_t> free;
  int exceptional = -1;
  bool conjugate = false;
};

int cmd_synthesize(const Globals& g, const SynthesizeArgs& a) {
  if (a.p > UINT32_MAX) throw Error(ErrorKind::InvalidArgument, "p too large");
  const auto p = static_cast<Residue>(a.p);
  Theorem1Shape shape;
  shape.free_ranks = a.free;
  if (a.exceptional >= 0) {
    const auto dim = nt::checked_pow(a.p, static_cast<unsigned>(a.exceptional));
    if (!dim) throw Error(ErrorKind::InvalidArgument, "exceptional summand too large");
    shape.exceptional = ExceptionalSummand{static_cast<unsigned>(a.exceptional), static_cast<std::size_t>(*dim + 1)};
  }
  GModule module = synthesize(shape, p, a.n);
  if (a.conjugate) module = conjugate(module, random_invertible(p, module.dim(), g.seed));
  const json out = module_to_json(module);
  emit(g, out, out.dump() + "\n");
  return kExitOk;
}

// ---- m-compute ----

int cmd_m_compute(const Globals& g, const std::string& spec_file, const std::string& module_file) {
  const TowerSpec spec = tower_from_json(read_json_file(spec_file));
  const MResult r = compute_m(spec, g.precision);
  json out = {{"variant", tower_name(spec)}, {"m", mvalue_to_json(r.m)}, {"evidence", r.evidence}};
  std::ostringstream text;
  text << "m = " << r.m.to_string() << '\n';
  for (const auto& line : r.evidence) text << "  " << line << '\n';
  int code = kExitOk;
  if (!module_file.empty()) {
    const GModule module = module_from_json(read_json_file(module_file));
    try {
      const ProfileVerdict v = cross_check_profile(spec, module);
      out["module"] = {{"shape", shape_to_json(v.shape)}, {"m", mvalue_to_json(v.from_module)}, {"agrees", true}};
      text << "module m = " << v.from_module.to_string() << " (shape " << v.shape.to_string() << "): agrees\n";
    } catch (const Error& e) {
      if (e.kind() != ErrorKind::Mismatch && e.kind() != ErrorKind::TowerMismatch) throw;
      out["module"] = {{"agrees", false}, {"error", e.what()}};
      text << "module: " << e.what() << '\n';
      code = kExitVerdict;
    }
  }
  emit(g, out, text.str());
  return code;
}

// ---- find-prime ----

int cmd_find_prime(const Globals& g, std::uint64_t p, unsigned n, std::uint64_t limit) {
  const std::uint64_t q = find_dirichlet_prime(p, n, limit);
  const ResidueNormResult r = residue_norm_details(p, n, q);
  const MValue m = compute_m(tower::LocalCyclotomic{p, n, q}).m;
  const json out = {{"p", p},
                    {"n", n},
                    {"q", q},
                    {"xi_p_is_norm", r.in_norm_group},
                    {"exhaustive", r.exhaustive},
                    {"m", mvalue_to_json(m)}};
  emit(g, out, std::to_string(q) + "\n");
  return kExitOk;
}

// ---- hilbert ----

int cmd_hilbert(const Globals& g, const std::string& a_text, const std::string& b_text, const std::string& place) {
  const mpq_class a = parse_rational(a_text), b = parse_rational(b_text);
  if (place != "all") {
    Place v = Place::infinite();
    if (place != "inf") {
      std::uint64_t prime = 0;
      try {
        std::size_t used = 0;
        prime = std::stoull(place, &used);
        if (used != place.size()) throw std::invalid_argument(place);
      } catch (const std::exception&) {
        throw Error(ErrorKind::InvalidArgument, "place must be a prime, inf or all: " + place);
      }
      if (!nt::is_prime(prime)) throw Error(ErrorKind::NotPrime, "place " + place);
      v = Place::at(prime);
    }
    const int s = hilbert_symbol(LocalValue{a}, LocalValue{b}, v);
    emit(g, json{{"a", a.get_str()}, {"b", b.get_str()}, {"place", v.to_string()}, {"symbol", s}},
         std::to_string(s) + "\n");
    return kExitOk;
  }
  const QuaternionReport report = quaternion_splits_q(a, b);
  json symbols = json::array();
  std::ostringstream text;
  text << "place  symbol\n";
  int product = 1;
  for (const auto& ps : report.symbols) {
    symbols.push_back({{"place", ps.place.to_string()}, {"symbol", ps.symbol}});
    text << std::left << std::setw(5) << ps.place.to_string() << "  " << std::right << std::setw(6) << ps.symbol << '\n';
    product *= ps.symbol;
  }
  text << "product " << product << ", algebra (" << a.get_str() << ", " << b.get_str() << ") "
       << (report.splits ? "splits" : "is a division algebra") << '\n';
  json ramified = json::array();
  for (const auto& v : report.ramified()) ramified.push_back(v.to_string());
  emit(g,
       json{{"a", a.get_str()},
            {"b", b.get_str()},
            {"symbols", symbols},
            {"product", product},
            {"splits", report.splits},
            {"ramified", ramified}},
       text.str());
  return kExitOk;
}

// ---- cocycle-check ----

std::string table_text(const Cocycle2& c) {
  std::ostringstream out;
  const std::uint32_t a = c.group_order();
  for (std::uint32_t i = 0; i < a; ++i) {
    out << "   ";
    for (std::uint32_t j = 0; j < a; ++j) out << ' ' << c(i, j);
    out << '\n';
  }
  return out.str();
}

json table_json(const Cocycle2& c) {
  json rows = json::array();
  const std::uint32_t a = c.group_order();
  for (std::uint32_t i = 0; i < a; ++i) {
    json row = json::array();
    for (std::uint32_t j = 0; j < a; ++j) row.push_back(c(i, j));
    rows.push_back(row);
  }
  return rows;
}

int cmd_cocycle_check(const Globals& g, std::uint32_t a, std::uint32_t b, std::uint32_t r) {
  if (a == 0 || b == 0 || r == 0) throw Error(ErrorKind::InvalidArgument, "a, b and r must be positive");
  const Cocycle2 psi = psi_cocycle(a, b, r), phi = phi_cocycle(a, b, r);
  const bool psi_ok = is_cocycle(psi), phi_ok = is_cocycle(phi);
  if (!psi_ok || !phi_ok) throw Error(ErrorKind::InternalInvariant, "carrying construction is not a cocycle");
  const std::uint32_t inv_psi = h2_invariant(psi), inv_phi = h2_invariant(phi);
  const GammaVerification gamma = gamma_isomorphism(a, b, r);
  const bool consistent = inv_psi == inv_phi && gamma.ok();

  std::ostringstream text;
  text << "a = " << a << ", b = " << b << ", r = " << r << ", q = " << a / b << '\n';
  text << "Psi (carry mod b):\n" << table_text(psi);
  text << "Phi (q * carry mod a):\n" << table_text(phi);
  text << "invariants  Psi " << inv_psi << ", Phi " << inv_phi << " in Z/" << std::gcd(a, r) << '\n';
  text << "gamma       " << (gamma.ok() ? "isomorphism" : "not an isomorphism") << " (" << gamma.pairs_checked
       << " pairs checked)\n";
  text << "verdict     " << (consistent ? "consistent" : "inconsistent") << '\n';
  const json out = {{"a", a},
                    {"b", b},
                    {"r", r},
                    {"psi", table_json(psi)},
                    {"phi", table_json(phi)},
                    {"inv_psi", inv_psi},
                    {"inv_phi", inv_phi},
                    {"gamma",
                     {{"pairs_checked", gamma.pairs_checked},
                      {"homomorphism", gamma.homomorphism},
                      {"bijective", gamma.bijective},
                      {"fixes_kernel", gamma.fixes_kernel},
                      {"identity_on_quotient", gamma.identity_on_quotient}}},
                    {"consistent", consistent}};
  emit(g, out, text.str());
  return consistent ? kExitOk : kExitInternal;
}

// ---- algebra ----

struct AlgebraArgs {
  std::uint64_t l = 0;
  unsigned d = 1, r = 2;
  std::uint64_t b = 1;
  std::string action;
};

int algebra_ladder(const Globals& g, unsigned r) {
  const auto factors = nt::factorize(r);
  if (factors.size() != 1) throw Error(ErrorKind::InvalidArgument, "ladder needs r to be a prime power");
  const std::uint64_t p = factors[0].first;
  const auto n = static_cast<unsigned>(factors[0].second);
  json rows = json::array();
  std::ostringstream text;
  text << "p = " << p << ", n = " << n << '\n';
  text << "  i  [F_i:F]  dim_F C  dim_Fi C  ind A_i  m  ok\n";
  bool all = true;
  for (const auto& row : index_ladder(p, n)) {
    all = all && row.consistent;
    rows.push_back({{"i", row.i},
                    {"dim_field", row.dim_field},
                    {"dim_centralizer_F", row.dim_centralizer_F},
                    {"dim_centralizer", row.dim_centralizer},
                    {"index", row.index},
                    {"m", mvalue_to_json(row.m)},
                    {"consistent", row.consistent}});
    text << std::setw(3) << row.i << std::setw(9) << row.dim_field << std::setw(9) << row.dim_centralizer_F
         << std::setw(10) << row.dim_centralizer << std::setw(9) << row.index << std::setw(3) << row.m.to_string()
         << (row.consistent ? "  yes" : "  no") << '\n';
  }
  emit(g, json{{"p", p}, {"n", n}, {"rows", rows}}, text.str());
  return all ? kExitOk : kExitInternal;
}

int cmd_algebra(const Globals& g, const AlgebraArgs& a) {
  if (a.action == "ladder") return algebra_ladder(g, a.r);
  if (a.l > UINT32_MAX) throw Error(ErrorKind::InvalidArgument, "l too large");
  const FiniteFieldTower tower(static_cast<std::uint32_t>(a.l), a.d, a.r);
  if (a.b == 0 || a.b >= tower.base_order())
    throw Error(ErrorKind::InvalidArgument, "b must be a nonzero base-field code below " + std::to_string(tower.base_order()));
  const auto b = tower.base_from_code(a.b);
  const auto algebra = CyclicAlgebra::create(tower, b);
  const FiniteField& L = tower.field();
  json out = {{"tower", tower.to_string()}, {"b", L.to_string(b)}, {"action", a.action}};
  std::ostringstream text;
  text << "algebra (" << tower.to_string() << ", b = " << L.to_string(b) << ")\n";

  if (a.action == "mul") {
    std::mt19937_64 rng(g.seed);
    const auto x = algebra->random_element(rng), y = algebra->random_element(rng), z = algebra->random_element(rng);
    const auto xy = ca_mul(x, y);
    const bool assoc = ca_equal(ca_mul(xy, z), ca_mul(x, ca_mul(y, z)));
    const bool ur = ca_equal(ca_pow(algebra->u(), a.r), algebra->scalar(b));
    out["x"] = ca_to_string(x);
    out["y"] = ca_to_string(y);
    out["xy"] = ca_to_string(xy);
    out["associative"] = assoc;
    out["u_pow_r_is_b"] = ur;
    text << "x      = " << ca_to_string(x) << '\n';
    text << "y      = " << ca_to_string(y) << '\n';
    text << "x y    = " << ca_to_string(xy) << '\n';
    text << "(xy)z = x(yz): " << (assoc ? "yes" : "no") << ", u^r = b: " << (ur ? "yes" : "no") << '\n';
    emit(g, out, text.str());
    return assoc && ur ? kExitOk : kExitInternal;
  }
  if (a.action == "split") {
    const SplitCertificate cert = split_certificate(algebra);
    out["w"] = L.to_string(cert.w);
    out["v"] = ca_to_string(cert.v);
    out["z"] = ca_to_string(cert.z);
    out["z_rank"] = cert.z_rank;
    out["dimension"] = cert.dimension;
    out["retries"] = cert.retries;
    text << "w with N(w) = b: " << L.to_string(cert.w) << '\n';
    text << "v = u w^-1:      " << ca_to_string(cert.v) << '\n';
    text << "zero divisor z:  " << ca_to_string(cert.z) << '\n';
    text << "rank of z:       " << cert.z_rank << " of " << cert.dimension << '\n';
    emit(g, out, text.str());
    return kExitOk;
  }
  throw Error(ErrorKind::InvalidArgument, "unknown algebra action " + a.action);
}

// ---- ufd-check ----

std::string set_text(const std::set<std::uint64_t>& s) {
  std::ostringstream out;
  out << '{';
  bool first = true;
  for (auto x : s) {
    out << (first ? "" : ", ") << x;
    first = false;
  }
  out << '}';
  return out.str();
}

int cmd_ufd_check(const Globals& g, std::uint64_t l, unsigned n, unsigned deg) {
  const PropositionReport r = proposition_check(l, n, deg);
  json witnesses = json::object();
  for (const auto& [c, w] : r.witnesses) witnesses[std::to_string(c)] = w;
  const json out = {{"l", l},
                    {"n", n},
                    {"deg", deg},
                    {"polynomials", r.polynomials},
                    {"unit_norms", r.unit_norms},
                    {"nth_powers", r.nth_powers},
                    {"witnesses", witnesses},
                    {"holds", r.holds()}};
  std::ostringstream text;
  text << "F_" << l << "[mu_1.." << "mu_" << n << "], degree <= " << deg << ", " << r.polynomials << " polynomials\n";
  text << "unit norms   " << set_text(r.unit_norms) << '\n';
  text << "n-th powers  " << set_text(r.nth_powers) << '\n';
  for (const auto& [c, w] : r.witnesses) text << "  " << c << " = N(" << w << ")\n";
  text << (r.holds() ? "equal" : "different") << '\n';
  emit(g, out, text.str());
  return r.holds() ? kExitOk : kExitVerdict;
}

// ---- verify-paper ----

int cmd_verify(const Globals& g) {
  VerifyOptions opts;
  opts.only = g.only;
  opts.seed = g.seed;
  opts.precision = g.precision;
  const Report report = verify_paper(opts);
  emit(g, report.to_json(), report.to_text());
  return report.ok() ? kExitOk : kExitVerdict;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact computations for cyclic p-power towers, their norm invariant and cyclic algebras", "cyclo"};
  app.require_subcommand(1);
  app.fallthrough();
  Globals g;
  app.add_option("--format", g.format, "Output format")->check(CLI::IsMember({"text", "json"}));
  app.add_option("--precision", g.precision, "2-adic digits for local computations")->check(CLI::Range(4u, 4096u));
  app.add_option("--seed", g.seed, "Seed for randomized steps");
  app.add_option("--only", g.only, "Run only checks whose id starts with this prefix");

  std::string module_file;
  auto* decompose = app.add_subcommand("decompose", "Jordan profile, shape and m of a module file");
  decompose->add_option("file", module_file, "Module JSON")->required();

  SynthesizeArgs syn;
  auto* synth = app.add_subcommand("synthesize", "Module file for a decomposition shape");
  synth->add_option("--p", syn.p)->required();
  synth->add_option("--n", syn.n)->required();
  synth->add_option("--free", syn.free, "Free ranks y_0,...,y_n")->delimiter(',')->required();
  synth->add_option("--exceptional", syn.exceptional, "m of the exceptional summand");
  synth->add_flag("--conjugate", syn.conjugate, "Conjugate by a random invertible matrix (uses --seed)");

  std::string spec_file, spec_module;
  auto* mcompute = app.add_subcommand("m-compute", "Norm invariant of a tower spec");
  mcompute->add_option("--spec", spec_file, "Tower spec JSON")->required();
  mcompute->add_option("--module", spec_module, "Module JSON to cross-check against");

  std::uint64_t fp_p = 0, fp_limit = 10'000'000;
  unsigned fp_n = 0;
  auto* findprime = app.add_subcommand("find-prime", "Least prime q = 1 + p^n mod p^(n+1)");
  findprime->add_option("--p", fp_p)->required();
  findprime->add_option("--n", fp_n)->required();
  findprime->add_option("--limit", fp_limit, "Search bound");

  std::string ha, hb, hplace = "all";
  auto* hilbert = app.add_subcommand("hilbert", "Hilbert symbol (a, b) at a place, or at all places");
  hilbert->add_option("--a", ha)->required();
  hilbert->add_option("--b", hb)->required();
  hilbert->add_option("--place", hplace, "Prime, inf or all");

  std::uint32_t ca = 0, cb = 0, cr = 0;
  auto* cocycle = app.add_subcommand("cocycle-check", "Carrying cocycles, invariants and the extension isomorphism");
  cocycle->add_option("--a", ca)->required();
  cocycle->add_option("--b", cb)->required();
  cocycle->add_option("--r", cr)->required();

  AlgebraArgs alg;
  auto* algebra = app.add_subcommand("algebra", "Cyclic algebra over a finite field tower");
  algebra->add_option("--l", alg.l, "Characteristic");
  algebra->add_option("--d", alg.d, "Degree of E over F_l");
  algebra->add_option("--r", alg.r, "Degree of L over E")->required();
  algebra->add_option("--b", alg.b, "Element of E^x by code");
  algebra->add_option("action", alg.action)->required()->check(CLI::IsMember({"mul", "split", "ladder"}));

  std::uint64_t ul = 0;
  unsigned un = 0, udeg = 0;
  auto* ufd = app.add_subcommand("ufd-check", "Unit norms in F_l[mu_1..mu_n] against n-th powers");
  ufd->add_option("--l", ul)->required();
  ufd->add_option("--n", un)->required();
  ufd->add_option("--deg", udeg)->required();

  auto* verify = app.add_subcommand("verify-paper", "Reproduce the worked examples and property sweeps");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  try {
    if (*decompose) return cmd_decompose(g, module_file);
    if (*synth) return cmd_synthesize(g, syn);
    if (*mcompute) return cmd_m_compute(g, spec_file, spec_module);
    if (*findprime) return cmd_find_prime(g, fp_p, fp_n, fp_limit);
    if (*hilbert) return cmd_hilbert(g, ha, hb, hplace);
    if (*cocycle) return cmd_cocycle_check(g, ca, cb, cr);
    if (*algebra) {
      if (alg.action != "ladder" && alg.l == 0) throw Error(ErrorKind::InvalidArgument, "--l is required for " + alg.action);
      return cmd_algebra(g, alg);
    }
    if (*ufd) return cmd_ufd_check(g, ul, un, udeg);
    if (*verify) return cmd_verify(g);
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return exit_code_for(e.kind());
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << '\n';
    return kExitInternal;
  }
  return kExitUsage;
}
