#include "cyclo/m_invariant.hpp"

#include <numeric>
#include <sstream>

#include "cyclo/error.hpp"
#include "cyclo/numtheory.hpp"
#include "cyclo/padic.hpp"
#include "cyclo/ufd_norm.hpp"

namespace cyclo {

namespace {

[[noreturn]] void inadmissible(const std::string& why) { throw Error(ErrorKind::InadmissibleSpec, why); }

std::uint64_t power_or_inadmissible(std::uint64_t p, unsigned k) {
  auto v = nt::checked_pow(p, k);
  if (!v) inadmissible(std::to_string(p) + "^" + std::to_string(k) + " overflows");
  return *v;
}

void check_p_n(std::uint64_t p, unsigned n) {
  if (!nt::is_prime(p)) inadmissible("p = " + std::to_string(p) + " is not prime");
  if (n == 0) inadmissible("n must be at least 1");
  power_or_inadmissible(p, n + 1);
}

std::string levels_to_string(const std::vector<unsigned>& levels) {
  std::string out = "{";
  for (std::size_t i = 0; i < levels.size(); ++i) out += (i ? "," : "") + std::to_string(levels[i]);
  return out + "}";
}

MResult from_theorem3(const RootOfUnityContent& base, std::uint64_t p, unsigned n) {
  const Theorem3Result r = theorem3_m(base, p, n);
  MResult out;
  out.m = r.m;
  out.evidence.push_back("base " + base.to_string() + " contains xi_" + std::to_string(p) + "^k exactly for k <= " +
                         std::to_string(r.s));
  out.evidence.push_back("levels i with xi_" + std::to_string(p) + " a norm down to K_i: " +
                         levels_to_string(r.norm_levels));
  return out;
}

MResult compute(const tower::BrauerRowen& s) {
  check_p_n(s.p, s.n);
  std::uint64_t conductor = 0;
  if (s.t.is_neg_infinity()) {
    conductor = power_or_inadmissible(s.p, s.n + 1);
  } else if (s.t.is_finite() && s.t.value() >= 0 && static_cast<unsigned>(s.t.value()) < s.n) {
    conductor = power_or_inadmissible(s.p, s.n - static_cast<unsigned>(s.t.value()));
  } else {
    inadmissible("t must be -inf or in 0.." + std::to_string(s.n - 1) + ", got " + s.t.to_string());
  }
  MResult out = from_theorem3(RootOfUnityContent::cyclotomic(conductor), s.p, s.n);
  out.evidence.insert(out.evidence.begin(), "base field Q(xi_" + std::to_string(conductor) + ")");
  return out;
}

MResult compute(const tower::FunctionField& s) {
  check_p_n(s.p, s.n);
  if (s.base.kind() == RootOfUnityContent::Kind::FiniteField && s.base.value() == s.p)
    inadmissible("base field of characteristic p");
  try {
    return from_theorem3(s.base, s.p, s.n);
  } catch (const Error& e) {
    if (e.kind() == ErrorKind::MissingRootOfUnity) inadmissible(e.what());
    throw;
  }
}

MResult compute(const tower::LocalCyclotomic& s) {
  check_p_n(s.p, s.n);
  const ResidueNormResult r = residue_norm_details(s.p, s.n, s.q);
  MResult out;
  out.m = r.in_norm_group ? MValue::neg_infinity() : MValue::finite(0);
  std::ostringstream line;
  line << "(F_" << s.q << "^x)^" << power_or_inadmissible(s.p, s.n) << " has " << r.power_count << " elements";
  out.evidence.push_back(line.str());
  if (r.exhaustive) {
    std::ostringstream orders;
    orders << "elements of order " << s.p << ":";
    for (auto y : r.order_p_elements) orders << ' ' << y;
    out.evidence.push_back(orders.str());
  }
  out.evidence.push_back(std::string("xi_") + std::to_string(s.p) + (r.in_norm_group ? " is" : " is not") +
                         " a norm from K (residue criterion" + (r.exhaustive ? ", exhaustive" : "") + ")");
  return out;
}

MResult compute(const tower::LocalKummer& s) {
  check_p_n(s.p, s.n);
  if (!nt::is_prime(s.l)) inadmissible("l = " + std::to_string(s.l) + " is not prime");
  // xi = xi_{p^{n+1}} lies in F, so N(xi) = xi^{p^n}; as an exponent in
  // Z/p^{n+1} that is p^n, of additive order p, i.e. a primitive p-th root.
  const std::uint64_t modulus = power_or_inadmissible(s.p, s.n + 1);
  const std::uint64_t image = power_or_inadmissible(s.p, s.n) % modulus;
  std::uint64_t order = 1;
  for (std::uint64_t acc = image; acc % modulus != 0; acc += image) ++order;
  if (order != s.p) throw Error(ErrorKind::InternalInvariant, "norm of xi_{p^{n+1}} is not of order p");
  MResult out;
  out.m = MValue::neg_infinity();
  out.evidence.push_back("F = Q_" + std::to_string(s.l) + "(xi_" + std::to_string(modulus) + ")");
  out.evidence.push_back("N(xi_" + std::to_string(modulus) + ") = xi_" + std::to_string(modulus) + "^" +
                         std::to_string(image) + ", of order " + std::to_string(order) + ": a primitive " +
                         std::to_string(s.p) + "-th root of unity");
  return out;
}

MResult compute(const tower::Biquadratic& s, unsigned precision) {
  if (s.d != 1 && s.d != -1) inadmissible("d must be 1 or -1");
  const mpz_class c2 = s.a - 1;
  if (c2 <= 0 || !mpz_perfect_square_p(c2.get_mpz_t())) inadmissible("a - 1 is not a positive square");
  const mpz_class c = sqrt(c2);
  if (c % 4 != 0) inadmissible("a = 1 + c^2 requires 4 | c");
  if (mpz_perfect_square_p(s.a.get_mpz_t())) inadmissible("a is a square");

  MResult out;
  const std::string ds = s.d > 0 ? "" : "-";
  out.evidence.push_back("a = 1 + " + c.get_str() + "^2, K_2 = K_1(sqrt(" + ds + "(a + sqrt a)))");
  bool non_norm = false;

  // Real places: a > sqrt a, so d(a +- sqrt a) has the sign of d.
  for (const char* branch : {"+", "-"}) {
    const int h = hilbert_symbol(mpq_class(s.d), mpq_class(-1), Place::infinite());
    out.evidence.push_back(std::string("real place sqrt a -> ") + branch + "|sqrt a|: (" + ds + "(a " + branch +
                           " sqrt a), -1)_inf = " + std::to_string(h));
    if (h == -1) non_norm = true;
  }

  if ((s.a - 1) % 8 == 0) {
    const auto root = hensel_sqrt(PadicNumber::from_integer(s.a, 2, precision));
    if (!root) throw Error(ErrorKind::InternalInvariant, "a = 1 mod 8 without a 2-adic square root");
    const PadicNumber a2 = PadicNumber::from_integer(s.a, 2, root->precision());
    out.evidence.push_back("sqrt a in Q_2 = " + root->to_string());
    for (int sign : {1, -1}) {
      const PadicNumber r = sign > 0 ? *root : -*root;
      PadicNumber value = a2 + r;
      if (s.d < 0) value = -value;
      const bool sos = sum_of_two_squares_q2(value);
      out.evidence.push_back(std::string("2-adic place sqrt a -> ") + (sign > 0 ? "+" : "-") + "x0: " + ds +
                             "(a + sqrt a) " + (sos ? "is" : "is not") + " a sum of two squares");
      if (!sos) non_norm = true;
    }
  } else {
    out.evidence.push_back("a != 1 mod 8: 2-adic place not examined");
  }

  out.m = non_norm ? MValue::finite(1) : MValue::at_most_zero();
  out.evidence.push_back(non_norm ? "-1 is not a local norm from K_2 to K_1 at some place"
                                  : "-1 is a local norm at every examined place");
  return out;
}

}  // namespace

std::uint64_t tower_prime(const TowerSpec& spec) {
  return std::visit(
      [](const auto& s) -> std::uint64_t {
        if constexpr (std::is_same_v<std::decay_t<decltype(s)>, tower::Biquadratic>) return 2;
        else return s.p;
      },
      spec);
}

unsigned tower_length(const TowerSpec& spec) {
  return std::visit(
      [](const auto& s) -> unsigned {
        if constexpr (std::is_same_v<std::decay_t<decltype(s)>, tower::Biquadratic>) return 2;
        else return s.n;
      },
      spec);
}

std::string tower_name(const TowerSpec& spec) {
  static const char* names[] = {"brauer_rowen", "function_field", "local_cyclotomic", "local_kummer", "biquadratic"};
  return names[spec.index()];
}

MResult compute_m(const TowerSpec& spec, unsigned padic_precision) {
  MResult out = std::visit(
      [&](const auto& s) {
        if constexpr (std::is_same_v<std::decay_t<decltype(s)>, tower::Biquadratic>) return compute(s, padic_precision);
        else return compute(s);
      },
      spec);
  const bool local = std::holds_alternative<tower::LocalCyclotomic>(spec) || std::holds_alternative<tower::LocalKummer>(spec);
  if (local && !(out.m.is_neg_infinity() || out.m == MValue::finite(0)))
    throw Error(ErrorKind::InternalInvariant, "local tower with m = " + out.m.to_string());
  return out;
}

std::uint64_t find_dirichlet_prime(std::uint64_t p, unsigned n, std::uint64_t limit) {
  if (!nt::is_prime(p)) throw Error(ErrorKind::NotPrime, "p = " + std::to_string(p));
  const auto pn = nt::checked_pow(p, n), step = nt::checked_pow(p, n + 1);
  if (!pn || !step) throw Error(ErrorKind::InvalidArgument, "p^(n+1) overflows");
  const std::uint64_t start = 1 + *pn;
  if (limit < start) throw Error(ErrorKind::InvalidArgument, "limit below 1 + p^n");
  for (std::uint64_t q = start; q <= limit; q += *step) {
    if (nt::is_prime(q)) return q;
    if (limit - q < *step) break;
  }
  throw Error(ErrorKind::NotFoundBelowLimit, "no prime = 1 + p^n mod p^(n+1) up to " + std::to_string(limit));
}

ResidueNormResult residue_norm_details(std::uint64_t p, unsigned n, std::uint64_t q) {
  if (!nt::is_prime(p)) throw Error(ErrorKind::InadmissibleSpec, "p = " + std::to_string(p) + " is not prime");
  const auto pn = nt::checked_pow(p, n), modulus = nt::checked_pow(p, n + 1);
  if (n == 0 || !pn || !modulus) throw Error(ErrorKind::InadmissibleSpec, "bad exponent n");
  if (!nt::is_prime(q)) throw Error(ErrorKind::InadmissibleSpec, "q = " + std::to_string(q) + " is not prime");
  if (q % *modulus != (1 + *pn) % *modulus)
    throw Error(ErrorKind::InadmissibleSpec, "q = " + std::to_string(q) + " is not 1 + p^n mod p^(n+1)");

  ResidueNormResult r;
  // An x is a k-th power iff x^((q-1)/gcd(k, q-1)) = 1.
  const std::uint64_t g = std::gcd(*pn, q - 1);
  const std::uint64_t cofactor = (q - 1) / g;
  r.power_count = cofactor;
  if (q <= kResidueExhaustLimit) {
    r.exhaustive = true;
    std::vector<bool> is_power(q, false);
    std::uint64_t distinct = 0;
    for (std::uint64_t x = 1; x < q; ++x) {
      const std::uint64_t y = nt::pow_mod(x, *pn, q);
      if (!is_power[y]) ++distinct;
      is_power[y] = true;
    }
    if (distinct != r.power_count) throw Error(ErrorKind::InternalInvariant, "power count disagrees with index");
    for (std::uint64_t y = 2; y < q; ++y)
      if (nt::pow_mod(y, p, q) == 1) {
        r.order_p_elements.push_back(y);
        if (is_power[y]) r.order_p_powers.push_back(y);
      }
    r.in_norm_group = !r.order_p_powers.empty();
  } else {
    // Elements of order p exist since p | q - 1; the p^n-th powers form the
    // subgroup of order cofactor, which holds one iff p | cofactor.
    r.in_norm_group = cofactor % p == 0;
  }
  return r;
}

bool residue_norm_test(std::uint64_t p, unsigned n, std::uint64_t q) { return residue_norm_details(p, n, q).in_norm_group; }

bool index_bound_check(const MValue& m, std::uint64_t ind, std::uint64_t p) {
  if (!nt::is_prime(p)) throw Error(ErrorKind::NotPrime, "p = " + std::to_string(p));
  unsigned k = 0;
  if (!nt::is_power_of(ind, p, &k)) throw Error(ErrorKind::InvalidArgument, "index " + std::to_string(ind) + " is not a power of p");
  if (m.is_neg_infinity()) return k == 0;
  if (!m.is_finite() || m.value() < 0) throw Error(ErrorKind::InvalidArgument, "m must be -inf or a level, got " + m.to_string());
  return k <= static_cast<unsigned>(m.value()) + 1;
}

ProfileVerdict cross_check_profile(const TowerSpec& spec, const GModule& module) {
  if (module.p() != tower_prime(spec) || module.n() != tower_length(spec))
    throw Error(ErrorKind::TowerMismatch, "module over C_" + std::to_string(module.p()) + "^" + std::to_string(module.n()) +
                                              " for a tower with p = " + std::to_string(tower_prime(spec)) +
                                              ", n = " + std::to_string(tower_length(spec)));
  ProfileVerdict v{compute_m(spec).m, MValue::undetermined(), {}};
  v.shape = classify_theorem1(jordan_profile(module), module.p(), module.n());
  v.from_module = m_from_shape(v.shape);

  const MValue& a = v.from_spec;
  const MValue& b = v.from_module;
  bool ok = a == b;
  if (a.is_neg_infinity() && b.kind() == MValue::Kind::Undetermined) ok = true;
  if (a.kind() == MValue::Kind::AtMostZero && (b.kind() == MValue::Kind::Undetermined || b == MValue::finite(0))) ok = true;
  if (!ok) throw Error(ErrorKind::Mismatch, "tower gives m = " + a.to_string() + ", module gives m = " + b.to_string());
  return v;
}

MResult rational_function_field_fixture(std::uint64_t p) {
  if (!nt::is_prime(p)) throw Error(ErrorKind::NotPrime, "p = " + std::to_string(p));
  MResult out;
  out.m = MValue::finite(0);
  out.evidence.push_back("recorded: n = 1 over Q(xi_" + std::to_string(p) + ")(X), the cyclic algebra is not split");
  return out;
}

}  // namespace cyclo
