#include "cyclo/ufd_norm.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

#include "cyclo/error.hpp"
#include "cyclo/numtheory.hpp"

namespace cyclo {

namespace {

unsigned degree_of(const Monomial& m) { return std::accumulate(m.begin(), m.end(), 0u); }

void check_same_ring(const Poly& a, const Poly& b) {
  if (a.modulus() != b.modulus()) throw Error(ErrorKind::ModulusMismatch, "polynomials over different fields");
  if (a.nvars() != b.nvars()) throw Error(ErrorKind::DimensionMismatch, "polynomials in different variable sets");
}

std::uint64_t inverse_mod(std::uint64_t c, std::uint64_t l) {
  auto inv = nt::inv_mod(c, l);
  if (!inv) throw Error(ErrorKind::DivisionByZero, "zero scalar");
  return *inv;
}

// Coefficients of a viewed as a polynomial in mu_var; index = exponent.
using Univariate = std::vector<Poly>;

Univariate split_in(const Poly& a, std::size_t var) {
  Univariate out(a.degree_in(var) + 1, Poly(a.modulus(), a.nvars()));
  for (const auto& [mono, c] : a.terms()) {
    Monomial rest = mono;
    rest[var] = 0;
    out[mono[var]].add_term(rest, c);
  }
  return out;
}

Poly join_in(const Univariate& u, std::size_t var, std::uint64_t l, std::size_t nvars) {
  Poly out(l, nvars);
  for (std::size_t e = 0; e < u.size(); ++e)
    for (const auto& [mono, c] : u[e].terms()) {
      Monomial m = mono;
      m[var] = static_cast<std::uint16_t>(e);
      out.add_term(m, c);
    }
  return out;
}

void trim(Univariate& u) {
  while (!u.empty() && u.back().is_zero()) u.pop_back();
}

// Pseudo-remainder of a by b in R[x], with R the ring in the other variables.
Univariate pseudo_remainder(Univariate a, const Univariate& b) {
  trim(a);
  while (!a.empty() && a.size() >= b.size()) {
    const Poly lead_a = a.back();
    const Poly& lead_b = b.back();
    const std::size_t shift = a.size() - b.size();
    for (auto& c : a) c = c * lead_b;
    for (std::size_t i = 0; i < b.size(); ++i) a[i + shift] = a[i + shift] - lead_a * b[i];
    trim(a);
  }
  return a;
}

bool is_over_field(const Univariate& u) {
  return std::all_of(u.begin(), u.end(), [](const Poly& c) { return c.is_constant(); });
}

// Euclid in F_l[x]; the result is monic.
Univariate field_gcd(Univariate a, Univariate b) {
  const std::uint64_t l = a.front().modulus();
  trim(a);
  trim(b);
  while (!b.empty()) {
    const std::uint64_t inv = inverse_mod(b.back().constant_value(), l);
    while (!a.empty() && a.size() >= b.size()) {
      const std::uint64_t q = nt::mul_mod(a.back().constant_value(), inv, l);
      const std::size_t shift = a.size() - b.size();
      for (std::size_t i = 0; i < b.size(); ++i) a[i + shift] = a[i + shift] - b[i].scaled(q);
      trim(a);
    }
    std::swap(a, b);
  }
  const std::uint64_t inv = inverse_mod(a.back().constant_value(), l);
  for (auto& c : a) c = c.scaled(inv);
  return a;
}

Poly gcd_impl(const Poly& a, const Poly& b);

Poly content(const Univariate& u) {
  Poly g(u.front().modulus(), u.front().nvars());
  for (const auto& c : u) {
    g = gcd_impl(g, c);
    if (g.is_constant() && !g.is_zero()) break;
  }
  return g;
}

Univariate divide_all(Univariate u, const Poly& d) {
  for (auto& c : u) c = *exact_divide(c, d);
  return u;
}

std::optional<std::size_t> lowest_variable(const Poly& a, const Poly& b) {
  std::optional<std::size_t> best;
  for (const Poly* f : {&a, &b})
    for (const auto& [mono, c] : f->terms())
      for (std::size_t v = 0; v < mono.size(); ++v)
        if (mono[v] > 0 && (!best || v < *best)) best = v;
  return best;
}

Poly gcd_impl(const Poly& a, const Poly& b) {
  if (a.is_zero()) return b.monic();
  if (b.is_zero()) return a.monic();
  const auto var = lowest_variable(a, b);
  if (!var) return Poly::constant(a.modulus(), a.nvars(), 1);

  Univariate ua = split_in(a, *var), ub = split_in(b, *var);
  if (is_over_field(ua) && is_over_field(ub)) return join_in(field_gcd(ua, ub), *var, a.modulus(), a.nvars());
  if (auto q = exact_divide(a, b)) return b.monic();
  if (auto q = exact_divide(b, a)) return a.monic();

  const Poly ca = content(ua), cb = content(ub);
  const Poly c = gcd_impl(ca, cb);
  ua = divide_all(ua, ca);
  ub = divide_all(ub, cb);
  if (ua.size() < ub.size()) std::swap(ua, ub);
  while (!ub.empty()) {
    Univariate r = pseudo_remainder(ua, ub);
    ua = std::move(ub);
    if (!r.empty()) r = divide_all(r, content(r));
    ub = std::move(r);
  }
  // ua is now primitive and of positive degree, or a unit.
  const Poly g = join_in(ua, *var, a.modulus(), a.nvars());
  return (g * c).monic();
}

}  // namespace

bool GrlexGreater::operator()(const Monomial& a, const Monomial& b) const {
  const unsigned da = degree_of(a), db = degree_of(b);
  if (da != db) return da > db;
  return std::lexicographical_compare(b.begin(), b.end(), a.begin(), a.end());
}

Poly::Poly(std::uint64_t l, std::size_t nvars) : l_(l), nvars_(nvars) {
  if (l < 2) throw Error(ErrorKind::NotPrime, "polynomial coefficient field order " + std::to_string(l));
}

Poly Poly::constant(std::uint64_t l, std::size_t nvars, std::uint64_t c) {
  Poly p(l, nvars);
  p.add_term(Monomial(nvars, 0), c);
  return p;
}

Poly Poly::variable(std::uint64_t l, std::size_t nvars, std::size_t index, unsigned exp) {
  if (index >= nvars) throw Error(ErrorKind::InvalidArgument, "variable index out of range");
  Monomial m(nvars, 0);
  m[index] = static_cast<std::uint16_t>(exp);
  Poly p(l, nvars);
  p.add_term(m, 1);
  return p;
}

bool Poly::is_constant() const {
  return terms_.empty() || (terms_.size() == 1 && degree_of(terms_.begin()->first) == 0);
}

std::uint64_t Poly::constant_value() const {
  if (!is_constant()) throw Error(ErrorKind::InvalidArgument, "polynomial is not constant: " + to_string());
  return leading_coefficient();
}

unsigned Poly::total_degree() const { return terms_.empty() ? 0 : degree_of(leading_monomial()); }

unsigned Poly::degree_in(std::size_t var) const {
  unsigned d = 0;
  for (const auto& [mono, c] : terms_) d = std::max<unsigned>(d, mono[var]);
  return d;
}

std::uint64_t Poly::coefficient(const Monomial& mono) const {
  auto it = terms_.find(mono);
  return it == terms_.end() ? 0 : it->second;
}

void Poly::add_term(const Monomial& mono, std::uint64_t c) {
  if (mono.size() != nvars_) throw Error(ErrorKind::DimensionMismatch, "monomial arity");
  c %= l_;
  if (c == 0) return;
  auto [it, inserted] = terms_.try_emplace(mono, c);
  if (inserted) return;
  it->second = (it->second + c) % l_;
  if (it->second == 0) terms_.erase(it);
}

Poly Poly::scaled(std::uint64_t c) const {
  Poly out(l_, nvars_);
  c %= l_;
  if (c == 0) return out;
  for (const auto& [mono, v] : terms_) out.terms_.emplace_hint(out.terms_.end(), mono, nt::mul_mod(v, c, l_));
  return out;
}

Poly Poly::monic() const {
  if (is_zero()) return *this;
  return scaled(inverse_mod(leading_coefficient(), l_));
}

std::string Poly::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream out;
  bool first = true;
  for (const auto& [mono, c] : terms_) {
    if (!first) out << " + ";
    first = false;
    const bool unit_monomial = degree_of(mono) == 0;
    if (c != 1 || unit_monomial) out << c;
    bool need_star = c != 1 && !unit_monomial;
    for (std::size_t v = 0; v < mono.size(); ++v) {
      if (mono[v] == 0) continue;
      if (need_star) out << '*';
      out << 'm' << (v + 1);
      if (mono[v] > 1) out << '^' << mono[v];
      need_star = true;
    }
  }
  return out.str();
}

Poly operator+(const Poly& a, const Poly& b) {
  check_same_ring(a, b);
  Poly out = a;
  for (const auto& [mono, c] : b.terms()) out.add_term(mono, c);
  return out;
}

Poly operator-(const Poly& a) { return a.scaled(a.modulus() - 1); }

Poly operator-(const Poly& a, const Poly& b) { return a + (-b); }

Poly operator*(const Poly& a, const Poly& b) {
  check_same_ring(a, b);
  Poly out(a.modulus(), a.nvars());
  Monomial m(a.nvars());
  for (const auto& [ma, ca] : a.terms())
    for (const auto& [mb, cb] : b.terms()) {
      for (std::size_t v = 0; v < m.size(); ++v) m[v] = static_cast<std::uint16_t>(ma[v] + mb[v]);
      out.add_term(m, nt::mul_mod(ca, cb, a.modulus()));
    }
  return out;
}

Poly poly_pow(const Poly& a, unsigned k) {
  Poly out = Poly::constant(a.modulus(), a.nvars(), 1);
  for (unsigned i = 0; i < k; ++i) out = out * a;
  return out;
}

std::optional<Poly> exact_divide(const Poly& a, const Poly& b) {
  check_same_ring(a, b);
  if (b.is_zero()) throw Error(ErrorKind::DivisionByZero, "polynomial division by zero");
  const Monomial& lead_b = b.leading_monomial();
  const std::uint64_t inv_lead = inverse_mod(b.leading_coefficient(), b.modulus());
  Poly quotient(a.modulus(), a.nvars());
  Poly rem = a;
  Monomial t(a.nvars());
  while (!rem.is_zero()) {
    const Monomial& lead_r = rem.leading_monomial();
    for (std::size_t v = 0; v < t.size(); ++v) {
      if (lead_r[v] < lead_b[v]) return std::nullopt;
      t[v] = static_cast<std::uint16_t>(lead_r[v] - lead_b[v]);
    }
    Poly term(a.modulus(), a.nvars());
    term.add_term(t, nt::mul_mod(rem.leading_coefficient(), inv_lead, a.modulus()));
    quotient = quotient + term;
    rem = rem - term * b;
  }
  return quotient;
}

Poly poly_gcd(const Poly& a, const Poly& b) {
  check_same_ring(a, b);
  return gcd_impl(a, b);
}

RationalFunction::RationalFunction(Poly num, Poly den) : num_(std::move(num)), den_(std::move(den)) {
  check_same_ring(num_, den_);
  if (den_.is_zero()) throw Error(ErrorKind::DivisionByZero, "rational function with zero denominator");
  if (num_.is_zero()) {
    den_ = Poly::constant(num_.modulus(), num_.nvars(), 1);
    return;
  }
  const Poly g = poly_gcd(num_, den_);
  num_ = *exact_divide(num_, g);
  den_ = *exact_divide(den_, g);
  const std::uint64_t inv = inverse_mod(den_.leading_coefficient(), den_.modulus());
  num_ = num_.scaled(inv);
  den_ = den_.scaled(inv);
}

RationalFunction::RationalFunction(Poly num)
    : RationalFunction(num, Poly::constant(num.modulus(), num.nvars(), 1)) {}

std::string RationalFunction::to_string() const {
  if (den_.is_constant()) return num_.to_string();
  return "(" + num_.to_string() + ")/(" + den_.to_string() + ")";
}

RationalFunction operator*(const RationalFunction& a, const RationalFunction& b) {
  return RationalFunction(a.num() * b.num(), a.den() * b.den());
}

RationalFunction operator/(const RationalFunction& a, const RationalFunction& b) {
  return RationalFunction(a.num() * b.den(), a.den() * b.num());
}

PolyRing::PolyRing(std::uint64_t l, unsigned n, unsigned g) : l_(l), n_(n), g_(g == 0 ? n : g) {
  if (!nt::is_prime(l)) throw Error(ErrorKind::NotPrime, "coefficient field order " + std::to_string(l));
  if (n == 0 || g_ % n != 0) throw Error(ErrorKind::InvalidArgument, "group order must divide the number of variables");
}

Poly PolyRing::act(const Poly& f, unsigned k) const {
  if (f.nvars() != g_ || f.modulus() != l_) throw Error(ErrorKind::DimensionMismatch, "polynomial not in this ring");
  k %= n_;
  Poly out(l_, g_);
  Monomial m(g_);
  for (const auto& [mono, c] : f.terms()) {
    for (std::size_t v = 0; v < g_; ++v) {
      const std::size_t block = v / n_, pos = v % n_;
      m[block * n_ + (pos + k) % n_] = mono[v];
    }
    out.add_term(m, c);
  }
  return out;
}

RationalFunction PolyRing::act(const RationalFunction& w, unsigned k) const {
  return RationalFunction(act(w.num(), k), act(w.den(), k));
}

Poly orbit_norm(const Poly& f, const PolyRing& ring) {
  Poly out = f;
  for (unsigned k = 1; k < ring.n(); ++k) out = out * ring.act(f, k);
  return out;
}

RationalFunction orbit_norm(const RationalFunction& w, const PolyRing& ring) {
  return RationalFunction(orbit_norm(w.num(), ring), orbit_norm(w.den(), ring));
}

PropositionReport proposition_check(std::uint64_t l, unsigned n, unsigned deg_bound) {
  if (!nt::is_prime(l)) throw Error(ErrorKind::NotPrime, "field order " + std::to_string(l));
  if (l > 7 || n == 0 || n > 3 || deg_bound > 2)
    throw Error(ErrorKind::SearchSpaceTooLarge, "proposition check is limited to l <= 7, 1 <= n <= 3, degree <= 2");

  const PolyRing ring(l, n);
  std::vector<Monomial> monomials;
  {
    Monomial m(n, 0);
    // Odometer over exponent vectors with entries <= deg_bound.
    while (true) {
      if (degree_of(m) <= deg_bound) monomials.push_back(m);
      std::size_t v = 0;
      while (v < n && m[v] == deg_bound) m[v++] = 0;
      if (v == n) break;
      ++m[v];
    }
  }
  const auto count = nt::checked_pow(l, static_cast<unsigned>(monomials.size()));
  if (!count || *count - 1 > kPropositionPolyLimit)
    throw Error(ErrorKind::SearchSpaceTooLarge,
                std::to_string(monomials.size()) + " monomials over F_" + std::to_string(l) + " is too many polynomials");

  PropositionReport report;
  report.l = l;
  report.n = n;
  report.deg_bound = deg_bound;
  for (std::uint64_t c = 1; c < l; ++c) report.nth_powers.insert(nt::pow_mod(c, n, l));

  // Monic part of N(f) -> leading coefficient -> one f realizing it.
  std::map<Poly::Terms, std::map<std::uint64_t, Poly>> buckets;
  std::vector<std::uint64_t> digits(monomials.size(), 0);
  for (std::uint64_t idx = 1; idx <= *count - 1; ++idx) {
    std::size_t pos = 0;
    while (digits[pos] == l - 1) digits[pos++] = 0;
    ++digits[pos];
    Poly f(l, n);
    for (std::size_t i = 0; i < monomials.size(); ++i)
      if (digits[i] != 0) f.add_term(monomials[i], digits[i]);
    const Poly norm = orbit_norm(f, ring);
    buckets[norm.monic().terms()].try_emplace(norm.leading_coefficient(), f);
    ++report.polynomials;
  }

  for (const auto& [monic, by_lead] : buckets)
    for (const auto& [ca, fa] : by_lead)
      for (const auto& [cb, fb] : by_lead) {
        const std::uint64_t u = nt::mul_mod(ca, inverse_mod(cb, l), l);
        if (report.unit_norms.insert(u).second)
          report.witnesses[u] = "(" + fa.to_string() + ")/(" + fb.to_string() + ")";
      }
  return report;
}

Theorem3Result theorem3_m(const RootOfUnityContent& base, std::uint64_t p, unsigned n) {
  if (!nt::is_prime(p)) throw Error(ErrorKind::NotPrime, "p = " + std::to_string(p));
  if (n == 0) throw Error(ErrorKind::InvalidArgument, "n must be positive");
  Theorem3Result result;
  result.s = base.exponent(p);
  if (result.s == 0)
    throw Error(ErrorKind::MissingRootOfUnity, "xi_" + std::to_string(p) + " is not in " + base.to_string());

  for (unsigned i = 0; i <= n; ++i)
    if (base.contains(p, n - i + 1)) result.norm_levels.push_back(i);

  // Norm groups shrink as the bottom field grows, so membership must be
  // closed upwards and must include the top level.
  const auto& levels = result.norm_levels;
  if (levels.empty() || levels.back() != n || levels.back() - levels.front() + 1 != levels.size())
    throw Error(ErrorKind::InternalInvariant, "norm levels are not upward closed");

  result.m = levels.front() == 0 ? MValue::neg_infinity() : MValue::finite(static_cast<int>(levels.front()) - 1);
  return result;
}

}  // namespace cyclo
