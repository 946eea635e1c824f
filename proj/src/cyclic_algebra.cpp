#include "cyclo/cyclic_algebra.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>
#include <unordered_map>

#include "cyclo/error.hpp"
#include "cyclo/m_invariant.hpp"
#include "cyclo/numtheory.hpp"

namespace cyclo {

namespace {

using Coeffs = std::vector<std::uint32_t>;  // univariate over F_l, low degree first

void trim(Coeffs& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

Coeffs poly_mul(const Coeffs& a, const Coeffs& b, std::uint32_t l) {
  if (a.empty() || b.empty()) return {};
  std::vector<std::uint64_t> acc(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j) acc[i + j] = (acc[i + j] + std::uint64_t{a[i]} * b[j]) % l;
  Coeffs out(acc.begin(), acc.end());
  trim(out);
  return out;
}

// a mod m for m with invertible leading coefficient.
Coeffs poly_rem(Coeffs a, const Coeffs& m, std::uint32_t l) {
  trim(a);
  const std::uint64_t inv_lead = *nt::inv_mod(m.back(), l);
  while (a.size() >= m.size()) {
    const std::uint64_t q = a.back() * inv_lead % l;
    const std::size_t shift = a.size() - m.size();
    for (std::size_t i = 0; i < m.size(); ++i) a[i + shift] = static_cast<std::uint32_t>((a[i + shift] + (l - q) * m[i]) % l);
    trim(a);
  }
  return a;
}

Coeffs poly_gcd(Coeffs a, Coeffs b, std::uint32_t l) {
  trim(a);
  trim(b);
  while (!b.empty()) {
    Coeffs r = poly_rem(a, b, l);
    a = std::move(b);
    b = std::move(r);
  }
  return a;
}

Coeffs poly_powmod(Coeffs base, std::uint64_t e, const Coeffs& m, std::uint32_t l) {
  Coeffs result{1};
  base = poly_rem(base, m, l);
  while (e > 0) {
    if (e & 1) result = poly_rem(poly_mul(result, base, l), m, l);
    base = poly_rem(poly_mul(base, base, l), m, l);
    e >>= 1;
  }
  return result;
}

void require_same_algebra(const CyclicAlgebraElement& x, const CyclicAlgebraElement& y) {
  if (!x.algebra || !y.algebra) throw Error(ErrorKind::InvalidArgument, "element without algebra");
  if (x.algebra != y.algebra &&
      !(x.algebra->tower() == y.algebra->tower() && x.algebra->b() == y.algebra->b()))
    throw Error(ErrorKind::TowerMismatch, "elements of different cyclic algebras");
}

}  // namespace

bool is_irreducible_mod(const std::vector<std::uint32_t>& poly, std::uint32_t l) {
  Coeffs f = poly;
  trim(f);
  if (f.size() < 2) return false;
  const std::size_t k = f.size() - 1;
  if (k == 1) return true;
  // Ben-Or: f has no factor of degree i iff gcd(f, x^{l^i} - x) = 1.
  Coeffs h{0, 1};
  for (std::size_t i = 1; i <= k / 2; ++i) {
    h = poly_powmod(h, l, f, l);
    Coeffs diff = h;
    if (diff.size() < 2) diff.resize(2, 0);
    diff[1] = (diff[1] + l - 1) % l;
    trim(diff);
    if (poly_gcd(f, diff, l).size() != 1) return false;
  }
  return true;
}

FiniteField::FiniteField(std::uint32_t l, unsigned k) : l_(l), k_(k) {
  if (!nt::is_prime(l)) throw Error(ErrorKind::NotPrime, "field characteristic " + std::to_string(l));
  const auto order = nt::checked_pow(l, k);
  if (k == 0 || !order || *order > kMaxOrder)
    throw Error(ErrorKind::InvalidArgument, "field F_" + std::to_string(l) + "^" + std::to_string(k) + " is out of range");
  order_ = *order;

  // Least monic irreducible: run through the lower coefficients by code.
  for (std::uint64_t code = 0;; ++code) {
    Coeffs f(k + 1, 0);
    std::uint64_t c = code;
    for (unsigned i = 0; i < k; ++i, c /= l) f[i] = static_cast<std::uint32_t>(c % l);
    f[k] = 1;
    if (is_irreducible_mod(f, l)) {
      f_ = std::move(f);
      break;
    }
  }

  const auto factors = nt::factorize(order_ - 1);
  for (std::uint64_t code = 1; code < order_; ++code) {
    const Elem g = from_code(code);
    bool generator = true;
    for (const auto& [q, e] : factors)
      if (pow(g, (order_ - 1) / q) == one()) {
        generator = false;
        break;
      }
    if (generator) {
      generator_ = g;
      break;
    }
  }
}

FiniteField::Elem FiniteField::one() const {
  Elem e(k_, 0);
  e[0] = 1;
  return e;
}

FiniteField::Elem FiniteField::from_code(std::uint64_t code) const {
  if (code >= order_) throw Error(ErrorKind::InvalidArgument, "element code " + std::to_string(code) + " out of range");
  Elem e(k_, 0);
  for (unsigned i = 0; i < k_; ++i, code /= l_) e[i] = static_cast<std::uint32_t>(code % l_);
  return e;
}

std::uint64_t FiniteField::code(const Elem& x) const {
  std::uint64_t c = 0;
  for (unsigned i = k_; i-- > 0;) c = c * l_ + x[i];
  return c;
}

FiniteField::Elem FiniteField::add(const Elem& x, const Elem& y) const {
  Elem out(k_);
  for (unsigned i = 0; i < k_; ++i) out[i] = static_cast<std::uint32_t>((std::uint64_t{x[i]} + y[i]) % l_);
  return out;
}

FiniteField::Elem FiniteField::neg(const Elem& x) const {
  Elem out(k_);
  for (unsigned i = 0; i < k_; ++i) out[i] = x[i] == 0 ? 0 : l_ - x[i];
  return out;
}

FiniteField::Elem FiniteField::sub(const Elem& x, const Elem& y) const { return add(x, neg(y)); }

FiniteField::Elem FiniteField::mul(const Elem& x, const Elem& y) const {
  Coeffs prod = poly_rem(poly_mul(x, y, l_), f_, l_);
  prod.resize(k_, 0);
  return prod;
}

FiniteField::Elem FiniteField::pow(const Elem& x, std::uint64_t e) const {
  Elem result = one(), base = x;
  while (e > 0) {
    if (e & 1) result = mul(result, base);
    base = mul(base, base);
    e >>= 1;
  }
  return result;
}

FiniteField::Elem FiniteField::inv(const Elem& x) const {
  if (is_zero(x)) throw Error(ErrorKind::DivisionByZero, "inverse of zero in F_" + std::to_string(order_));
  return pow(x, order_ - 2);
}

FiniteField::Elem FiniteField::frobenius(const Elem& x, unsigned times) const {
  Elem out = x;
  for (unsigned t = 0; t < times % k_; ++t) out = pow(out, l_);
  return out;
}

bool FiniteField::is_zero(const Elem& x) const {
  return std::all_of(x.begin(), x.end(), [](std::uint32_t c) { return c == 0; });
}

std::uint64_t FiniteField::discrete_log(const Elem& x) const {
  if (is_zero(x)) throw Error(ErrorKind::DivisionByZero, "discrete log of zero");
  const std::uint64_t n = order_ - 1;
  const auto m = static_cast<std::uint64_t>(std::ceil(std::sqrt(static_cast<double>(n))));
  std::unordered_map<std::uint64_t, std::uint64_t> baby;
  Elem cur = one();
  for (std::uint64_t j = 0; j < m; ++j) {
    baby.try_emplace(code(cur), j);
    cur = mul(cur, generator_);
  }
  const Elem giant = inv(pow(generator_, m));
  Elem y = x;
  for (std::uint64_t i = 0; i <= m; ++i) {
    auto it = baby.find(code(y));
    if (it != baby.end()) return (i * m + it->second) % n;
    y = mul(y, giant);
  }
  throw Error(ErrorKind::InternalInvariant, "discrete log not found");
}

std::string FiniteField::to_string(const Elem& x) const {
  if (k_ == 1) return std::to_string(x[0]);
  std::ostringstream out;
  bool first = true;
  for (unsigned i = k_; i-- > 0;) {
    if (x[i] == 0) continue;
    if (!first) out << " + ";
    first = false;
    if (x[i] != 1 || i == 0) out << x[i];
    if (i >= 1) out << 'x';
    if (i >= 2) out << '^' << i;
  }
  return first ? "0" : out.str();
}

FiniteFieldTower::FiniteFieldTower(std::uint32_t l, unsigned d, unsigned r)
    : d_(d), r_(r), field_((d == 0 || r < 2) ? throw Error(ErrorKind::InvalidArgument, "tower needs d >= 1 and r >= 2")
                                               : FiniteField(l, d * r)) {
  base_order_ = *nt::checked_pow(l, d);
}

FiniteField::Elem FiniteFieldTower::tau(const FiniteField::Elem& x, unsigned times) const {
  return field_.frobenius(x, d_ * (times % r_));
}

bool FiniteFieldTower::in_base(const FiniteField::Elem& x) const { return tau(x) == x; }

FiniteField::Elem FiniteFieldTower::norm(const FiniteField::Elem& w) const {
  FiniteField::Elem out = w, conj = w;
  for (unsigned j = 1; j < r_; ++j) {
    conj = tau(conj);
    out = field_.mul(out, conj);
  }
  return out;
}

FiniteField::Elem FiniteFieldTower::random_base_unit(std::mt19937_64& rng) const {
  std::uniform_int_distribution<std::uint64_t> pick(1, field_.order() - 1);
  return norm(field_.from_code(pick(rng)));
}

FiniteField::Elem FiniteFieldTower::base_from_code(std::uint64_t code) const {
  FiniteField::Elem x = field_.from_code(code);
  if (!in_base(x)) throw Error(ErrorKind::InvalidArgument, "element " + field_.to_string(x) + " is not in the base field");
  return x;
}

std::string FiniteFieldTower::to_string() const {
  return "F_" + std::to_string(field_.order()) + "/F_" + std::to_string(base_order_);
}

FiniteField::Elem solve_norm(const FiniteFieldTower& tower, const FiniteField::Elem& b) {
  const FiniteField& L = tower.field();
  if (L.is_zero(b) || !tower.in_base(b))
    throw Error(ErrorKind::InvalidArgument, "norm target " + L.to_string(b) + " is not a unit of the base field");
  if (L.order() <= kNormExhaustLimit) {
    for (std::uint64_t code = 1; code < L.order(); ++code) {
      FiniteField::Elem w = L.from_code(code);
      if (tower.norm(w) == b) return w;
    }
    throw Error(ErrorKind::InternalInvariant, "norm map is not surjective");
  }
  // N(g^k) = g^{kM} with M = (|L| - 1)/(|E| - 1); b = g^e has M | e.
  const std::uint64_t M = (L.order() - 1) / (tower.base_order() - 1);
  const std::uint64_t e = L.discrete_log(b);
  if (e % M != 0) throw Error(ErrorKind::InternalInvariant, "base element with log not divisible by M");
  FiniteField::Elem w = L.pow(L.primitive_element(), e / M);
  if (tower.norm(w) != b) throw Error(ErrorKind::InternalInvariant, "norm preimage check failed");
  return w;
}

std::shared_ptr<const CyclicAlgebra> CyclicAlgebra::create(FiniteFieldTower tower, FiniteField::Elem b) {
  if (b.size() != tower.field().degree() || tower.field().is_zero(b) || !tower.in_base(b))
    throw Error(ErrorKind::InvalidArgument, "b must be a nonzero element of the base field");
  return std::shared_ptr<const CyclicAlgebra>(new CyclicAlgebra(std::move(tower), std::move(b)));
}

CyclicAlgebraElement CyclicAlgebra::zero() const {
  return {shared_from_this(), std::vector<FiniteField::Elem>(tower_.r(), tower_.field().zero())};
}

CyclicAlgebraElement CyclicAlgebra::one() const { return scalar(tower_.field().one()); }

CyclicAlgebraElement CyclicAlgebra::monomial(unsigned j, const FiniteField::Elem& c) const {
  if (j >= tower_.r()) throw Error(ErrorKind::InvalidArgument, "u exponent out of range");
  CyclicAlgebraElement x = zero();
  x.coeffs[j] = c;
  return x;
}

CyclicAlgebraElement CyclicAlgebra::random_element(std::mt19937_64& rng) const {
  CyclicAlgebraElement x = zero();
  std::uniform_int_distribution<std::uint64_t> pick(0, tower_.field().order() - 1);
  for (auto& c : x.coeffs) c = tower_.field().from_code(pick(rng));
  return x;
}

CyclicAlgebraElement ca_add(const CyclicAlgebraElement& x, const CyclicAlgebraElement& y) {
  require_same_algebra(x, y);
  const FiniteField& L = x.algebra->tower().field();
  CyclicAlgebraElement out = x;
  for (std::size_t j = 0; j < out.coeffs.size(); ++j) out.coeffs[j] = L.add(x.coeffs[j], y.coeffs[j]);
  return out;
}

CyclicAlgebraElement ca_sub(const CyclicAlgebraElement& x, const CyclicAlgebraElement& y) {
  require_same_algebra(x, y);
  const FiniteField& L = x.algebra->tower().field();
  CyclicAlgebraElement out = x;
  for (std::size_t j = 0; j < out.coeffs.size(); ++j) out.coeffs[j] = L.sub(x.coeffs[j], y.coeffs[j]);
  return out;
}

CyclicAlgebraElement ca_mul(const CyclicAlgebraElement& x, const CyclicAlgebraElement& y) {
  require_same_algebra(x, y);
  const CyclicAlgebra& A = *x.algebra;
  const FiniteFieldTower& T = A.tower();
  const FiniteField& L = T.field();
  const unsigned r = T.r();
  CyclicAlgebraElement out = A.zero();
  // (u^i c)(u^j d) = u^{i+j} tau^j(c) d, with u^r = b central.
  for (unsigned j = 0; j < r; ++j) {
    if (L.is_zero(y.coeffs[j])) continue;
    for (unsigned i = 0; i < r; ++i) {
      if (L.is_zero(x.coeffs[i])) continue;
      FiniteField::Elem term = L.mul(T.tau(x.coeffs[i], j), y.coeffs[j]);
      unsigned k = i + j;
      if (k >= r) {
        k -= r;
        term = L.mul(term, A.b());
      }
      out.coeffs[k] = L.add(out.coeffs[k], term);
    }
  }
  return out;
}

CyclicAlgebraElement ca_pow(const CyclicAlgebraElement& x, unsigned k) {
  CyclicAlgebraElement out = x.algebra->one();
  for (unsigned i = 0; i < k; ++i) out = ca_mul(out, x);
  return out;
}

bool ca_equal(const CyclicAlgebraElement& x, const CyclicAlgebraElement& y) {
  require_same_algebra(x, y);
  return x.coeffs == y.coeffs;
}

bool ca_is_zero(const CyclicAlgebraElement& x) {
  const FiniteField& L = x.algebra->tower().field();
  return std::all_of(x.coeffs.begin(), x.coeffs.end(), [&](const auto& c) { return L.is_zero(c); });
}

std::string ca_to_string(const CyclicAlgebraElement& x) {
  const FiniteField& L = x.algebra->tower().field();
  std::string out;
  for (std::size_t j = 0; j < x.coeffs.size(); ++j) {
    if (L.is_zero(x.coeffs[j])) continue;
    if (!out.empty()) out += " + ";
    const std::string c = "(" + L.to_string(x.coeffs[j]) + ")";
    out += j == 0 ? c : (j == 1 ? "u" : "u^" + std::to_string(j)) + c;
  }
  return out.empty() ? "0" : out;
}

FpMatrix regular_representation(const CyclicAlgebraElement& x) {
  const CyclicAlgebra& A = *x.algebra;
  const FiniteField& L = A.tower().field();
  const unsigned r = A.tower().r(), k = L.degree();
  const std::size_t dim = static_cast<std::size_t>(r) * k;
  FpMatrix M(L.characteristic(), dim, dim);
  for (unsigned j = 0; j < r; ++j)
    for (unsigned e = 0; e < k; ++e) {
      FiniteField::Elem basis = L.zero();
      basis[e] = 1;
      const CyclicAlgebraElement image = ca_mul(x, A.monomial(j, basis));
      const std::size_t col = static_cast<std::size_t>(j) * k + e;
      for (unsigned jj = 0; jj < r; ++jj)
        for (unsigned ee = 0; ee < k; ++ee) M.set(static_cast<std::size_t>(jj) * k + ee, col, image.coeffs[jj][ee]);
    }
  return M;
}

SplitCertificate split_certificate(const std::shared_ptr<const CyclicAlgebra>& algebra) {
  const FiniteFieldTower& T = algebra->tower();
  const FiniteField& L = T.field();
  SplitCertificate cert{solve_norm(T, algebra->b()), algebra->zero(), algebra->zero(), 0, 0, 0};
  const CyclicAlgebraElement one = algebra->one();
  // Other preimages differ by the kernel of N, generated by g^{|E| - 1}.
  const FiniteField::Elem kernel_gen = L.pow(L.primitive_element(), T.base_order() - 1);
  const std::uint64_t kernel_size = (L.order() - 1) / (T.base_order() - 1);
  FiniteField::Elem w = cert.w;
  for (std::uint64_t attempt = 0; attempt < kernel_size; ++attempt, w = L.mul(w, kernel_gen)) {
    const CyclicAlgebraElement v = algebra->monomial(1, L.inv(w));
    if (!ca_equal(ca_pow(v, T.r()), one)) throw Error(ErrorKind::VerificationFailed, "v^r != 1");
    CyclicAlgebraElement z = algebra->zero(), vj = one;
    for (unsigned j = 0; j < T.r(); ++j) {
      z = ca_add(z, vj);
      vj = ca_mul(vj, v);
    }
    if (ca_is_zero(z)) {
      ++cert.retries;
      continue;
    }
    if (!ca_is_zero(ca_mul(ca_sub(v, one), z))) throw Error(ErrorKind::VerificationFailed, "(v - 1) z != 0");
    const FpMatrix rep = regular_representation(z);
    cert.dimension = rep.rows();
    cert.z_rank = rank(rep);
    if (cert.z_rank >= cert.dimension) throw Error(ErrorKind::VerificationFailed, "z is invertible");
    cert.w = w;
    cert.v = v;
    cert.z = z;
    return cert;
  }
  throw Error(ErrorKind::DegenerateWitness, "every norm preimage gives z = 0");
}

std::vector<LadderRow> index_ladder(std::uint64_t p, unsigned n) {
  if (!nt::is_prime(p)) throw Error(ErrorKind::NotPrime, "p = " + std::to_string(p));
  if (n == 0) throw Error(ErrorKind::InvalidArgument, "n must be positive");
  const auto dim_A = nt::checked_pow(p, 2 * n);
  if (!dim_A) throw Error(ErrorKind::InvalidArgument, "p^(2n) overflows");
  std::vector<LadderRow> rows;
  for (unsigned i = 1; i <= n; ++i) {
    LadderRow row;
    row.i = i;
    row.dim_field = *nt::checked_pow(p, i - 1);
    // Double centralizer: dim_F C_A(F_i) * [F_i : F] = dim_F A.
    row.dim_centralizer_F = *dim_A / row.dim_field;
    row.dim_centralizer = row.dim_centralizer_F / row.dim_field;
    const auto root = static_cast<std::uint64_t>(std::llround(std::sqrt(static_cast<double>(row.dim_centralizer))));
    row.index = root;
    unsigned k = 0;
    const bool square = root * root == row.dim_centralizer;
    const bool p_power = nt::is_power_of(root, p, &k) && k >= 1;
    row.m = p_power ? MValue::finite(static_cast<int>(k) - 1) : MValue::undetermined();
    row.consistent = square && p_power && row.dim_centralizer_F * row.dim_field == *dim_A &&
                     row.dim_centralizer == *nt::checked_pow(p, 2 * (n - i + 1)) &&
                     row.index == *nt::checked_pow(p, n - i + 1) && row.m == MValue::finite(static_cast<int>(n - i)) &&
                     index_bound_check(row.m, row.index, p);
    rows.push_back(row);
  }
  return rows;
}

RestrictionVerdict restriction_consistency(std::uint32_t a, std::uint32_t b_div, std::uint32_t r, std::uint32_t q) {
  if (a == 0 || b_div == 0 || r == 0 || a % b_div != 0 || q != a / b_div)
    throw Error(ErrorKind::InvalidArgument, "need b | a and q = a / b");
  RestrictionVerdict v;
  v.inv_psi = h2_invariant(psi_cocycle(a, b_div, r));
  v.inv_phi = h2_invariant(phi_cocycle(a, b_div, r));
  v.gamma = gamma_isomorphism(a, b_div, r);
  v.consistent = v.inv_psi == v.inv_phi && v.gamma.ok();
  return v;
}

}  // namespace cyclo
