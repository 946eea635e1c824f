#include "cyclo/padic.hpp"

#include <algorithm>
#include <set>
#include <sstream>

#include "cyclo/error.hpp"
#include "cyclo/numtheory.hpp"

namespace cyclo {
namespace {

mpz_class power(unsigned long p, unsigned long k) {
  mpz_class out;
  mpz_ui_pow_ui(out.get_mpz_t(), p, k);
  return out;
}

mpz_class mod(const mpz_class& x, const mpz_class& m) {
  mpz_class r;
  mpz_mod(r.get_mpz_t(), x.get_mpz_t(), m.get_mpz_t());
  return r;
}

mpz_class invert(const mpz_class& x, const mpz_class& m) {
  mpz_class r;
  if (mpz_invert(r.get_mpz_t(), x.get_mpz_t(), m.get_mpz_t()) == 0) {
    throw Error(ErrorKind::DivisionByZero, "unit is not invertible");
  }
  return r;
}

// Removes factors of p; returns the count.
long strip(mpz_class& x, unsigned long p) {
  return static_cast<long>(mpz_remove(x.get_mpz_t(), x.get_mpz_t(), mpz_class(p).get_mpz_t()));
}

void check_prime(unsigned long p) {
  if (!nt::is_prime(p)) throw Error(ErrorKind::NotPrime, std::to_string(p) + " is not prime");
}

void check_precision(unsigned n) {
  if (n == 0) throw Error(ErrorKind::InvalidArgument, "precision must be at least one digit");
}

void check_same_prime(const PadicNumber& x, const PadicNumber& y) {
  if (x.prime() != y.prime()) {
    throw Error(ErrorKind::ModulusMismatch, "Q_" + std::to_string(x.prime()) + " vs Q_" + std::to_string(y.prime()));
  }
}

// Valuation and unit residue of a local value at an odd or even prime.
struct LocalUnit {
  long valuation;
  std::uint64_t unit;  // mod 8 for p = 2, mod p otherwise
};

LocalUnit local_unit(const LocalValue& value, std::uint64_t p) {
  const unsigned digits = p == 2 ? 3 : 1;
  const mpz_class modulus = power(p, digits);
  if (const auto* q = std::get_if<mpq_class>(&value)) {
    if (*q == 0) throw Error(ErrorKind::InvalidArgument, "Hilbert symbol of zero");
    mpz_class num = q->get_num(), den = q->get_den();
    const long v = strip(num, p) - strip(den, p);
    const mpz_class u = mod(mod(num, modulus) * invert(den, modulus), modulus);
    return {v, u.get_ui()};
  }
  const auto& x = std::get<PadicNumber>(value);
  if (x.prime() != p) {
    throw Error(ErrorKind::InvalidArgument, "a " + std::to_string(x.prime()) + "-adic value at the place " +
                                                std::to_string(p));
  }
  if (x.is_zero()) throw Error(ErrorKind::InvalidArgument, "Hilbert symbol of zero");
  if (x.precision() < digits) {
    throw Error(ErrorKind::InsufficientPrecision, "unit must be known mod " + modulus.get_str());
  }
  return {x.valuation(), x.unit_mod(digits).get_ui()};
}

unsigned parity(long x) { return static_cast<unsigned>(((x % 2) + 2) % 2); }

std::uint64_t to_u64_bounded(const mpz_class& x) {
  const mpz_class a = abs(x);
  if (a > mpz_class(std::to_string(nt::kTrialFactorBound))) {
    throw Error(ErrorKind::FactorizationBound, a.get_str() + " exceeds the trial-division bound");
  }
  return std::stoull(a.get_str());
}

}  // namespace

PadicNumber PadicNumber::zero(unsigned long p, unsigned precision) {
  check_prime(p);
  check_precision(precision);
  return PadicNumber(p, true, 0, 0, precision);
}

PadicNumber PadicNumber::from_integer(const mpz_class& x, unsigned long p, unsigned precision) {
  return from_rational(mpq_class(x), p, precision);
}

PadicNumber PadicNumber::from_rational(const mpq_class& x, unsigned long p, unsigned precision) {
  check_prime(p);
  check_precision(precision);
  if (x == 0) return zero(p, precision);
  mpz_class num = x.get_num(), den = x.get_den();
  const long v = strip(num, p) - strip(den, p);
  const mpz_class m = power(p, precision);
  return PadicNumber(p, false, v, mod(mod(num, m) * invert(den, m), m), precision);
}

PadicNumber PadicNumber::from_parts(unsigned long p, long valuation, const mpz_class& unit, unsigned precision) {
  check_prime(p);
  check_precision(precision);
  const mpz_class m = power(p, precision);
  mpz_class u = mod(unit, m);
  if (mod(u, p) == 0) throw Error(ErrorKind::InvalidArgument, "unit part divisible by p");
  return PadicNumber(p, false, valuation, u, precision);
}

mpz_class PadicNumber::unit_mod(unsigned k) const {
  if (k > precision_) {
    throw Error(ErrorKind::InsufficientPrecision,
                "unit known to " + std::to_string(precision_) + " digits, asked for " + std::to_string(k));
  }
  return mod(unit_, power(p_, k));
}

mpz_class PadicNumber::unit_modulus() const { return power(p_, precision_); }

std::string PadicNumber::to_string() const {
  std::ostringstream os;
  if (zero_) {
    os << "0 (Q_" << p_ << ")";
  } else {
    os << p_ << "^" << valuation_ << " * " << unit_.get_str() << " + O(" << p_ << "^" << valuation_ + precision_
       << ")";
  }
  return os.str();
}

PadicNumber operator+(const PadicNumber& x, const PadicNumber& y) {
  check_same_prime(x, y);
  if (x.is_zero()) return y;
  if (y.is_zero()) return x;
  const unsigned long p = x.prime();
  const long v = std::min(x.valuation(), y.valuation());
  const long absolute = std::min(x.valuation() + long(x.precision()), y.valuation() + long(y.precision()));
  const auto digits = static_cast<unsigned long>(absolute - v);
  const mpz_class m = power(p, digits);
  mpz_class s = mod(x.unit() * power(p, x.valuation() - v) + y.unit() * power(p, y.valuation() - v), m);
  if (s == 0) {
    throw Error(ErrorKind::PrecisionExhausted,
                "sum cancels to zero modulo p^" + std::to_string(absolute) + " in Q_" + std::to_string(p));
  }
  const long w = strip(s, p);
  return PadicNumber::from_parts(p, v + w, s, static_cast<unsigned>(digits - w));
}

PadicNumber operator-(const PadicNumber& x) {
  if (x.is_zero()) return x;
  return PadicNumber::from_parts(x.prime(), x.valuation(), x.unit_modulus() - x.unit(), x.precision());
}

PadicNumber operator-(const PadicNumber& x, const PadicNumber& y) { return x + (-y); }

PadicNumber operator*(const PadicNumber& x, const PadicNumber& y) {
  check_same_prime(x, y);
  const unsigned n = std::min(x.precision(), y.precision());
  if (x.is_zero() || y.is_zero()) return PadicNumber::zero(x.prime(), n);
  return PadicNumber::from_parts(x.prime(), x.valuation() + y.valuation(),
                                 mod(x.unit() * y.unit(), power(x.prime(), n)), n);
}

PadicNumber inverse(const PadicNumber& x) {
  if (x.is_zero()) throw Error(ErrorKind::DivisionByZero, "inverse of zero");
  return PadicNumber::from_parts(x.prime(), -x.valuation(), invert(x.unit(), x.unit_modulus()), x.precision());
}

PadicNumber operator/(const PadicNumber& x, const PadicNumber& y) { return x * inverse(y); }

bool agree(const PadicNumber& x, const PadicNumber& y) {
  check_same_prime(x, y);
  if (x.is_zero() || y.is_zero()) return x.is_zero() && y.is_zero();
  if (x.valuation() != y.valuation()) return false;
  const unsigned n = std::min(x.precision(), y.precision());
  return x.unit_mod(n) == y.unit_mod(n);
}

std::optional<PadicNumber> hensel_sqrt(const PadicNumber& x) {
  if (x.is_zero()) throw Error(ErrorKind::InvalidArgument, "hensel_sqrt of zero");
  const unsigned long p = x.prime();
  if (p == 2 && x.precision() < 4) {
    throw Error(ErrorKind::InsufficientPrecision, "2-adic square roots need at least 4 digits");
  }
  if (parity(x.valuation()) != 0) return std::nullopt;
  const long half = x.valuation() / 2;
  const unsigned n = x.precision();
  const mpz_class& u = x.unit();

  if (p == 2) {
    if (mod(u, 8) != 1) return std::nullopt;
    // Invariant: r^2 = u mod 2^k.
    mpz_class r = 1;
    for (unsigned k = 3; k < n; ++k) {
      if (mod(r * r - u, power(2, k + 1)) != 0) r += power(2, k - 1);
    }
    const mpz_class m = power(2, n - 1);
    r = mod(r, m);
    if (mod(r, 4) == 3) r = m - r;
    if (mod(r * r - u, power(2, n)) != 0) throw Error(ErrorKind::InternalInvariant, "2-adic lift failed");
    return PadicNumber::from_parts(2, half, r, n - 1);
  }

  const std::uint64_t u0 = mod(u, p).get_ui();
  if (nt::legendre(u0, p) != 1) return std::nullopt;
  // Tonelli-Shanks for the residue root.
  std::uint64_t q = p - 1, s = 0;
  while (q % 2 == 0) {
    q /= 2;
    ++s;
  }
  std::uint64_t z = 2;
  while (nt::legendre(z, p) != -1) ++z;
  std::uint64_t mm = s, c = nt::pow_mod(z, q, p), t = nt::pow_mod(u0, q, p), r0 = nt::pow_mod(u0, (q + 1) / 2, p);
  while (t != 1) {
    std::uint64_t i = 0, tt = t;
    while (tt != 1) {
      tt = nt::mul_mod(tt, tt, p);
      ++i;
    }
    std::uint64_t b = c;
    for (std::uint64_t j = 0; j + i + 1 < mm; ++j) b = nt::mul_mod(b, b, p);
    mm = i;
    c = nt::mul_mod(b, b, p);
    t = nt::mul_mod(t, c, p);
    r0 = nt::mul_mod(r0, b, p);
  }
  if (p - r0 < r0) r0 = p - r0;
  // Newton: r <- r - (r^2 - u) / (2r), quadratic convergence.
  const mpz_class m = power(p, n);
  mpz_class r = r0;
  for (unsigned known = 1; known < n; known *= 2) {
    r = mod(r - (r * r - u) * invert(2 * r, m), m);
  }
  if (mod(r * r - u, m) != 0) throw Error(ErrorKind::InternalInvariant, "p-adic Newton lift failed");
  return PadicNumber::from_parts(p, half, r, n);
}

int hilbert_symbol(const LocalValue& a, const LocalValue& b, Place place) {
  if (place.is_infinite()) {
    const auto* qa = std::get_if<mpq_class>(&a);
    const auto* qb = std::get_if<mpq_class>(&b);
    if (!qa || !qb) throw Error(ErrorKind::InvalidArgument, "p-adic value at the infinite place");
    if (*qa == 0 || *qb == 0) throw Error(ErrorKind::InvalidArgument, "Hilbert symbol of zero");
    return (*qa < 0 && *qb < 0) ? -1 : 1;
  }
  const std::uint64_t p = place.prime;
  if (!nt::is_prime(p)) throw Error(ErrorKind::NotPrime, std::to_string(p) + " is not prime");
  const auto x = local_unit(a, p);
  const auto y = local_unit(b, p);
  const unsigned alpha = parity(x.valuation), beta = parity(y.valuation);
  if (p == 2) {
    auto eps = [](std::uint64_t u) { return static_cast<unsigned>(((u - 1) / 2) % 2); };
    auto omega = [](std::uint64_t u) { return static_cast<unsigned>(((u * u - 1) / 8) % 2); };
    const unsigned e = eps(x.unit) * eps(y.unit) + alpha * omega(y.unit) + beta * omega(x.unit);
    return e % 2 == 0 ? 1 : -1;
  }
  int s = (alpha * beta * (((p - 1) / 2) % 2)) % 2 == 0 ? 1 : -1;
  if (beta) s *= nt::legendre(x.unit, p);
  if (alpha) s *= nt::legendre(y.unit, p);
  return s;
}

bool sum_of_two_squares_q2(const LocalValue& s) { return hilbert_symbol(s, mpq_class(-1), Place::at(2)) == 1; }

std::vector<Place> QuaternionReport::ramified() const {
  std::vector<Place> out;
  for (const auto& ps : symbols) {
    if (ps.symbol == -1) out.push_back(ps.place);
  }
  return out;
}

std::vector<std::uint64_t> odd_prime_support(const mpq_class& x) {
  std::set<std::uint64_t> primes;
  for (const mpz_class& part : {mpz_class(x.get_num()), mpz_class(x.get_den())}) {
    const auto n = to_u64_bounded(part);
    if (n == 0) continue;
    for (auto [q, e] : nt::factorize(n)) {
      if (q != 2) primes.insert(q);
    }
  }
  return {primes.begin(), primes.end()};
}

QuaternionReport quaternion_splits_q(const mpq_class& a, const mpq_class& b) {
  if (a == 0 || b == 0) throw Error(ErrorKind::InvalidArgument, "quaternion algebra with a zero entry");
  std::set<std::uint64_t> odd;
  for (auto q : odd_prime_support(a)) odd.insert(q);
  for (auto q : odd_prime_support(b)) odd.insert(q);
  QuaternionReport report;
  std::vector<Place> places{Place::infinite(), Place::at(2)};
  for (auto q : odd) places.push_back(Place::at(q));
  int product = 1;
  for (auto v : places) {
    const int s = hilbert_symbol(a, b, v);
    report.symbols.push_back({v, s});
    product *= s;
    if (s == -1) report.splits = false;
  }
  if (product != 1) {
    throw Error(ErrorKind::ReciprocityViolation,
                "product of local symbols is -1 for (" + a.get_str() + ", " + b.get_str() + ")");
  }
  return report;
}

}  // namespace cyclo
