#include "cyclo/cohomology.hpp"

#include <numeric>
#include <sstream>

#include "cyclo/error.hpp"

namespace cyclo {
namespace {

void check_divides(std::uint32_t b, std::uint32_t a) {
  if (b == 0 || a % b != 0) {
    throw Error(ErrorKind::DoesNotDivide, std::to_string(b) + " does not divide " + std::to_string(a));
  }
}

void check_positive(std::uint32_t a, std::uint32_t r) {
  if (a == 0 || r == 0) throw Error(ErrorKind::InvalidArgument, "group and coefficient orders must be >= 1");
}

}  // namespace

Cocycle2::Cocycle2(std::uint32_t a, std::uint32_t r, std::vector<std::uint32_t> table)
    : a_(a), r_(r), table_(std::move(table)) {
  check_positive(a, r);
  if (table_.size() != std::size_t{a} * a) {
    throw Error(ErrorKind::DimensionMismatch, "cocycle table must have a*a entries");
  }
  for (auto& v : table_) v %= r_;
}

Cocycle2 Cocycle2::zero(std::uint32_t a, std::uint32_t r) {
  return Cocycle2(a, r, std::vector<std::uint32_t>(std::size_t{a} * a, 0));
}

std::string Cocycle2::to_string() const {
  std::ostringstream os;
  for (std::uint32_t i = 0; i < a_; ++i) {
    for (std::uint32_t j = 0; j < a_; ++j) os << (j ? " " : "") << (*this)(i, j);
    os << "\n";
  }
  return os.str();
}

Cocycle2 carrying_cocycle(std::uint32_t a, std::uint32_t b, std::uint32_t r) {
  check_positive(a, r);
  check_divides(b, a);
  std::vector<std::uint32_t> table(std::size_t{a} * a);
  for (std::uint32_t i = 0; i < a; ++i) {
    for (std::uint32_t j = 0; j < a; ++j) {
      const std::uint32_t carry = (i + j) / b - i / b - j / b;
      table[std::size_t{i} * a + j] = carry % r;
    }
  }
  return Cocycle2(a, r, std::move(table));
}

Cocycle2 scale_cocycle(const Cocycle2& c, std::uint64_t q) {
  const std::uint64_t r = c.coeff_order();
  std::vector<std::uint32_t> table = c.table();
  for (auto& v : table) v = static_cast<std::uint32_t>((q % r) * v % r);
  return Cocycle2(c.group_order(), c.coeff_order(), std::move(table));
}

Cocycle2 psi_cocycle(std::uint32_t a, std::uint32_t b, std::uint32_t r) { return carrying_cocycle(a, b, r); }

Cocycle2 phi_cocycle(std::uint32_t a, std::uint32_t b, std::uint32_t r) {
  check_divides(b, a);
  return scale_cocycle(carrying_cocycle(a, a, r), a / b);
}

bool is_cocycle(const Cocycle2& c) {
  const std::uint32_t a = c.group_order(), r = c.coeff_order();
  for (std::uint32_t i = 0; i < a; ++i) {
    if (c(0, i) != 0 || c(i, 0) != 0) return false;
  }
  for (std::uint32_t i = 0; i < a; ++i) {
    for (std::uint32_t j = 0; j < a; ++j) {
      for (std::uint32_t k = 0; k < a; ++k) {
        const std::uint32_t lhs = (c(i, j) + c(i + j, k)) % r;
        const std::uint32_t rhs = (c(j, k) + c(i, j + k)) % r;
        if (lhs != rhs) return false;
      }
    }
  }
  return true;
}

Cocycle2 restrict_cocycle(const Cocycle2& c, std::uint32_t index) {
  check_divides(index, c.group_order());
  const std::uint32_t sub = c.group_order() / index;
  std::vector<std::uint32_t> table(std::size_t{sub} * sub);
  for (std::uint32_t x = 0; x < sub; ++x) {
    for (std::uint32_t y = 0; y < sub; ++y) table[std::size_t{x} * sub + y] = c(index * x, index * y);
  }
  return Cocycle2(sub, c.coeff_order(), std::move(table));
}

std::uint32_t h2_invariant(const Cocycle2& c) {
  if (!is_cocycle(c)) throw Error(ErrorKind::NotACocycle, "h2_invariant needs a normalized cocycle");
  const std::uint32_t g = std::gcd(c.group_order(), c.coeff_order());
  std::uint64_t sum = 0;
  for (std::uint32_t i = 0; i < c.group_order(); ++i) sum += c(i, 1);
  return static_cast<std::uint32_t>(sum % g);
}

std::optional<std::vector<std::uint32_t>> cohomologous_bruteforce(const Cocycle2& c1, const Cocycle2& c2) {
  const std::uint32_t a = c1.group_order(), r = c1.coeff_order();
  if (c2.group_order() != a || c2.coeff_order() != r) {
    throw Error(ErrorKind::DimensionMismatch, "cocycles over different (a, r)");
  }
  double space = 1;
  for (std::uint32_t i = 1; i < a; ++i) space *= r;
  if (space > 1e6) throw Error(ErrorKind::SearchSpaceTooLarge, "r^(a-1) exceeds 10^6");

  std::vector<std::uint32_t> diff(std::size_t{a} * a);
  for (std::uint32_t i = 0; i < a; ++i) {
    for (std::uint32_t j = 0; j < a; ++j) diff[std::size_t{i} * a + j] = (c1(i, j) + r - c2(i, j)) % r;
  }
  // f(0) = 0; odometer over f(1..a-1), least significant digit last so the
  // first hit is lexicographically least.
  std::vector<std::uint32_t> f(a, 0);
  while (true) {
    bool ok = true;
    for (std::uint32_t i = 0; i < a && ok; ++i) {
      for (std::uint32_t j = 0; j < a; ++j) {
        const std::uint32_t cob = (f[i] + f[j] + r - f[(i + j) % a]) % r;
        if (cob != diff[std::size_t{i} * a + j]) {
          ok = false;
          break;
        }
      }
    }
    if (ok) return f;
    std::uint32_t pos = a;
    while (pos > 1) {
      --pos;
      if (++f[pos] < r) break;
      f[pos] = 0;
      if (pos == 1) return std::nullopt;
    }
    if (a <= 1) return std::nullopt;
  }
}

ExtensionGroup::ExtensionGroup(Cocycle2 c) : c_(std::move(c)) {
  if (!is_cocycle(c_)) throw Error(ErrorKind::NotACocycle, "extension_group needs a normalized cocycle");
  const std::uint64_t n = order();
  if (n * n * n <= 20'000'000) {
    const auto all = elements();
    for (auto x : all) {
      for (auto y : all) {
        const auto xy = mul(x, y);
        for (auto z : all) {
          if (mul(xy, z) != mul(x, mul(y, z))) {
            throw Error(ErrorKind::InternalInvariant, "twisted product is not associative");
          }
        }
      }
    }
  } else {
    // M is central and enters additively, so triples (0, g) decide it.
    const std::uint32_t a = c_.group_order();
    for (std::uint32_t i = 0; i < a; ++i) {
      for (std::uint32_t j = 0; j < a; ++j) {
        for (std::uint32_t k = 0; k < a; ++k) {
          const Element x{0, i}, y{0, j}, z{0, k};
          if (mul(mul(x, y), z) != mul(x, mul(y, z))) {
            throw Error(ErrorKind::InternalInvariant, "twisted product is not associative");
          }
        }
      }
    }
  }
}

ExtensionGroup::Element ExtensionGroup::mul(Element x, Element y) const {
  const std::uint32_t a = c_.group_order(), r = c_.coeff_order();
  return {(x.m + y.m + c_(x.g, y.g)) % r, (x.g + y.g) % a};
}

ExtensionGroup::Element ExtensionGroup::inverse(Element x) const {
  const std::uint32_t a = c_.group_order(), r = c_.coeff_order();
  const std::uint32_t g = (a - x.g) % a;
  // (m, g)(m', g') = (0, 0) with g' = -g: m' = -m - c(g, g').
  return {(2 * r - x.m - c_(x.g, g)) % r, g};
}

ExtensionGroup::Element ExtensionGroup::pow(Element x, std::uint64_t k) const {
  Element result = identity();
  while (k > 0) {
    if (k & 1) result = mul(result, x);
    x = mul(x, x);
    k >>= 1;
  }
  return result;
}

std::uint64_t ExtensionGroup::element_order(Element x) const {
  Element y = x;
  std::uint64_t k = 1;
  while (y != identity()) {
    y = mul(y, x);
    ++k;
  }
  return k;
}

std::vector<ExtensionGroup::Element> ExtensionGroup::elements() const {
  std::vector<Element> out;
  out.reserve(order());
  for (std::uint32_t g = 0; g < c_.group_order(); ++g) {
    for (std::uint32_t m = 0; m < c_.coeff_order(); ++m) out.push_back({m, g});
  }
  return out;
}

bool ExtensionGroup::is_cyclic() const {
  for (auto x : elements()) {
    if (element_order(x) == order()) return true;
  }
  return false;
}

bool isomorphic_exhaustive(const ExtensionGroup& h1, const ExtensionGroup& h2) {
  using Element = ExtensionGroup::Element;
  if (h1.order() != h2.order()) return false;
  if (h1.order() > 64) throw Error(ErrorKind::SearchSpaceTooLarge, "isomorphism search limited to order 64");
  const std::uint32_t a = h1.cocycle().group_order(), r = h1.cocycle().coeff_order();
  const Element x{0, 1 % a}, z{1 % r, 0};
  const auto ox = h1.element_order(x), oz = h1.element_order(z);
  // s[g]: x^g = (s[g], g) in h1.
  std::vector<std::uint32_t> s(a);
  for (std::uint32_t g = 0; g < a; ++g) s[g] = h1.pow(x, g).m;

  const auto all1 = h1.elements();
  const auto all2 = h2.elements();
  for (auto big_x : all2) {
    if (h2.element_order(big_x) != ox) continue;
    for (auto big_z : all2) {
      if (h2.element_order(big_z) != oz) continue;
      std::vector<Element> image(all1.size());
      std::vector<bool> hit(all2.size(), false);
      bool injective = true;
      for (auto e : all1) {
        const std::uint32_t zpow = (e.m + r - s[e.g]) % r;
        const auto y = h2.mul(h2.pow(big_z, zpow), h2.pow(big_x, e.g));
        image[h1.index_of(e)] = y;
        if (hit[h2.index_of(y)]) {
          injective = false;
          break;
        }
        hit[h2.index_of(y)] = true;
      }
      if (!injective) continue;
      bool hom = true;
      for (auto u : all1) {
        for (auto v : all1) {
          if (image[h1.index_of(h1.mul(u, v))] != h2.mul(image[h1.index_of(u)], image[h1.index_of(v)])) {
            hom = false;
            break;
          }
        }
        if (!hom) break;
      }
      if (hom) return true;
    }
  }
  return false;
}

ExtensionGroup::Element gamma_map(ExtensionGroup::Element x, std::uint32_t b, std::uint32_t r) {
  return {(x.m + x.g / b) % r, x.g};
}

GammaVerification gamma_isomorphism(std::uint32_t a, std::uint32_t b, std::uint32_t r) {
  check_positive(a, r);
  check_divides(b, a);
  const ExtensionGroup h_phi(phi_cocycle(a, b, r));
  const ExtensionGroup h_psi(psi_cocycle(a, b, r));
  GammaVerification v;
  v.a = a;
  v.b = b;
  v.r = r;
  v.q = a / b;

  const auto all = h_phi.elements();
  v.homomorphism = true;
  for (auto x : all) {
    for (auto y : all) {
      ++v.pairs_checked;
      if (gamma_map(h_phi.mul(x, y), b, r) != h_psi.mul(gamma_map(x, b, r), gamma_map(y, b, r))) {
        v.homomorphism = false;
      }
    }
  }
  std::vector<bool> hit(h_psi.order(), false);
  v.bijective = true;
  v.fixes_kernel = true;
  v.identity_on_quotient = true;
  for (auto x : all) {
    const auto y = gamma_map(x, b, r);
    if (hit[h_psi.index_of(y)]) v.bijective = false;
    hit[h_psi.index_of(y)] = true;
    if (x.g == 0 && y != x) v.fixes_kernel = false;
    if (y.g != x.g) v.identity_on_quotient = false;
  }
  if (!v.ok()) {
    throw Error(ErrorKind::VerificationFailed, "gamma is not an isomorphism of extensions for a=" +
                                                   std::to_string(a) + " b=" + std::to_string(b) +
                                                   " r=" + std::to_string(r));
  }
  return v;
}

}  // namespace cyclo
