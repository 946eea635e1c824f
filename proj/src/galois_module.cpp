#include "cyclo/galois_module.hpp"

#include <algorithm>
#include <random>
#include <sstream>

#include "cyclo/error.hpp"
#include "cyclo/numtheory.hpp"

namespace cyclo {
namespace {

std::uint64_t group_order_of(Residue p, unsigned n) {
  auto order = nt::checked_pow(p, n);
  if (!order) throw Error(ErrorKind::InvalidArgument, "p^n overflows 64 bits");
  return *order;
}

// Keeps the nonzero rows of the reduced echelon form.
FpMatrix row_basis(const FpMatrix& rows) {
  auto ef = row_reduce(rows);
  FpMatrix out(rows.modulus(), ef.pivot_cols.size(), rows.cols());
  for (std::size_t r = 0; r < out.rows(); ++r) {
    std::copy(ef.reduced.row(r).begin(), ef.reduced.row(r).end(), out.row(r).begin());
  }
  return out;
}

}  // namespace

GModule::GModule(Residue p, unsigned n, FpMatrix sigma)
    : p_(p), n_(n), order_(group_order_of(p, n)), sigma_(std::move(sigma)) {
  if (n_ < 1) throw Error(ErrorKind::InvalidArgument, "tower height n must be >= 1");
  if (sigma_.modulus() != p_) throw Error(ErrorKind::ModulusMismatch, "sigma is not over F_p");
  if (!sigma_.square()) throw Error(ErrorKind::DimensionMismatch, "sigma must be square");
  if (rank(sigma_) != sigma_.rows()) throw Error(ErrorKind::NotInvertible, "sigma is singular");
  if (mat_pow(sigma_, order_) != FpMatrix::identity(p_, sigma_.rows())) {
    throw Error(ErrorKind::OrderViolation, "sigma^" + std::to_string(order_) + " != I");
  }
}

JordanProfile make_profile(std::vector<std::size_t> sizes) {
  std::sort(sizes.begin(), sizes.end(), std::greater<>());
  JordanProfile prof;
  for (auto s : sizes) prof.total += s;
  prof.sizes = std::move(sizes);
  return prof;
}

std::string Theorem1Shape::to_string() const {
  std::ostringstream os;
  os << "free_ranks=[";
  for (std::size_t i = 0; i < free_ranks.size(); ++i) os << (i ? "," : "") << free_ranks[i];
  os << "]";
  if (exceptional) os << " exceptional=(m=" << exceptional->m << ", dim=" << exceptional->dim << ")";
  return os.str();
}

std::vector<std::size_t> rank_sequence(const GModule& m) {
  const Residue p = m.p();
  const std::size_t dim = m.dim();
  const FpMatrix nilpotent_t = transpose(m.sigma() - FpMatrix::identity(p, dim));
  // Rows of `image` span im (sigma - I)^k, stored transposed.
  FpMatrix image = FpMatrix::identity(p, dim);
  std::vector<std::size_t> ranks{dim};
  while (ranks.back() > 0) {
    image = row_basis(mat_mul(image, nilpotent_t));
    ranks.push_back(image.rows());
    if (ranks.size() > m.group_order() + 1) {
      throw Error(ErrorKind::InternalInvariant, "sigma - I is not nilpotent of index <= p^n");
    }
  }
  return ranks;
}

JordanProfile jordan_profile(const GModule& m) {
  const auto r = rank_sequence(m);
  auto at = [&](std::size_t k) -> std::int64_t { return k < r.size() ? static_cast<std::int64_t>(r[k]) : 0; };
  std::vector<std::size_t> sizes;
  std::int64_t prev_drop = -1;
  for (std::size_t k = 1; k < r.size(); ++k) {
    const std::int64_t drop = at(k - 1) - at(k);
    if (prev_drop >= 0 && drop > prev_drop) {
      throw Error(ErrorKind::InternalInvariant, "rank sequence is not convex");
    }
    prev_drop = drop;
    const std::int64_t exactly_k = at(k - 1) - 2 * at(k) + at(k + 1);
    for (std::int64_t i = 0; i < exactly_k; ++i) sizes.push_back(k);
  }
  auto prof = make_profile(std::move(sizes));
  if (prof.total != m.dim()) throw Error(ErrorKind::InternalInvariant, "profile does not sum to dim");
  return prof;
}

Theorem1Shape canonical_shape(Theorem1Shape shape, Residue p, unsigned n) {
  if (p == 2 && !shape.exceptional && shape.free_ranks.size() > 1 && shape.free_ranks[1] > 0) {
    shape.free_ranks[1] -= 1;
    shape.exceptional = ExceptionalSummand{0, 2};
  }
  (void)n;
  return shape;
}

Theorem1Shape classify_theorem1(const JordanProfile& profile, Residue p, unsigned n) {
  const std::uint64_t top = group_order_of(p, n);
  Theorem1Shape shape;
  shape.free_ranks.assign(n + 1, 0);
  std::vector<std::size_t> odd_sizes;
  for (auto size : profile.sizes) {
    if (size == 0 || size > top) {
      throw Error(ErrorKind::NotRealizable, "block size " + std::to_string(size) + " outside [1, p^n]");
    }
    unsigned k = 0;
    if (nt::is_power_of(size, p, &k)) {
      shape.free_ranks[k] += 1;
    } else {
      odd_sizes.push_back(size);
    }
  }
  if (odd_sizes.size() > 1) {
    throw Error(ErrorKind::NotRealizable, std::to_string(odd_sizes.size()) + " summands of non-p-power dimension");
  }
  if (odd_sizes.size() == 1) {
    unsigned m = 0;
    if (!nt::is_power_of(odd_sizes.front() - 1, p, &m) || m >= n) {
      throw Error(ErrorKind::NotRealizable,
                  "dimension " + std::to_string(odd_sizes.front()) + " is not p^m+1 with m < n");
    }
    shape.exceptional = ExceptionalSummand{m, odd_sizes.front()};
  }
  return canonical_shape(std::move(shape), p, n);
}

FpMatrix jordan_block(Residue p, std::size_t size) {
  FpMatrix block = FpMatrix::identity(p, size);
  for (std::size_t i = 0; i + 1 < size; ++i) block.set(i, i + 1, 1);
  return block;
}

GModule synthesize(const Theorem1Shape& shape, Residue p, unsigned n) {
  if (shape.free_ranks.size() != n + 1) {
    throw Error(ErrorKind::InvalidShape, "expected " + std::to_string(n + 1) + " free ranks");
  }
  std::vector<FpMatrix> blocks;
  if (shape.exceptional) {
    const auto& x = *shape.exceptional;
    auto expected = nt::checked_pow(p, x.m);
    if (x.m >= n || !expected || x.dim != *expected + 1) {
      throw Error(ErrorKind::InvalidShape, "exceptional summand must have m < n and dim p^m+1");
    }
    blocks.push_back(jordan_block(p, x.dim));
  }
  for (unsigned i = n + 1; i-- > 0;) {
    const auto size = group_order_of(p, i);
    for (std::size_t c = 0; c < shape.free_ranks[i]; ++c) blocks.push_back(jordan_block(p, size));
  }
  return GModule(p, n, block_diagonal(p, blocks));
}

MValue m_from_shape(const Theorem1Shape& shape) {
  if (shape.exceptional) return MValue::finite(static_cast<int>(shape.exceptional->m));
  return MValue::undetermined();
}

GModule conjugate(const GModule& m, const FpMatrix& q) {
  return GModule(m.p(), m.n(), mat_mul(mat_mul(inverse(q), m.sigma()), q));
}

FpMatrix random_invertible(Residue p, std::size_t dim, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<Residue> entry(0, p - 1);
  while (true) {
    FpMatrix q(p, dim, dim);
    for (std::size_t r = 0; r < dim; ++r) {
      for (std::size_t c = 0; c < dim; ++c) q.set(r, c, entry(rng));
    }
    if (rank(q) == dim) return q;
  }
}

RandomModule random_gmodule_with_blocks(Residue p, unsigned n, std::size_t dim, std::uint64_t seed) {
  if (dim < 1) throw Error(ErrorKind::InvalidArgument, "dim must be >= 1");
  const std::uint64_t top = group_order_of(p, n);
  std::mt19937_64 rng(seed);
  std::vector<std::size_t> sizes;
  std::size_t left = dim;
  while (left > 0) {
    const std::size_t hi = static_cast<std::size_t>(std::min<std::uint64_t>(top, left));
    const std::size_t size = std::uniform_int_distribution<std::size_t>(1, hi)(rng);
    sizes.push_back(size);
    left -= size;
  }
  std::vector<FpMatrix> blocks;
  for (auto s : sizes) blocks.push_back(jordan_block(p, s));
  GModule plain(p, n, block_diagonal(p, blocks));
  return RandomModule{conjugate(plain, random_invertible(p, dim, rng())), std::move(sizes)};
}

GModule random_gmodule(Residue p, unsigned n, std::size_t dim, std::uint64_t seed) {
  return random_gmodule_with_blocks(p, n, dim, seed).module;
}

}  // namespace cyclo
