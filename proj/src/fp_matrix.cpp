#include "cyclo/fp_matrix.hpp"

#include <sstream>

#include "cyclo/error.hpp"
#include "cyclo/numtheory.hpp"

namespace cyclo {
namespace {

Residue reduce(std::int64_t v, Residue p) {
  std::int64_t r = v % static_cast<std::int64_t>(p);
  return static_cast<Residue>(r < 0 ? r + p : r);
}

void check_modulus(Residue p) {
  if (p >= (1u << 31) || !nt::is_prime(p)) {
    throw Error(ErrorKind::NotPrime, "modulus " + std::to_string(p) + " is not a prime below 2^31");
  }
}

void check_same(const FpMatrix& a, const FpMatrix& b) {
  if (a.modulus() != b.modulus()) {
    throw Error(ErrorKind::ModulusMismatch,
                std::to_string(a.modulus()) + " vs " + std::to_string(b.modulus()));
  }
}

Residue inv(Residue a, Residue p) { return static_cast<Residue>(*nt::inv_mod(a, p)); }

}  // namespace

FpMatrix::FpMatrix(Residue p, std::size_t rows, std::size_t cols)
    : p_(p), rows_(rows), cols_(cols), data_(rows * cols, 0) {
  check_modulus(p);
}

FpMatrix::FpMatrix(Residue p, const std::vector<std::vector<std::int64_t>>& rows)
    : FpMatrix(p, rows.size(), rows.empty() ? 0 : rows.front().size()) {
  for (std::size_t r = 0; r < rows_; ++r) {
    if (rows[r].size() != cols_) throw Error(ErrorKind::DimensionMismatch, "ragged matrix rows");
    for (std::size_t c = 0; c < cols_; ++c) data_[r * cols_ + c] = reduce(rows[r][c], p);
  }
}

FpMatrix::FpMatrix(Residue p, std::initializer_list<std::initializer_list<std::int64_t>> rows)
    : FpMatrix(p, std::vector<std::vector<std::int64_t>>(rows.begin(), rows.end())) {}

FpMatrix FpMatrix::identity(Residue p, std::size_t n) {
  FpMatrix m(p, n, n);
  for (std::size_t i = 0; i < n; ++i) m.data_[i * n + i] = 1;
  return m;
}

void FpMatrix::set(std::size_t r, std::size_t c, std::int64_t v) { data_[r * cols_ + c] = reduce(v, p_); }

bool FpMatrix::is_zero() const {
  for (auto x : data_) {
    if (x != 0) return false;
  }
  return true;
}

std::string FpMatrix::to_string() const {
  std::ostringstream os;
  os << "[";
  for (std::size_t r = 0; r < rows_; ++r) {
    os << (r ? ", [" : "[");
    for (std::size_t c = 0; c < cols_; ++c) os << (c ? ", " : "") << (*this)(r, c);
    os << "]";
  }
  os << "]";
  return os.str();
}

FpMatrix operator+(const FpMatrix& a, const FpMatrix& b) {
  check_same(a, b);
  if (a.rows() != b.rows() || a.cols() != b.cols()) throw Error(ErrorKind::DimensionMismatch, "matrix sum");
  FpMatrix out = a;
  for (std::size_t r = 0; r < a.rows(); ++r) kernels::axpy_mod(out.row(r), b.row(r), 1, a.modulus());
  return out;
}

FpMatrix operator-(const FpMatrix& a, const FpMatrix& b) {
  check_same(a, b);
  if (a.rows() != b.rows() || a.cols() != b.cols()) throw Error(ErrorKind::DimensionMismatch, "matrix difference");
  FpMatrix out = a;
  for (std::size_t r = 0; r < a.rows(); ++r) kernels::axpy_mod(out.row(r), b.row(r), a.modulus() - 1, a.modulus());
  return out;
}

FpMatrix mat_mul(const FpMatrix& a, const FpMatrix& b) {
  check_same(a, b);
  if (a.cols() != b.rows()) {
    throw Error(ErrorKind::DimensionMismatch, std::to_string(a.rows()) + "x" + std::to_string(a.cols()) + " times " +
                                                  std::to_string(b.rows()) + "x" + std::to_string(b.cols()));
  }
  const Residue p = a.modulus();
  FpMatrix out(p, a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    auto dst = out.row(i);
    for (std::size_t k = 0; k < a.cols(); ++k) {
      kernels::axpy_mod(dst, b.row(k), a(i, k), p);
    }
  }
  return out;
}

FpMatrix operator*(const FpMatrix& a, const FpMatrix& b) { return mat_mul(a, b); }

FpVector mat_vec(const FpMatrix& a, std::span<const Residue> v) {
  if (v.size() != a.cols()) throw Error(ErrorKind::DimensionMismatch, "matrix-vector product");
  FpVector out(a.rows(), 0);
  const std::uint64_t p = a.modulus();
  for (std::size_t i = 0; i < a.rows(); ++i) {
    std::uint64_t acc = 0;
    for (std::size_t k = 0; k < a.cols(); ++k) acc = (acc + std::uint64_t{a(i, k)} * v[k]) % p;
    out[i] = static_cast<Residue>(acc);
  }
  return out;
}

FpMatrix mat_pow(const FpMatrix& a, std::uint64_t k) {
  if (!a.square()) throw Error(ErrorKind::DimensionMismatch, "mat_pow of a non-square matrix");
  FpMatrix result = FpMatrix::identity(a.modulus(), a.rows());
  FpMatrix base = a;
  while (k > 0) {
    if (k & 1) result = mat_mul(result, base);
    k >>= 1;
    if (k > 0) base = mat_mul(base, base);
  }
  return result;
}

EchelonForm row_reduce(FpMatrix a) {
  const Residue p = a.modulus();
  std::vector<std::size_t> pivots;
  std::size_t pivot_row = 0;
  for (std::size_t col = 0; col < a.cols() && pivot_row < a.rows(); ++col) {
    std::size_t found = a.rows();
    for (std::size_t r = pivot_row; r < a.rows(); ++r) {
      if (a(r, col) != 0) {
        found = r;
        break;
      }
    }
    if (found == a.rows()) continue;
    if (found != pivot_row) {
      auto x = a.row(found);
      auto y = a.row(pivot_row);
      std::swap_ranges(x.begin(), x.end(), y.begin());
    }
    kernels::scale_mod(a.row(pivot_row), inv(a(pivot_row, col), p), p);
    for (std::size_t r = 0; r < a.rows(); ++r) {
      if (r == pivot_row) continue;
      const Residue f = a(r, col);
      if (f != 0) kernels::axpy_mod(a.row(r), a.row(pivot_row), p - f, p);
    }
    pivots.push_back(col);
    ++pivot_row;
  }
  return {std::move(a), std::move(pivots)};
}

std::size_t rank(const FpMatrix& a) { return row_reduce(a).pivot_cols.size(); }

std::vector<FpVector> kernel_basis(const FpMatrix& a) {
  const auto ef = row_reduce(a);
  const Residue p = a.modulus();
  std::vector<bool> is_pivot(a.cols(), false);
  for (auto c : ef.pivot_cols) is_pivot[c] = true;
  std::vector<FpVector> basis;
  for (std::size_t free = 0; free < a.cols(); ++free) {
    if (is_pivot[free]) continue;
    FpVector v(a.cols(), 0);
    v[free] = 1;
    for (std::size_t i = 0; i < ef.pivot_cols.size(); ++i) {
      const Residue e = ef.reduced(i, free);
      v[ef.pivot_cols[i]] = e == 0 ? 0 : p - e;
    }
    basis.push_back(std::move(v));
  }
  return basis;
}

FpMatrix inverse(const FpMatrix& a) {
  if (!a.square()) throw Error(ErrorKind::DimensionMismatch, "inverse of a non-square matrix");
  const std::size_t n = a.rows();
  FpMatrix aug(a.modulus(), n, 2 * n);
  for (std::size_t r = 0; r < n; ++r) {
    for (std::size_t c = 0; c < n; ++c) aug.set(r, c, a(r, c));
    aug.set(r, n + r, 1);
  }
  auto ef = row_reduce(std::move(aug));
  if (n > 0 && (ef.pivot_cols.size() < n || ef.pivot_cols[n - 1] != n - 1)) {
    throw Error(ErrorKind::NotInvertible, "singular matrix");
  }
  FpMatrix out(a.modulus(), n, n);
  for (std::size_t r = 0; r < n; ++r) {
    for (std::size_t c = 0; c < n; ++c) out.set(r, c, ef.reduced(r, n + c));
  }
  return out;
}

FpMatrix transpose(const FpMatrix& a) {
  FpMatrix out(a.modulus(), a.cols(), a.rows());
  for (std::size_t r = 0; r < a.rows(); ++r) {
    for (std::size_t c = 0; c < a.cols(); ++c) out.set(c, r, a(r, c));
  }
  return out;
}

FpMatrix block_diagonal(Residue p, std::span<const FpMatrix> blocks) {
  std::size_t n = 0;
  for (const auto& b : blocks) {
    if (!b.square()) throw Error(ErrorKind::DimensionMismatch, "block_diagonal needs square blocks");
    if (b.modulus() != p) throw Error(ErrorKind::ModulusMismatch, "block modulus");
    n += b.rows();
  }
  FpMatrix out(p, n, n);
  std::size_t off = 0;
  for (const auto& b : blocks) {
    for (std::size_t r = 0; r < b.rows(); ++r) {
      for (std::size_t c = 0; c < b.cols(); ++c) out.set(off + r, off + c, b(r, c));
    }
    off += b.rows();
  }
  return out;
}

}  // namespace cyclo
