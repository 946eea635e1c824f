#pragma once

#include <cstdint>
#include <initializer_list>
#include <span>
#include <string>
#include <vector>

#include "cyclo/fp_kernels.hpp"

namespace cyclo {

using Residue = kernels::Residue;
using FpVector = std::vector<Residue>;

/// Dense row-major matrix over the prime field F_p, p < 2^31.
class FpMatrix {
 public:
  FpMatrix() = default;
  /// Zero matrix. Throws NotPrime if p is not prime.
  FpMatrix(Residue p, std::size_t rows, std::size_t cols);
  /// Entries are reduced into [0, p); negative inputs are allowed.
  FpMatrix(Residue p, const std::vector<std::vector<std::int64_t>>& rows);
  FpMatrix(Residue p, std::initializer_list<std::initializer_list<std::int64_t>> rows);

  static FpMatrix identity(Residue p, std::size_t n);

  Residue modulus() const { return p_; }
  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool square() const { return rows_ == cols_; }

  Residue operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }
  /// Stores v mod p.
  void set(std::size_t r, std::size_t c, std::int64_t v);

  std::span<Residue> row(std::size_t r) { return {data_.data() + r * cols_, cols_}; }
  std::span<const Residue> row(std::size_t r) const { return {data_.data() + r * cols_, cols_}; }

  bool is_zero() const;
  bool operator==(const FpMatrix&) const = default;

  std::string to_string() const;

 private:
  Residue p_ = 2;
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Residue> data_;
};

FpMatrix operator+(const FpMatrix& a, const FpMatrix& b);
FpMatrix operator-(const FpMatrix& a, const FpMatrix& b);

FpMatrix mat_mul(const FpMatrix& a, const FpMatrix& b);
FpMatrix operator*(const FpMatrix& a, const FpMatrix& b);
FpVector mat_vec(const FpMatrix& a, std::span<const Residue> v);

/// A^k by square-and-multiply; A^0 = I.
FpMatrix mat_pow(const FpMatrix& a, std::uint64_t k);

std::size_t rank(const FpMatrix& a);

/// Reduced row echelon form; pivots are the first nonzero entry in column order.
struct EchelonForm {
  FpMatrix reduced;
  std::vector<std::size_t> pivot_cols;
};
EchelonForm row_reduce(FpMatrix a);

/// Basis of {v : Av = 0}, one vector per free column.
std::vector<FpVector> kernel_basis(const FpMatrix& a);

/// Throws NotInvertible if singular, DimensionMismatch if not square.
FpMatrix inverse(const FpMatrix& a);

FpMatrix transpose(const FpMatrix& a);

FpMatrix block_diagonal(Residue p, std::span<const FpMatrix> blocks);

}  // namespace cyclo
