#pragma once

#include <cstddef>
#include <initializer_list>
#include <span>
#include <string>
#include <vector>

#include <gmpxx.h>

namespace lpakk {

using BigInt = mpz_class;

/// Dense row-major matrix of arbitrary-precision integers. Zero-row and
/// zero-column shapes are valid and carry their dimensions.
class IntMatrix {
 public:
  IntMatrix() = default;
  IntMatrix(std::size_t rows, std::size_t cols);
  IntMatrix(std::initializer_list<std::initializer_list<long>> rows);

  static IntMatrix identity(std::size_t n);
  static IntMatrix from_rows(const std::vector<std::vector<long>>& rows, std::size_t cols);

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  bool empty() const noexcept { return rows_ == 0 || cols_ == 0; }

  BigInt& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const BigInt& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

  std::span<BigInt> row(std::size_t i) { return {data_.data() + i * cols_, cols_}; }
  std::span<const BigInt> row(std::size_t i) const { return {data_.data() + i * cols_, cols_}; }

  bool is_zero() const;
  bool is_diagonal() const;

  // Elementary operations. Row/column indices are not range checked.
  void swap_rows(std::size_t a, std::size_t b);
  void swap_cols(std::size_t a, std::size_t b);
  /// row[dst] += factor * row[src]
  void add_row_multiple(std::size_t dst, std::size_t src, const BigInt& factor);
  /// col[dst] += factor * col[src]
  void add_col_multiple(std::size_t dst, std::size_t src, const BigInt& factor);
  void negate_row(std::size_t i);
  void negate_col(std::size_t j);

  /// Replaces rows (a, b) by (x*a + y*b, z*a + w*b).
  void combine_rows(std::size_t a, std::size_t b, const BigInt& x, const BigInt& y,
                    const BigInt& z, const BigInt& w);
  /// Replaces columns (a, b) by (x*a + y*b, z*a + w*b).
  void combine_cols(std::size_t a, std::size_t b, const BigInt& x, const BigInt& y,
                    const BigInt& z, const BigInt& w);

  IntMatrix submatrix(std::size_t row0, std::size_t col0, std::size_t nrows,
                      std::size_t ncols) const;
  IntMatrix select_cols(std::span<const std::size_t> cols) const;
  IntMatrix select_rows(std::span<const std::size_t> rows) const;

  friend bool operator==(const IntMatrix&, const IntMatrix&) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<BigInt> data_;
};

IntMatrix matmul(const IntMatrix& a, const IntMatrix& b);
IntMatrix transpose(const IntMatrix& m);
IntMatrix operator+(const IntMatrix& a, const IntMatrix& b);
IntMatrix operator-(const IntMatrix& a, const IntMatrix& b);

/// Kronecker product a (x) b.
IntMatrix kronecker(const IntMatrix& a, const IntMatrix& b);

/// Horizontal concatenation [a | b]; row counts must agree.
IntMatrix hconcat(const IntMatrix& a, const IntMatrix& b);
/// Vertical concatenation [a ; b]; column counts must agree.
IntMatrix vconcat(const IntMatrix& a, const IntMatrix& b);

/// The rows x |selected| matrix with (selected[j], j) = 1 and zeros elsewhere.
/// Realizes the identity with the unselected columns removed.
IntMatrix identity_embedding(std::size_t rows, std::span<const std::size_t> selected);

/// Exact determinant by fraction-free (Bareiss) elimination.
BigInt determinant(const IntMatrix& m);

std::string to_string(const IntMatrix& m);

}  // namespace lpakk
