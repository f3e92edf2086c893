#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <string>
#include <vector>

namespace crystcohom {

using BigInt = mpz_class;

/// Dense row-major matrix of arbitrary-precision integers. Empty shapes
/// (0 rows or 0 columns) are legal and behave as zero maps.
class MatrixZ {
 public:
  MatrixZ() = default;
  MatrixZ(std::size_t rows, std::size_t cols);
  MatrixZ(std::initializer_list<std::initializer_list<long>> rows);

  static MatrixZ identity(std::size_t n);
  static MatrixZ zero(std::size_t rows, std::size_t cols) { return {rows, cols}; }
  static MatrixZ from_rows(const std::vector<std::vector<std::int64_t>>& rows,
                           std::size_t cols_if_empty = 0);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool empty() const { return rows_ == 0 || cols_ == 0; }

  BigInt& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const BigInt& operator()(std::size_t i, std::size_t j) const {
    return data_[i * cols_ + j];
  }

  MatrixZ transpose() const;
  bool is_zero() const;
  bool is_square() const { return rows_ == cols_; }

  /// Columns [first, first + count).
  MatrixZ column_block(std::size_t first, std::size_t count) const;

  /// Entries narrowed to int64; throws OverflowError if any entry does not fit.
  std::vector<std::vector<std::int64_t>> to_int64_rows() const;

  std::string to_string() const;

  friend MatrixZ operator*(const MatrixZ& a, const MatrixZ& b);
  friend MatrixZ operator+(const MatrixZ& a, const MatrixZ& b);
  friend MatrixZ operator-(const MatrixZ& a, const MatrixZ& b);
  friend bool operator==(const MatrixZ& a, const MatrixZ& b);

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<BigInt> data_;
};

MatrixZ power(const MatrixZ& a, unsigned exponent);

}  // namespace crystcohom
