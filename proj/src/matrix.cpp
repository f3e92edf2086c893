#include "crystcohom/matrix.hpp"

#include <sstream>

#include "crystcohom/errors.hpp"

namespace crystcohom {

MatrixZ::MatrixZ(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), data_(rows * cols) {}

MatrixZ::MatrixZ(std::initializer_list<std::initializer_list<long>> rows) {
  rows_ = rows.size();
  cols_ = rows_ == 0 ? 0 : rows.begin()->size();
  data_.reserve(rows_ * cols_);
  for (const auto& row : rows) {
    if (row.size() != cols_) throw DimensionError("ragged matrix literal");
    for (long v : row) data_.emplace_back(v);
  }
}

MatrixZ MatrixZ::identity(std::size_t n) {
  MatrixZ m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

MatrixZ MatrixZ::from_rows(const std::vector<std::vector<std::int64_t>>& rows,
                           std::size_t cols_if_empty) {
  const std::size_t cols = rows.empty() ? cols_if_empty : rows.front().size();
  MatrixZ m(rows.size(), cols);
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (rows[i].size() != cols) throw DimensionError("ragged matrix rows");
    for (std::size_t j = 0; j < cols; ++j) {
      m(i, j) = static_cast<long>(rows[i][j]);
    }
  }
  return m;
}

MatrixZ MatrixZ::transpose() const {
  MatrixZ t(cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
  return t;
}

bool MatrixZ::is_zero() const {
  for (const auto& v : data_)
    if (v != 0) return false;
  return true;
}

MatrixZ MatrixZ::column_block(std::size_t first, std::size_t count) const {
  if (first + count > cols_) throw DimensionError("column block out of range");
  MatrixZ b(rows_, count);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < count; ++j) b(i, j) = (*this)(i, first + j);
  return b;
}

std::vector<std::vector<std::int64_t>> MatrixZ::to_int64_rows() const {
  std::vector<std::vector<std::int64_t>> out(rows_, std::vector<std::int64_t>(cols_));
  for (std::size_t i = 0; i < rows_; ++i) {
    for (std::size_t j = 0; j < cols_; ++j) {
      const BigInt& v = (*this)(i, j);
      if (!v.fits_slong_p()) throw OverflowError("matrix entry exceeds 64 bits");
      out[i][j] = v.get_si();
    }
  }
  return out;
}

std::string MatrixZ::to_string() const {
  std::ostringstream os;
  os << '[';
  for (std::size_t i = 0; i < rows_; ++i) {
    if (i) os << ", ";
    os << '[';
    for (std::size_t j = 0; j < cols_; ++j) {
      if (j) os << ", ";
      os << (*this)(i, j).get_str();
    }
    os << ']';
  }
  os << ']';
  return os.str();
}

MatrixZ operator*(const MatrixZ& a, const MatrixZ& b) {
  if (a.cols_ != b.rows_) throw DimensionError("matrix product shape mismatch");
  MatrixZ c(a.rows_, b.cols_);
  for (std::size_t i = 0; i < a.rows_; ++i)
    for (std::size_t k = 0; k < a.cols_; ++k) {
      const BigInt& aik = a(i, k);
      if (aik == 0) continue;
      for (std::size_t j = 0; j < b.cols_; ++j) c(i, j) += aik * b(k, j);
    }
  return c;
}

MatrixZ operator+(const MatrixZ& a, const MatrixZ& b) {
  if (a.rows_ != b.rows_ || a.cols_ != b.cols_)
    throw DimensionError("matrix sum shape mismatch");
  MatrixZ c = a;
  for (std::size_t i = 0; i < c.data_.size(); ++i) c.data_[i] += b.data_[i];
  return c;
}

MatrixZ operator-(const MatrixZ& a, const MatrixZ& b) {
  if (a.rows_ != b.rows_ || a.cols_ != b.cols_)
    throw DimensionError("matrix difference shape mismatch");
  MatrixZ c = a;
  for (std::size_t i = 0; i < c.data_.size(); ++i) c.data_[i] -= b.data_[i];
  return c;
}

bool operator==(const MatrixZ& a, const MatrixZ& b) {
  return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
}

MatrixZ power(const MatrixZ& a, unsigned exponent) {
  if (!a.is_square()) throw DimensionError("power of a non-square matrix");
  MatrixZ result = MatrixZ::identity(a.rows());
  MatrixZ base = a;
  while (exponent) {
    if (exponent & 1u) result = result * base;
    exponent >>= 1u;
    if (exponent) base = base * base;
  }
  return result;
}

}  // namespace crystcohom
