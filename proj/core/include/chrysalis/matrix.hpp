#pragma once

#include <cmath>
#include <complex>
#include <cstddef>
#include <initializer_list>
#include <utility>
#include <vector>

#include "chrysalis/error.hpp"

namespace chrysalis {

/// Dense row-major matrix over any ring-like element type.
template <typename T>
class DenseMatrix {
 public:
  DenseMatrix() = default;
  DenseMatrix(std::size_t rows, std::size_t cols, T fill = T{}) : rows_(rows), cols_(cols), data_(rows * cols, fill) {}

  DenseMatrix(std::initializer_list<std::initializer_list<T>> init) : rows_(init.size()) {
    cols_ = rows_ == 0 ? 0 : init.begin()->size();
    data_.reserve(rows_ * cols_);
    for (const auto& row : init) {
      if (row.size() != cols_) fail(ErrorCode::DimensionMismatch, "ragged matrix initializer");
      data_.insert(data_.end(), row.begin(), row.end());
    }
  }

  static DenseMatrix identity(std::size_t n) {
    DenseMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = T{1};
    return m;
  }

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool square() const { return rows_ == cols_; }

  T& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const T& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

  DenseMatrix transpose() const {
    DenseMatrix t(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
    return t;
  }

  friend DenseMatrix operator*(const DenseMatrix& a, const DenseMatrix& b) {
    if (a.cols_ != b.rows_) fail(ErrorCode::DimensionMismatch, "matrix product shapes");
    DenseMatrix c(a.rows_, b.cols_);
    for (std::size_t i = 0; i < a.rows_; ++i)
      for (std::size_t k = 0; k < a.cols_; ++k)
        for (std::size_t j = 0; j < b.cols_; ++j) c(i, j) = c(i, j) + a(i, k) * b(k, j);
    return c;
  }

  friend DenseMatrix operator+(const DenseMatrix& a, const DenseMatrix& b) {
    if (a.rows_ != b.rows_ || a.cols_ != b.cols_) fail(ErrorCode::DimensionMismatch, "matrix sum shapes");
    DenseMatrix c = a;
    for (std::size_t i = 0; i < c.data_.size(); ++i) c.data_[i] = c.data_[i] + b.data_[i];
    return c;
  }

  friend DenseMatrix operator-(const DenseMatrix& a, const DenseMatrix& b) {
    if (a.rows_ != b.rows_ || a.cols_ != b.cols_) fail(ErrorCode::DimensionMismatch, "matrix difference shapes");
    DenseMatrix c = a;
    for (std::size_t i = 0; i < c.data_.size(); ++i) c.data_[i] = c.data_[i] - b.data_[i];
    return c;
  }

  friend DenseMatrix operator*(const T& s, const DenseMatrix& a) {
    DenseMatrix c = a;
    for (auto& v : c.data_) v = s * v;
    return c;
  }

  friend bool operator==(const DenseMatrix&, const DenseMatrix&) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<T> data_;
};

using Matrix = DenseMatrix<double>;
using ComplexMatrix = DenseMatrix<std::complex<double>>;

/// Determinant by Gaussian elimination with partial pivoting on |.|; works
/// for double and std::complex<double>.
template <typename T>
T determinant(DenseMatrix<T> m) {
  if (!m.square()) fail(ErrorCode::DimensionMismatch, "determinant of non-square matrix");
  const std::size_t n = m.rows();
  T det{1};
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t pivot = col;
    for (std::size_t r = col + 1; r < n; ++r)
      if (std::abs(m(r, col)) > std::abs(m(pivot, col))) pivot = r;
    if (std::abs(m(pivot, col)) == 0.0) return T{0};
    if (pivot != col) {
      for (std::size_t j = 0; j < n; ++j) std::swap(m(pivot, j), m(col, j));
      det = -det;
    }
    det = det * m(col, col);
    for (std::size_t r = col + 1; r < n; ++r) {
      const T f = m(r, col) / m(col, col);
      for (std::size_t j = col; j < n; ++j) m(r, j) = m(r, j) - f * m(col, j);
    }
  }
  return det;
}

}  // namespace chrysalis
