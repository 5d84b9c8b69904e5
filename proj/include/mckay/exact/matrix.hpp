#pragma once

#include <cassert>
#include <cstddef>
#include <initializer_list>
#include <span>
#include <stdexcept>
#include <utility>
#include <vector>

#include "mckay/exact/rational.hpp"

namespace mckay::exact {

inline bool is_zero_value(const Int& x) { return sgn(x) == 0; }
inline bool is_zero_value(const Rat& x) { return sgn(x) == 0; }

/// Dense row-major matrix over an exact ring.
template <class T>
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols, const T& fill = T(0))
      : rows_(rows), cols_(cols), data_(rows * cols, fill) {}

  Matrix(std::initializer_list<std::initializer_list<T>> rows) {
    rows_ = rows.size();
    cols_ = rows_ ? rows.begin()->size() : 0;
    data_.reserve(rows_ * cols_);
    for (const auto& r : rows) {
      if (r.size() != cols_) throw std::invalid_argument("ragged matrix literal");
      data_.insert(data_.end(), r.begin(), r.end());
    }
  }

  static Matrix identity(std::size_t n) {
    Matrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = T(1);
    return m;
  }

  static Matrix from_rows(const std::vector<std::vector<T>>& rows) {
    std::size_t c = rows.empty() ? 0 : rows.front().size();
    Matrix m(rows.size(), c);
    for (std::size_t i = 0; i < rows.size(); ++i) {
      if (rows[i].size() != c) throw std::invalid_argument("ragged rows");
      for (std::size_t j = 0; j < c; ++j) m(i, j) = rows[i][j];
    }
    return m;
  }

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  bool square() const noexcept { return rows_ == cols_; }

  T& operator()(std::size_t i, std::size_t j) {
    assert(i < rows_ && j < cols_);
    return data_[i * cols_ + j];
  }
  const T& operator()(std::size_t i, std::size_t j) const {
    assert(i < rows_ && j < cols_);
    return data_[i * cols_ + j];
  }

  std::span<const T> row(std::size_t i) const { return {data_.data() + i * cols_, cols_}; }
  std::vector<T> row_vector(std::size_t i) const {
    return {data_.begin() + static_cast<std::ptrdiff_t>(i * cols_),
            data_.begin() + static_cast<std::ptrdiff_t>((i + 1) * cols_)};
  }
  std::vector<T> col_vector(std::size_t j) const {
    std::vector<T> out;
    out.reserve(rows_);
    for (std::size_t i = 0; i < rows_; ++i) out.push_back((*this)(i, j));
    return out;
  }
  const std::vector<T>& data() const noexcept { return data_; }

  void swap_rows(std::size_t a, std::size_t b) {
    if (a == b) return;
    for (std::size_t j = 0; j < cols_; ++j) std::swap((*this)(a, j), (*this)(b, j));
  }
  void swap_cols(std::size_t a, std::size_t b) {
    if (a == b) return;
    for (std::size_t i = 0; i < rows_; ++i) std::swap((*this)(i, a), (*this)(i, b));
  }

  Matrix transpose() const {
    Matrix t(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
    return t;
  }

  friend bool operator==(const Matrix& a, const Matrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
  }

  friend Matrix operator*(const Matrix& a, const Matrix& b) {
    if (a.cols_ != b.rows_) throw std::invalid_argument("matrix shape mismatch");
    Matrix c(a.rows_, b.cols_);
    for (std::size_t i = 0; i < a.rows_; ++i) {
      for (std::size_t k = 0; k < a.cols_; ++k) {
        const T& aik = a(i, k);
        if (is_zero_value(aik)) continue;
        for (std::size_t j = 0; j < b.cols_; ++j) {
          const T& bkj = b(k, j);
          if (is_zero_value(bkj)) continue;
          T prod = aik * bkj;
          c(i, j) = c(i, j) + prod;
        }
      }
    }
    return c;
  }

  friend Matrix operator+(const Matrix& a, const Matrix& b) {
    if (a.rows_ != b.rows_ || a.cols_ != b.cols_) throw std::invalid_argument("shape mismatch");
    Matrix c(a.rows_, a.cols_);
    for (std::size_t i = 0; i < a.data_.size(); ++i) c.data_[i] = a.data_[i] + b.data_[i];
    return c;
  }

  friend Matrix operator-(const Matrix& a, const Matrix& b) {
    if (a.rows_ != b.rows_ || a.cols_ != b.cols_) throw std::invalid_argument("shape mismatch");
    Matrix c(a.rows_, a.cols_);
    for (std::size_t i = 0; i < a.data_.size(); ++i) c.data_[i] = a.data_[i] - b.data_[i];
    return c;
  }

 private:
  std::size_t rows_{0};
  std::size_t cols_{0};
  std::vector<T> data_;
};

using IntMat = Matrix<Int>;
using RatMat = Matrix<Rat>;

inline RatMat to_rational(const IntMat& m) {
  RatMat r(m.rows(), m.cols());
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) r(i, j) = Rat(m(i, j));
  return r;
}

}  // namespace mckay::exact
