#pragma once

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <utility>
#include <vector>

#include "higgs/arith/field.hpp"

namespace higgs::arith {

/// Dense matrix of scalars, row-major.
template <Field F>
class Matrix {
 public:
  using Context = typename F::Context;

  Matrix(Context ctx, std::size_t rows, std::size_t cols)
      : ctx_(std::move(ctx)), rows_(rows), cols_(cols), data_(rows * cols, ctx_.zero()) {}

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  const Context& context() const { return ctx_; }

  F& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const F& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  friend Matrix operator*(const Matrix& a, const Matrix& b) {
    if (a.cols_ != b.rows_) throw std::invalid_argument("matrix product: shape mismatch");
    Matrix r(a.ctx_, a.rows_, b.cols_);
    for (std::size_t i = 0; i < a.rows_; ++i)
      for (std::size_t k = 0; k < a.cols_; ++k) {
        const F& aik = a(i, k);
        if (aik.is_zero()) continue;
        for (std::size_t j = 0; j < b.cols_; ++j) r(i, j) += aik * b(k, j);
      }
    return r;
  }

  bool is_zero() const {
    for (const F& v : data_)
      if (!v.is_zero()) return false;
    return true;
  }

  /// Reduced row echelon form in place; returns the pivot columns.
  std::vector<std::size_t> row_reduce() {
    std::vector<std::size_t> pivots;
    std::size_t r = 0;
    for (std::size_t c = 0; c < cols_ && r < rows_; ++c) {
      std::size_t piv = r;
      while (piv < rows_ && (*this)(piv, c).is_zero()) ++piv;
      if (piv == rows_) continue;
      if (piv != r)
        for (std::size_t j = 0; j < cols_; ++j) std::swap((*this)(piv, j), (*this)(r, j));
      const F inv = (*this)(r, c).inverse();
      for (std::size_t j = c; j < cols_; ++j) (*this)(r, j) *= inv;
      for (std::size_t i = 0; i < rows_; ++i) {
        if (i == r) continue;
        const F f = (*this)(i, c);
        if (f.is_zero()) continue;
        for (std::size_t j = c; j < cols_; ++j) (*this)(i, j) -= f * (*this)(r, j);
      }
      pivots.push_back(c);
      ++r;
    }
    return pivots;
  }

  std::size_t rank() const {
    Matrix copy = *this;
    return copy.row_reduce().size();
  }

  /// Inverse of a square matrix, or nullopt if singular.
  std::optional<Matrix> inverse() const {
    if (rows_ != cols_) throw std::invalid_argument("inverse of a non-square matrix");
    Matrix aug(ctx_, rows_, 2 * cols_);
    for (std::size_t i = 0; i < rows_; ++i) {
      for (std::size_t j = 0; j < cols_; ++j) aug(i, j) = (*this)(i, j);
      aug(i, cols_ + i) = ctx_.one();
    }
    const auto pivots = aug.row_reduce();
    if (pivots.size() < rows_ || pivots.back() >= cols_) return std::nullopt;
    Matrix inv(ctx_, rows_, cols_);
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = 0; j < cols_; ++j) inv(i, j) = aug(i, cols_ + j);
    return inv;
  }

  F determinant() const {
    if (rows_ != cols_) throw std::invalid_argument("determinant of a non-square matrix");
    Matrix a = *this;
    F det = ctx_.one();
    for (std::size_t c = 0; c < cols_; ++c) {
      std::size_t piv = c;
      while (piv < rows_ && a(piv, c).is_zero()) ++piv;
      if (piv == rows_) return ctx_.zero();
      if (piv != c) {
        for (std::size_t j = 0; j < cols_; ++j) std::swap(a(piv, j), a(c, j));
        det = -det;
      }
      det *= a(c, c);
      const F inv = a(c, c).inverse();
      for (std::size_t i = c + 1; i < rows_; ++i) {
        const F f = a(i, c) * inv;
        if (f.is_zero()) continue;
        for (std::size_t j = c; j < cols_; ++j) a(i, j) -= f * a(c, j);
      }
    }
    return det;
  }

  friend bool operator==(const Matrix& a, const Matrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
  }

 private:
  Context ctx_;
  std::size_t rows_;
  std::size_t cols_;
  std::vector<F> data_;
};

}  // namespace higgs::arith
