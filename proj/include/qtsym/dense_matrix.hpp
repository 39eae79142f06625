/* Copyright 2026 The qtsym Authors. All Rights Reserved.
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *    http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 * ========================================================================= */
#pragma once

#include <cstddef>
#include <utility>
#include <vector>

#include "qtsym/errors.hpp"
#include "qtsym/laurent.hpp"

namespace qtsym {

/// Row-major dense matrix over an exact scalar type.
template <class T>
class DenseMatrix {
 public:
  DenseMatrix() = default;
  DenseMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}

  static DenseMatrix identity(std::size_t n) {
    DenseMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = T(1);
    return m;
  }

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }

  T& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const T& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  void swap_rows(std::size_t a, std::size_t b) {
    if (a == b) return;
    for (std::size_t c = 0; c < cols_; ++c) std::swap((*this)(a, c), (*this)(b, c));
  }

  friend DenseMatrix operator*(const DenseMatrix& a, const DenseMatrix& b) {
    if (a.cols_ != b.rows_) throw SizeMismatch("matrix product dimension mismatch");
    DenseMatrix out(a.rows_, b.cols_);
    for (std::size_t i = 0; i < a.rows_; ++i)
      for (std::size_t k = 0; k < a.cols_; ++k) {
        if (is_zero(a(i, k))) continue;
        for (std::size_t j = 0; j < b.cols_; ++j)
          if (!is_zero(b(k, j))) out(i, j) += a(i, k) * b(k, j);
      }
    return out;
  }

  friend bool operator==(const DenseMatrix& a, const DenseMatrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
  }

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<T> data_;
};

/// Exact inverse over the rationals by Gauss-Jordan elimination.
DenseMatrix<Rational> inverse(const DenseMatrix<Rational>& m);

/// Inverse of an integer matrix whose inverse is known to be integral
/// (e.g. unitriangular transition matrices); throws InexactDivision otherwise.
DenseMatrix<Integer> integral_inverse(const DenseMatrix<Integer>& m);

/// Fraction-free (Bareiss) solve of A X = B over an integral domain with
/// exact division. Returns (d, Y) with d = +-det(A) and Y = d * A^{-1} B.
/// Throws SingularSystem when A is singular.
template <class T, class ExactDiv>
std::pair<T, DenseMatrix<T>> bareiss_solve(DenseMatrix<T> a, DenseMatrix<T> b, ExactDiv exact_div) {
  const std::size_t n = a.rows();
  if (a.cols() != n || b.rows() != n) throw SizeMismatch("bareiss_solve dimension mismatch");
  const std::size_t m = b.cols();
  T prev(1);
  for (std::size_t k = 0; k < n; ++k) {
    std::size_t pivot = k;
    while (pivot < n && is_zero(a(pivot, k))) ++pivot;
    if (pivot == n) throw SingularSystem("matrix is singular");
    a.swap_rows(k, pivot);
    b.swap_rows(k, pivot);
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) a(i, j) = exact_div(a(k, k) * a(i, j) - a(i, k) * a(k, j), prev);
      for (std::size_t j = 0; j < m; ++j) b(i, j) = exact_div(a(k, k) * b(i, j) - a(i, k) * b(k, j), prev);
      a(i, k) = T(0);
    }
    prev = a(k, k);
  }
  const T det = a(n - 1, n - 1);
  DenseMatrix<T> y(n, m);
  for (std::size_t j = 0; j < m; ++j) {
    for (std::size_t ii = n; ii-- > 0;) {
      T acc = det * b(ii, j);
      for (std::size_t c = ii + 1; c < n; ++c) acc -= a(ii, c) * y(c, j);
      y(ii, j) = exact_div(acc, a(ii, ii));
    }
  }
  return {det, std::move(y)};
}

}  // namespace qtsym
