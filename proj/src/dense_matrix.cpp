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
#include "qtsym/dense_matrix.hpp"

namespace qtsym {

DenseMatrix<Rational> inverse(const DenseMatrix<Rational>& m) {
  const std::size_t n = m.rows();
  if (m.cols() != n) throw SizeMismatch("inverse of a non-square matrix");
  DenseMatrix<Rational> a = m;
  DenseMatrix<Rational> inv = DenseMatrix<Rational>::identity(n);
  for (std::size_t k = 0; k < n; ++k) {
    std::size_t pivot = k;
    while (pivot < n && sgn(a(pivot, k)) == 0) ++pivot;
    if (pivot == n) throw SingularSystem("matrix is singular");
    a.swap_rows(k, pivot);
    inv.swap_rows(k, pivot);
    const Rational scale = 1 / a(k, k);
    for (std::size_t j = 0; j < n; ++j) {
      a(k, j) *= scale;
      inv(k, j) *= scale;
    }
    for (std::size_t i = 0; i < n; ++i) {
      if (i == k || sgn(a(i, k)) == 0) continue;
      const Rational f = a(i, k);
      for (std::size_t j = 0; j < n; ++j) {
        a(i, j) -= f * a(k, j);
        inv(i, j) -= f * inv(k, j);
      }
    }
  }
  return inv;
}

DenseMatrix<Integer> integral_inverse(const DenseMatrix<Integer>& m) {
  DenseMatrix<Rational> r(m.rows(), m.cols());
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) r(i, j) = m(i, j);
  DenseMatrix<Rational> inv = inverse(r);
  DenseMatrix<Integer> out(m.rows(), m.cols());
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) {
      if (inv(i, j).get_den() != 1) throw InexactDivision("matrix inverse is not integral");
      out(i, j) = inv(i, j).get_num();
    }
  return out;
}

}  // namespace qtsym
