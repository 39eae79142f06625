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

#include <map>
#include <memory>
#include <vector>

#include "qtsym/config.hpp"
#include "qtsym/dense_matrix.hpp"
#include "qtsym/symfunc.hpp"

namespace qtsym {

/// Change-of-basis matrices for one degree. Rows and columns follow
/// partitions_of(degree); row = source basis element, column = target, so a
/// coefficient row vector v in the source basis maps to v * M.
struct TransitionTables {
  int degree = 0;
  std::vector<Partition> partitions;
  std::map<Partition, std::size_t> index;
  DenseMatrix<Integer> s_to_m;  // Kostka matrix
  DenseMatrix<Integer> m_to_s;
  DenseMatrix<Integer> h_to_s;
  DenseMatrix<Integer> s_to_h;
  DenseMatrix<Integer> e_to_s;
  DenseMatrix<Integer> s_to_e;
};

/// Memoized per degree; safe under concurrent lookup. Checks the degree guard.
const TransitionTables& transition_tables(int degree);

/// Number of semistandard tableaux of shape lambda and content mu.
Integer kostka(const Partition& lambda, const Partition& mu);

/// m_(a,1^k) in the Schur basis by the closed hook formula.
SymFunc<Rational> hook_m_to_s(int a, int k);

namespace detail {

const DenseMatrix<Integer>& to_schur_matrix(const TransitionTables& t, Basis from);
const DenseMatrix<Integer>& from_schur_matrix(const TransitionTables& t, Basis to);

/// p_n (single row) or p_empty in the Schur basis; throws UnsupportedConversion
/// for any other power sum.
std::vector<std::pair<Partition, int>> power_sum_to_schur(const Partition& lambda);

template <class C>
SymFunc<C> apply_matrix(const SymFunc<C>& f, const TransitionTables& t, const DenseMatrix<Integer>& m, Basis target) {
  std::vector<C> acc(t.partitions.size());
  for (const auto& [lambda, c] : f.terms()) {
    const std::size_t row = t.index.at(lambda);
    for (std::size_t col = 0; col < t.partitions.size(); ++col)
      if (!is_zero(m(row, col))) acc[col] += C(m(row, col)) * c;
  }
  SymFunc<C> out(target);
  for (std::size_t col = 0; col < acc.size(); ++col) out.add_term(t.partitions[col], acc[col]);
  return out;
}

}  // namespace detail

/// Re-expresses f in the target basis. Supported: any pair among m, h, e, s;
/// p as a source only for p_n and p_empty terms.
template <class C>
SymFunc<C> convert(const SymFunc<C>& f, Basis target) {
  if (target == Basis::Htilde || f.basis() == Basis::Htilde)
    throw UnsupportedConversion("Macdonald basis conversions live with the Macdonald tables");
  if (target == Basis::p && f.basis() != Basis::p)
    throw UnsupportedConversion("conversion into the power-sum basis is not supported");
  if (f.basis() == target) return f;

  SymFunc<C> out(target);
  for (int d : f.degrees()) {
    check_degree(d);
    const TransitionTables& t = transition_tables(d);
    SymFunc<C> piece = f.piece(d);
    SymFunc<C> schur(Basis::s);
    if (f.basis() == Basis::p) {
      for (const auto& [lambda, c] : piece.terms())
        for (const auto& [nu, sign] : detail::power_sum_to_schur(lambda)) schur.add_term(nu, C(sign) * c);
    } else if (f.basis() == Basis::s) {
      schur = piece;
    } else {
      schur = detail::apply_matrix(piece, t, detail::to_schur_matrix(t, f.basis()), Basis::s);
    }
    out += target == Basis::s ? schur : detail::apply_matrix(schur, t, detail::from_schur_matrix(t, target), target);
  }
  return out;
}

}  // namespace qtsym
