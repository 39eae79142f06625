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

#include "qtsym/laurent.hpp"
#include "qtsym/symfunc.hpp"

namespace qtsym {

using QSF = SymFunc<LaurentPoly>;

/// C_m on a Schur-basis value through the horizontal-strip rule
///   (-q)^{m-1} C_m s_lambda = sum_mu q^{-|lambda/mu|} s_{(m + |lambda/mu|, mu)}.
QSF c_apply(int m, const QSF& f);

/// C_{alpha_1} ... C_{alpha_l} 1, innermost (rightmost) part first. Memoized.
const QSF& c_alpha_one(const Composition& alpha);

/// Bernstein operator: prepend a to every Schur index and straighten.
template <class C>
SymFunc<C> s_apply(int a, const SymFunc<C>& f) {
  detail::require_schur(f.basis(), "s_apply");
  SymFunc<C> out(Basis::s);
  for (const auto& [lambda, c] : f.terms()) {
    std::vector<int> gamma{a};
    gamma.insert(gamma.end(), lambda.parts().begin(), lambda.parts().end());
    SignedPartition sp = straighten(gamma);
    if (sp.sign != 0) out.add_term(sp.partition, sp.sign > 0 ? c : C(-c));
  }
  return out;
}

struct TheoremCoefficient {
  int n = 0;
  int k = 0;
  Composition alpha;
  LaurentPoly poly;
};

/// Coefficient of C_alpha 1 in the hook expansion of (-1)^{n-1} m_{(n,1^k)}.
TheoremCoefficient theorem_coeff(int n, int k, const Composition& alpha);

/// Right-hand side of the hook expansion; both the decomposition sum and the
/// sum grouped by alpha are evaluated and must agree (InternalError otherwise).
QSF theorem_rhs(int n, int k);

struct IdentityResult {
  bool holds = false;
  QSF lhs;
  QSF rhs;
  QSF difference;  // lhs - rhs
};

/// sum over alpha |= n of C_alpha 1 against e_n.
IdentityResult en_identity(int n);

enum class PnReading { last_part, first_part };
const char* pn_reading_name(PnReading r);
PnReading parse_pn_reading(const std::string& text);

/// sum over alpha |= n of [alpha_*]_q C_alpha 1 against (-1)^{n-1} p_n, where
/// alpha_* is the last or first part of alpha.
IdentityResult pn_identity(int n, PnReading reading);

/// sum_{i=n}^{n+k} C_i e_{n+k-i} against (-1)^{n-1} q^{1-n} s_{(n,1^k)}.
IdentityResult hook_sub_identity(int n, int k);

/// Evaluates every coefficient at q = 1.
SymFunc<Rational> eval_q1(const QSF& f);

}  // namespace qtsym
