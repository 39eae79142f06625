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
#include "qtsym/operators.hpp"

#include <mutex>

#include "qtsym/config.hpp"
#include "qtsym/transition.hpp"

namespace qtsym {

namespace {

// (-1/q)^e as a Laurent monomial.
LaurentPoly neg_inv_q_power(int e) { return LaurentPoly::monomial(Rational(e % 2 == 0 ? 1 : -1), -e); }

QSF schur(const Partition& lambda, const LaurentPoly& c = LaurentPoly(1)) { return QSF::single(Basis::s, lambda, c); }

Partition column(int n) { return Partition(std::vector<int>(static_cast<std::size_t>(n), 1)); }

IdentityResult compare(QSF lhs, QSF rhs) {
  IdentityResult r;
  r.difference = lhs - rhs;
  r.holds = r.difference.is_zero();
  r.lhs = std::move(lhs);
  r.rhs = std::move(rhs);
  return r;
}

}  // namespace

QSF c_apply(int m, const QSF& f) {
  detail::require_schur(f.basis(), "c_apply");
  if (m < 0) throw PreconditionError("c_apply requires m >= 0");
  QSF out(Basis::s);
  const LaurentPoly prefactor = neg_inv_q_power(m - 1);
  for (const auto& [lambda, c] : f.terms()) {
    const LaurentPoly scaled = prefactor * c;
    for (const Partition& mu : horizontal_strips_inside(lambda)) {
      const int removed = lambda.size() - mu.size();
      std::vector<int> gamma{m + removed};
      gamma.insert(gamma.end(), mu.parts().begin(), mu.parts().end());
      SignedPartition sp = straighten(gamma);
      if (sp.sign == 0) continue;
      out.add_term(sp.partition, LaurentPoly::monomial(Rational(sp.sign), -removed) * scaled);
    }
  }
  return out;
}

const QSF& c_alpha_one(const Composition& alpha) {
  check_degree(alpha.size());
  static std::mutex mutex;
  static std::map<Composition, std::unique_ptr<QSF>> memo;
  {
    std::lock_guard<std::mutex> lock(mutex);
    auto it = memo.find(alpha);
    if (it != memo.end()) return *it->second;
  }
  QSF value = QSF::one();
  if (!alpha.empty()) {
    std::vector<int> tail(alpha.parts().begin() + 1, alpha.parts().end());
    value = c_apply(alpha[0], c_alpha_one(Composition(std::move(tail))));
  }
  std::lock_guard<std::mutex> lock(mutex);
  auto [it, inserted] = memo.try_emplace(alpha, std::make_unique<QSF>(std::move(value)));
  return *it->second;
}

TheoremCoefficient theorem_coeff(int n, int k, const Composition& alpha) {
  if (n < 2 || k < 1) throw PreconditionError("theorem_coeff requires n >= 2 and k >= 1");
  if (alpha.size() != n + k) throw SizeMismatch("theorem_coeff requires |alpha| = n + k");
  TheoremCoefficient out{n, k, alpha, LaurentPoly()};
  int before = 0;
  for (int j = 0; j < alpha.length(); ++j) {
    const int a = n - before;
    const int b = alpha[static_cast<std::size_t>(j)] - a;
    before += alpha[static_cast<std::size_t>(j)];
    if (a < 1 || a > n || b < 0 || b > k) continue;
    LaurentPoly bracket(k + 1);
    for (int i = 1; i < a; ++i) bracket += LaurentPoly::q_power(n - i);
    out.poly += bracket;
  }
  return out;
}

QSF theorem_rhs(int n, int k) {
  if (n < 2 || k < 1) throw PreconditionError("theorem_rhs requires n >= 2 and k >= 1");
  check_degree(n + k);

  QSF quadruple(Basis::s);
  for (int a = 1; a <= n; ++a) {
    LaurentPoly bracket(k + 1);
    for (int i = 1; i < a; ++i) bracket += LaurentPoly::q_power(n - i);
    for (const Composition& tau : compositions_of(n - a))
      for (int b = 0; b <= k; ++b)
        for (const Composition& rho : compositions_of(k - b)) {
          Composition alpha = tau.concat(Composition{a + b}).concat(rho);
          quadruple += bracket * c_alpha_one(alpha);
        }
  }

  QSF grouped(Basis::s);
  for (const Composition& alpha : compositions_of(n + k)) {
    LaurentPoly c = theorem_coeff(n, k, alpha).poly;
    if (!c.is_zero()) grouped += c * c_alpha_one(alpha);
  }
  if (!(quadruple == grouped)) throw InternalError("theorem_rhs: grouped and decomposition sums disagree");
  return grouped;
}

IdentityResult en_identity(int n) {
  if (n < 1) throw PreconditionError("en_identity requires n >= 1");
  check_degree(n);
  QSF lhs(Basis::s);
  for (const Composition& alpha : compositions_of(n)) lhs += c_alpha_one(alpha);
  return compare(std::move(lhs), schur(column(n)));
}

const char* pn_reading_name(PnReading r) { return r == PnReading::last_part ? "last-part" : "first-part"; }

PnReading parse_pn_reading(const std::string& text) {
  if (text == "last-part") return PnReading::last_part;
  if (text == "first-part") return PnReading::first_part;
  throw ParseError("unknown p_n reading '" + text + "'");
}

IdentityResult pn_identity(int n, PnReading reading) {
  if (n < 2) throw PreconditionError("pn_identity requires n >= 2");
  check_degree(n);
  QSF lhs(Basis::s);
  for (const Composition& alpha : compositions_of(n)) {
    const int part = reading == PnReading::last_part ? alpha.parts().back() : alpha.parts().front();
    lhs += qint(part) * c_alpha_one(alpha);
  }
  QSF pn = convert(QSF::single(Basis::p, Partition{n}), Basis::s);
  return compare(std::move(lhs), LaurentPoly(n % 2 == 1 ? 1 : -1) * pn);
}

IdentityResult hook_sub_identity(int n, int k) {
  if (n < 1 || k < 0) throw PreconditionError("hook_sub_identity requires n >= 1 and k >= 0");
  check_degree(n + k);
  QSF lhs(Basis::s);
  for (int i = n; i <= n + k; ++i) lhs += c_apply(i, schur(column(n + k - i)));
  LaurentPoly c = LaurentPoly::monomial(Rational(n % 2 == 1 ? 1 : -1), 1 - n);
  return compare(std::move(lhs), schur(Partition::hook(n, k), c));
}

SymFunc<Rational> eval_q1(const QSF& f) {
  return f.map_coeffs<Rational>([](const LaurentPoly& c) { return c.eval_q1(); });
}

}  // namespace qtsym
