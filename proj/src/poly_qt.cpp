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
#include "qtsym/poly_qt.hpp"

#include <algorithm>
#include <limits>
#include <sstream>
#include <vector>

#include "qtsym/errors.hpp"
#include "upoly.hpp"

namespace qtsym {

namespace {

using detail::UPoly;
using InnerPoly = UPoly<Integer>;  // in t
using OuterPoly = UPoly<InnerPoly>;  // in q over Z[t]

OuterPoly to_recursive(const PolyQT& p) {
  OuterPoly out;
  if (p.is_zero()) return out;
  out.c.resize(static_cast<std::size_t>(p.degree_q() + 1));
  for (const auto& [e, c] : p.terms()) {
    auto& inner = out.c[static_cast<std::size_t>(e.first)].c;
    if (inner.size() <= static_cast<std::size_t>(e.second)) inner.resize(static_cast<std::size_t>(e.second + 1));
    inner[static_cast<std::size_t>(e.second)] = c;
  }
  return out;
}

PolyQT from_recursive(const OuterPoly& p) {
  PolyQT out;
  for (std::size_t i = 0; i < p.c.size(); ++i)
    for (std::size_t j = 0; j < p.c[i].c.size(); ++j)
      if (sgn(p.c[i].c[j]) != 0) out.add_term(static_cast<int>(i), static_cast<int>(j), p.c[i].c[j]);
  return out;
}

PolyQT normalize_graded_sign(PolyQT p) {
  if (!p.is_zero() && sgn(p.leading_term().second) < 0) p = -p;
  return p;
}

PolyQT strip_monomial(const PolyQT& p, int mq, int mt) {
  if (mq == 0 && mt == 0) return p;
  PolyQT out;
  for (const auto& [e, c] : p.terms()) out.add_term(e.first - mq, e.second - mt, c);
  return out;
}

}  // namespace

PolyQT::PolyQT(const Integer& c) {
  if (sgn(c) != 0) terms_.emplace(QTExponent{0, 0}, c);
}

PolyQT PolyQT::monomial(const Integer& c, int q_exp, int t_exp) {
  PolyQT p;
  p.add_term(q_exp, t_exp, c);
  return p;
}

bool PolyQT::is_constant() const noexcept {
  return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first == QTExponent{0, 0});
}

bool PolyQT::is_one() const noexcept {
  return terms_.size() == 1 && terms_.begin()->first == QTExponent{0, 0} && terms_.begin()->second == 1;
}

Integer PolyQT::coeff(int q_exp, int t_exp) const {
  auto it = terms_.find({q_exp, t_exp});
  return it == terms_.end() ? Integer(0) : it->second;
}

void PolyQT::add_term(int q_exp, int t_exp, const Integer& c) {
  if (q_exp < 0 || t_exp < 0) throw PreconditionError("PolyQT exponents must be non-negative");
  if (sgn(c) == 0) return;
  auto [it, inserted] = terms_.try_emplace({q_exp, t_exp}, c);
  if (!inserted) {
    it->second += c;
    if (sgn(it->second) == 0) terms_.erase(it);
  }
}

int PolyQT::degree_q() const {
  if (terms_.empty()) throw PreconditionError("degree of zero polynomial");
  return terms_.rbegin()->first.first;
}

int PolyQT::degree_t() const {
  if (terms_.empty()) throw PreconditionError("degree of zero polynomial");
  int d = 0;
  for (const auto& [e, c] : terms_) d = std::max(d, e.second);
  return d;
}

int PolyQT::min_q() const {
  if (terms_.empty()) throw PreconditionError("degree of zero polynomial");
  return terms_.begin()->first.first;
}

int PolyQT::min_t() const {
  if (terms_.empty()) throw PreconditionError("degree of zero polynomial");
  int d = std::numeric_limits<int>::max();
  for (const auto& [e, c] : terms_) d = std::min(d, e.second);
  return d;
}

int PolyQT::total_degree() const {
  if (terms_.empty()) throw PreconditionError("degree of zero polynomial");
  int d = 0;
  for (const auto& [e, c] : terms_) d = std::max(d, e.first + e.second);
  return d;
}

std::pair<QTExponent, Integer> PolyQT::leading_term() const {
  if (terms_.empty()) throw PreconditionError("leading term of zero polynomial");
  auto best = terms_.begin();
  for (auto it = terms_.begin(); it != terms_.end(); ++it) {
    int d = it->first.first + it->first.second;
    int bd = best->first.first + best->first.second;
    if (d > bd || (d == bd && it->first.first > best->first.first)) best = it;
  }
  return *best;
}

Integer PolyQT::content() const {
  Integer g = 0;
  for (const auto& [e, c] : terms_) {
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
    if (g == 1) break;
  }
  return g;
}

Integer PolyQT::eval(const Integer& q, const Integer& t) const {
  if (terms_.empty()) return 0;
  std::vector<Integer> qp(static_cast<std::size_t>(degree_q() + 1));
  std::vector<Integer> tp(static_cast<std::size_t>(degree_t() + 1));
  qp[0] = 1;
  tp[0] = 1;
  for (std::size_t i = 1; i < qp.size(); ++i) qp[i] = qp[i - 1] * q;
  for (std::size_t i = 1; i < tp.size(); ++i) tp[i] = tp[i - 1] * t;
  Integer sum = 0;
  for (const auto& [e, c] : terms_) sum += c * qp[static_cast<std::size_t>(e.first)] * tp[static_cast<std::size_t>(e.second)];
  return sum;
}

Rational PolyQT::eval(const Rational& q, const Rational& t) const {
  Rational sum = 0;
  for (const auto& [e, c] : terms_) sum += Rational(c) * rational_pow(q, e.first) * rational_pow(t, e.second);
  return sum;
}

PolyQT& PolyQT::operator+=(const PolyQT& other) {
  for (const auto& [e, c] : other.terms_) add_term(e.first, e.second, c);
  return *this;
}

PolyQT& PolyQT::operator-=(const PolyQT& other) {
  for (const auto& [e, c] : other.terms_) add_term(e.first, e.second, -c);
  return *this;
}

PolyQT operator*(const PolyQT& a, const PolyQT& b) {
  PolyQT out;
  if (a.is_zero() || b.is_zero()) return out;
  const int q0 = a.min_q() + b.min_q();
  const int q1 = a.degree_q() + b.degree_q();
  const int t0 = a.min_t() + b.min_t();
  const int t1 = a.degree_t() + b.degree_t();
  const std::size_t width = static_cast<std::size_t>(t1 - t0 + 1);
  const std::size_t cells = static_cast<std::size_t>(q1 - q0 + 1) * width;
  const std::size_t products = a.terms_.size() * b.terms_.size();
  if (cells > 8 * products + 4096) {
    for (const auto& [ea, ca] : a.terms_)
      for (const auto& [eb, cb] : b.terms_) out.add_term(ea.first + eb.first, ea.second + eb.second, ca * cb);
    return out;
  }
  std::vector<Integer> acc(cells);
  for (const auto& [ea, ca] : a.terms_) {
    for (const auto& [eb, cb] : b.terms_) {
      std::size_t idx = static_cast<std::size_t>(ea.first + eb.first - q0) * width +
                        static_cast<std::size_t>(ea.second + eb.second - t0);
      mpz_addmul(acc[idx].get_mpz_t(), ca.get_mpz_t(), cb.get_mpz_t());
    }
  }
  for (std::size_t i = 0; i < cells; ++i) {
    if (sgn(acc[i]) == 0) continue;
    int qe = q0 + static_cast<int>(i / width);
    int te = t0 + static_cast<int>(i % width);
    out.terms_.emplace_hint(out.terms_.end(), QTExponent{qe, te}, std::move(acc[i]));
  }
  return out;
}

PolyQT& PolyQT::operator*=(const PolyQT& other) { return *this = *this * other; }

PolyQT& PolyQT::operator*=(const Integer& c) {
  if (sgn(c) == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [e, x] : terms_) x *= c;
  return *this;
}

PolyQT operator-(PolyQT a) {
  for (auto& [e, c] : a.terms_) c = -c;
  return a;
}

std::string PolyQT::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [e, c] : terms_) {
    Integer mag = abs(c);
    if (first) {
      if (sgn(c) < 0) os << "-";
    } else {
      os << (sgn(c) < 0 ? " - " : " + ");
    }
    first = false;
    bool has_var = e.first != 0 || e.second != 0;
    if (!has_var) {
      os << mag.get_str();
      continue;
    }
    if (mag != 1) os << mag.get_str() << "*";
    bool wrote = false;
    if (e.first != 0) {
      os << "q";
      if (e.first != 1) os << "^" << e.first;
      wrote = true;
    }
    if (e.second != 0) {
      if (wrote) os << "*";
      os << "t";
      if (e.second != 1) os << "^" << e.second;
    }
  }
  return os.str();
}

PolyQT gcd(const PolyQT& a, const PolyQT& b) {
  if (a.is_zero()) return normalize_graded_sign(b);
  if (b.is_zero()) return normalize_graded_sign(a);
  const int mq = std::min(a.min_q(), b.min_q());
  const int mt = std::min(a.min_t(), b.min_t());
  if (a.is_monomial() || b.is_monomial()) {
    Integer g;
    Integer ca = a.content();
    Integer cb = b.content();
    mpz_gcd(g.get_mpz_t(), ca.get_mpz_t(), cb.get_mpz_t());
    return PolyQT::monomial(g, mq, mt);
  }
  // Pull out each operand's own monomial factor; the cofactors then share none.
  PolyQT ra = strip_monomial(a, a.min_q(), a.min_t());
  PolyQT rb = strip_monomial(b, b.min_q(), b.min_t());
  PolyQT g = from_recursive(detail::upoly_gcd(to_recursive(ra), to_recursive(rb)));
  return normalize_graded_sign(shift(g, mq, mt));
}

PolyQT divexact(const PolyQT& a, const PolyQT& b) {
  if (b.is_zero()) throw DivisionByZero();
  if (a.is_zero()) return a;
  if (b.is_monomial()) {
    const auto& [e, c] = *b.terms().begin();
    PolyQT out;
    for (const auto& [ea, ca] : a.terms()) {
      if (ea.first < e.first || ea.second < e.second) throw InexactDivision("monomial does not divide polynomial");
      out.add_term(ea.first - e.first, ea.second - e.second, detail::Ring<Integer>::exact_div(ca, c));
    }
    return out;
  }
  const int mq = b.min_q();
  const int mt = b.min_t();
  if (a.min_q() < mq || a.min_t() < mt) throw InexactDivision("polynomial division is not exact");
  PolyQT ra = strip_monomial(a, mq, mt);
  PolyQT rb = strip_monomial(b, mq, mt);
  return from_recursive(detail::exact_div_poly(to_recursive(ra), to_recursive(rb)));
}

PolyQT divexact(const PolyQT& a, const Integer& c) {
  PolyQT out;
  for (const auto& [e, x] : a.terms()) out.add_term(e.first, e.second, detail::Ring<Integer>::exact_div(x, c));
  return out;
}

PolyQT shift(const PolyQT& p, int q_exp, int t_exp) {
  if (q_exp == 0 && t_exp == 0) return p;
  PolyQT out;
  for (const auto& [e, c] : p.terms()) out.add_term(e.first + q_exp, e.second + t_exp, c);
  return out;
}

PolyQT to_poly_qt(const LaurentPoly& p) {
  PolyQT out;
  for (const auto& [e, c] : p.terms()) {
    if (e < 0 || c.get_den() != 1) throw PreconditionError("Laurent polynomial is not an integer polynomial");
    out.add_term(e, 0, c.get_num());
  }
  return out;
}

}  // namespace qtsym
