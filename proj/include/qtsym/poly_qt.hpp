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
#include <string>
#include <utility>

#include "qtsym/laurent.hpp"

namespace qtsym {

/// Exponent pair (q-exponent, t-exponent), both non-negative.
using QTExponent = std::pair<int, int>;

/// Polynomial in q and t with integer coefficients.
class PolyQT {
 public:
  using TermMap = std::map<QTExponent, Integer>;

  PolyQT() = default;
  PolyQT(long c) : PolyQT(Integer(c)) {}  // NOLINT(google-explicit-constructor)
  PolyQT(const Integer& c);               // NOLINT

  static PolyQT monomial(const Integer& c, int q_exp, int t_exp);
  static PolyQT q() { return monomial(1, 1, 0); }
  static PolyQT t() { return monomial(1, 0, 1); }

  const TermMap& terms() const noexcept { return terms_; }
  bool is_zero() const noexcept { return terms_.empty(); }
  bool is_monomial() const noexcept { return terms_.size() == 1; }
  bool is_constant() const noexcept;
  bool is_one() const noexcept;
  Integer coeff(int q_exp, int t_exp) const;
  void add_term(int q_exp, int t_exp, const Integer& c);

  // Degree queries require a nonzero polynomial.
  int degree_q() const;
  int degree_t() const;
  int min_q() const;
  int min_t() const;
  int total_degree() const;

  /// Leading term under graded lexicographic order with q > t.
  std::pair<QTExponent, Integer> leading_term() const;
  /// Non-negative gcd of the coefficients (zero for the zero polynomial).
  Integer content() const;

  Integer eval(const Integer& q, const Integer& t) const;
  Rational eval(const Rational& q, const Rational& t) const;

  PolyQT& operator+=(const PolyQT& other);
  PolyQT& operator-=(const PolyQT& other);
  PolyQT& operator*=(const PolyQT& other);
  PolyQT& operator*=(const Integer& c);

  friend PolyQT operator+(PolyQT a, const PolyQT& b) { return a += b; }
  friend PolyQT operator-(PolyQT a, const PolyQT& b) { return a -= b; }
  friend PolyQT operator*(const PolyQT& a, const PolyQT& b);
  friend PolyQT operator-(PolyQT a);
  friend bool operator==(const PolyQT& a, const PolyQT& b) { return a.terms_ == b.terms_; }

  std::string to_string() const;

 private:
  TermMap terms_;
};

inline bool is_zero(const PolyQT& p) { return p.is_zero(); }

/// Greatest common divisor over Z[q,t], computed with subresultant remainder
/// sequences. The result has a positive graded-lex leading coefficient.
PolyQT gcd(const PolyQT& a, const PolyQT& b);

/// a / b when b divides a exactly; throws InexactDivision otherwise.
PolyQT divexact(const PolyQT& a, const PolyQT& b);

/// Divides every coefficient by an integer that must divide it exactly.
PolyQT divexact(const PolyQT& a, const Integer& c);

/// Multiplies by q^qe t^te (both non-negative).
PolyQT shift(const PolyQT& p, int q_exp, int t_exp);

/// Lifts a Laurent polynomial with integer coefficients and non-negative
/// exponents into Z[q,t]; throws PreconditionError otherwise.
PolyQT to_poly_qt(const LaurentPoly& p);

}  // namespace qtsym
