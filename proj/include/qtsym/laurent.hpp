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

#include <gmpxx.h>

#include <map>
#include <string>

namespace qtsym {

using Integer = mpz_class;
using Rational = mpq_class;

inline bool is_zero(const Integer& x) { return sgn(x) == 0; }
inline bool is_zero(const Rational& x) { return sgn(x) == 0; }

enum class ArithOp { add, sub, mul, div };

/// Laurent polynomial in q with rational coefficients. Zero coefficients are
/// never stored, so the zero polynomial is the empty map.
class LaurentPoly {
 public:
  using TermMap = std::map<int, Rational>;

  LaurentPoly() = default;
  LaurentPoly(long c) : LaurentPoly(Rational(c)) {}  // NOLINT(google-explicit-constructor)
  LaurentPoly(const Integer& c) : LaurentPoly(Rational(c)) {}  // NOLINT
  LaurentPoly(const Rational& c);  // NOLINT

  static LaurentPoly monomial(const Rational& c, int exponent);
  static LaurentPoly q_power(int exponent) { return monomial(Rational(1), exponent); }

  const TermMap& terms() const noexcept { return terms_; }
  bool is_zero() const noexcept { return terms_.empty(); }
  Rational coeff(int exponent) const;
  // Both require a nonzero polynomial.
  int min_exponent() const;
  int max_exponent() const;

  void add_term(int exponent, const Rational& c);

  Rational eval_q1() const;
  Rational eval(const Rational& q) const;

  LaurentPoly& operator+=(const LaurentPoly& other);
  LaurentPoly& operator-=(const LaurentPoly& other);
  LaurentPoly& operator*=(const LaurentPoly& other);

  friend LaurentPoly operator+(LaurentPoly a, const LaurentPoly& b) { return a += b; }
  friend LaurentPoly operator-(LaurentPoly a, const LaurentPoly& b) { return a -= b; }
  friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b);
  friend LaurentPoly operator-(LaurentPoly a);
  friend bool operator==(const LaurentPoly& a, const LaurentPoly& b) { return a.terms_ == b.terms_; }

  /// Human readable form, e.g. "4 + q^3 + q^4".
  std::string to_string() const;

 private:
  TermMap terms_;
};

inline bool is_zero(const LaurentPoly& p) { return p.is_zero(); }

/// q-integer [m]_q = 1 + q + ... + q^{m-1}; zero for m = 0.
LaurentPoly qint(int m);

Rational eval_q1(const LaurentPoly& p);

/// Ring arithmetic; ArithOp::div is rejected (Laurent polynomials are not a field).
LaurentPoly laurent_arith(const LaurentPoly& a, const LaurentPoly& b, ArithOp op);

/// Exact integer power of a rational, allowing negative exponents.
Rational rational_pow(const Rational& base, int exponent);

}  // namespace qtsym
