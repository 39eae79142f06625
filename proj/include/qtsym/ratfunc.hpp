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

#include <string>

#include "qtsym/laurent.hpp"
#include "qtsym/poly_qt.hpp"

namespace qtsym {

/// Rational function in q and t, kept in canonical form: numerator and
/// denominator coprime in Z[q,t], and the denominator's leading coefficient
/// (graded lex, q > t) positive. Equality is structural on that form.
class RatFunc {
 public:
  RatFunc() : den_(1) {}
  RatFunc(long c) : num_(c), den_(1) {}                // NOLINT(google-explicit-constructor)
  RatFunc(const Integer& c) : num_(c), den_(1) {}      // NOLINT
  RatFunc(const Rational& c);                          // NOLINT
  RatFunc(const PolyQT& p) : num_(p), den_(1) {}       // NOLINT
  RatFunc(const LaurentPoly& p);                       // NOLINT
  RatFunc(PolyQT num, PolyQT den);

  const PolyQT& num() const noexcept { return num_; }
  const PolyQT& den() const noexcept { return den_; }
  bool is_zero() const noexcept { return num_.is_zero(); }
  bool is_polynomial() const noexcept { return den_.is_one(); }

  Rational eval(const Rational& q, const Rational& t) const;

  RatFunc& operator+=(const RatFunc& other);
  RatFunc& operator-=(const RatFunc& other);
  RatFunc& operator*=(const RatFunc& other);
  RatFunc& operator/=(const RatFunc& other);

  friend RatFunc operator+(RatFunc a, const RatFunc& b) { return a += b; }
  friend RatFunc operator-(RatFunc a, const RatFunc& b) { return a -= b; }
  friend RatFunc operator*(RatFunc a, const RatFunc& b) { return a *= b; }
  friend RatFunc operator/(RatFunc a, const RatFunc& b) { return a /= b; }
  friend RatFunc operator-(RatFunc a) {
    a.num_ = -a.num_;
    return a;
  }
  friend bool operator==(const RatFunc& a, const RatFunc& b) { return a.num_ == b.num_ && a.den_ == b.den_; }

  std::string to_string() const;

 private:
  struct Raw {};
  RatFunc(PolyQT num, PolyQT den, Raw) : num_(std::move(num)), den_(std::move(den)) {}
  void normalize();

  PolyQT num_;
  PolyQT den_;
};

inline bool is_zero(const RatFunc& f) { return f.is_zero(); }

RatFunc ratfunc_arith(const RatFunc& a, const RatFunc& b, ArithOp op);

}  // namespace qtsym
