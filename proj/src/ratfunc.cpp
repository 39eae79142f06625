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
#include "qtsym/ratfunc.hpp"

#include <algorithm>

#include "qtsym/errors.hpp"

namespace qtsym {

RatFunc::RatFunc(const Rational& c) : num_(c.get_num()), den_(c.get_den()) {}

RatFunc::RatFunc(const LaurentPoly& p) : den_(1) {
  if (p.is_zero()) return;
  Integer common = 1;
  for (const auto& [e, c] : p.terms()) mpz_lcm(common.get_mpz_t(), common.get_mpz_t(), c.get_den_mpz_t());
  const int low = std::min(0, p.min_exponent());
  for (const auto& [e, c] : p.terms()) {
    Rational scaled = c * common;
    num_.add_term(e - low, 0, scaled.get_num());
  }
  den_ = PolyQT::monomial(common, -low, 0);
  normalize();
}

RatFunc::RatFunc(PolyQT num, PolyQT den) : num_(std::move(num)), den_(std::move(den)) {
  if (den_.is_zero()) throw DivisionByZero();
  normalize();
}

void RatFunc::normalize() {
  if (num_.is_zero()) {
    den_ = PolyQT(1);
    return;
  }
  if (!den_.is_one()) {
    PolyQT g = gcd(num_, den_);
    if (!g.is_one()) {
      num_ = divexact(num_, g);
      den_ = divexact(den_, g);
    }
  }
  if (sgn(den_.leading_term().second) < 0) {
    num_ = -num_;
    den_ = -den_;
  }
}

Rational RatFunc::eval(const Rational& q, const Rational& t) const {
  Rational d = den_.eval(q, t);
  if (sgn(d) == 0) throw DivisionByZero();
  return num_.eval(q, t) / d;
}

RatFunc& RatFunc::operator+=(const RatFunc& other) {
  if (other.is_zero()) return *this;
  if (is_zero()) return *this = other;
  if (den_ == other.den_) {
    num_ += other.num_;
    if (!den_.is_one()) normalize();
    else if (num_.is_zero()) den_ = PolyQT(1);
    return *this;
  }
  num_ = num_ * other.den_ + other.num_ * den_;
  den_ = den_ * other.den_;
  normalize();
  return *this;
}

RatFunc& RatFunc::operator-=(const RatFunc& other) { return *this += -other; }

RatFunc& RatFunc::operator*=(const RatFunc& other) {
  if (is_zero()) return *this;
  if (other.is_zero()) return *this = RatFunc();
  if (den_.is_one() && other.den_.is_one()) {
    num_ *= other.num_;
    return *this;
  }
  // Cross-cancel first so the products stay small.
  PolyQT g1 = gcd(num_, other.den_);
  PolyQT g2 = gcd(other.num_, den_);
  PolyQT n = divexact(num_, g1) * divexact(other.num_, g2);
  PolyQT d = divexact(den_, g2) * divexact(other.den_, g1);
  *this = RatFunc(std::move(n), std::move(d), Raw{});
  if (sgn(den_.leading_term().second) < 0) {
    num_ = -num_;
    den_ = -den_;
  }
  return *this;
}

RatFunc& RatFunc::operator/=(const RatFunc& other) {
  if (other.is_zero()) throw DivisionByZero();
  return *this *= RatFunc(other.den_, other.num_, Raw{});
}

std::string RatFunc::to_string() const {
  if (den_.is_one()) return num_.to_string();
  return "(" + num_.to_string() + ")/(" + den_.to_string() + ")";
}

RatFunc ratfunc_arith(const RatFunc& a, const RatFunc& b, ArithOp op) {
  switch (op) {
    case ArithOp::add: return a + b;
    case ArithOp::sub: return a - b;
    case ArithOp::mul: return a * b;
    case ArithOp::div: return a / b;
  }
  throw PreconditionError("unknown arithmetic operation");
}

}  // namespace qtsym
