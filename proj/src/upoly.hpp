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
// Dense univariate polynomials over a gcd domain, used recursively as
// Z[t][q] for bivariate gcd and exact division. Internal to the library.
#pragma once

#include <gmpxx.h>

#include <utility>
#include <vector>

#include "qtsym/errors.hpp"

namespace qtsym::detail {

template <class R>
struct UPoly {
  std::vector<R> c;  // c[i] multiplies x^i; no trailing zeros

  bool zero() const noexcept { return c.empty(); }
  int deg() const noexcept { return static_cast<int>(c.size()) - 1; }
  const R& lc() const { return c.back(); }
  friend bool operator==(const UPoly& a, const UPoly& b) { return a.c == b.c; }
};

template <class R>
struct Ring;

template <>
struct Ring<mpz_class> {
  static mpz_class one() { return 1; }
  static bool is_zero(const mpz_class& x) { return sgn(x) == 0; }
  static int sign(const mpz_class& x) { return sgn(x); }
  static mpz_class exact_div(const mpz_class& a, const mpz_class& b) {
    if (sgn(b) == 0) throw DivisionByZero();
    if (!mpz_divisible_p(a.get_mpz_t(), b.get_mpz_t())) throw InexactDivision("integer division is not exact");
    mpz_class r;
    mpz_divexact(r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return r;
  }
  static mpz_class gcd(const mpz_class& a, const mpz_class& b) {
    mpz_class r;
    mpz_gcd(r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return r;
  }
  static bool is_one(const mpz_class& x) { return x == 1; }
};

template <class R>
void trim(UPoly<R>& p) {
  while (!p.c.empty() && Ring<R>::is_zero(p.c.back())) p.c.pop_back();
}

template <class R>
UPoly<R> operator+(const UPoly<R>& a, const UPoly<R>& b) {
  UPoly<R> r;
  r.c.resize(std::max(a.c.size(), b.c.size()));
  for (std::size_t i = 0; i < a.c.size(); ++i) r.c[i] = a.c[i];
  for (std::size_t i = 0; i < b.c.size(); ++i) r.c[i] = r.c[i] + b.c[i];
  trim(r);
  return r;
}

template <class R>
UPoly<R> operator-(const UPoly<R>& a) {
  UPoly<R> r = a;
  for (auto& x : r.c) x = -x;
  return r;
}

template <class R>
UPoly<R> operator-(const UPoly<R>& a, const UPoly<R>& b) {
  return a + (-b);
}

template <class R>
UPoly<R> operator*(const UPoly<R>& a, const UPoly<R>& b) {
  UPoly<R> r;
  if (a.zero() || b.zero()) return r;
  r.c.assign(a.c.size() + b.c.size() - 1, R());
  for (std::size_t i = 0; i < a.c.size(); ++i) {
    if (Ring<R>::is_zero(a.c[i])) continue;
    for (std::size_t j = 0; j < b.c.size(); ++j) r.c[i + j] = r.c[i + j] + a.c[i] * b.c[j];
  }
  trim(r);
  return r;
}

template <class R>
UPoly<R> scale(const UPoly<R>& p, const R& s) {
  UPoly<R> r;
  if (Ring<R>::is_zero(s)) return r;
  r.c.reserve(p.c.size());
  for (const auto& x : p.c) r.c.push_back(x * s);
  trim(r);
  return r;
}

template <class R>
UPoly<R> div_scalar(const UPoly<R>& p, const R& s) {
  UPoly<R> r;
  r.c.reserve(p.c.size());
  for (const auto& x : p.c) r.c.push_back(Ring<R>::exact_div(x, s));
  return r;
}

template <class R>
R ring_pow(const R& base, int e) {
  R r = Ring<R>::one();
  for (int i = 0; i < e; ++i) r = r * base;
  return r;
}

// x^shift * p * s
template <class R>
UPoly<R> shifted_scale(const UPoly<R>& p, int shift, const R& s) {
  UPoly<R> r;
  r.c.assign(static_cast<std::size_t>(shift), R());
  for (const auto& x : p.c) r.c.push_back(x * s);
  trim(r);
  return r;
}

/// Pseudo-remainder: lc(b)^(deg a - deg b + 1) * a mod b.
template <class R>
UPoly<R> prem(UPoly<R> a, const UPoly<R>& b) {
  int d = a.deg() - b.deg();
  if (d < 0) return a;
  const R& l = b.lc();
  int e = d + 1;
  while (!a.zero() && a.deg() >= b.deg()) {
    int s = a.deg() - b.deg();
    R lead = a.lc();
    a = scale(a, l) - shifted_scale(b, s, lead);
    --e;
  }
  if (e > 0) a = scale(a, ring_pow(l, e));
  return a;
}

template <class R>
UPoly<R> exact_div_poly(UPoly<R> a, const UPoly<R>& b) {
  if (b.zero()) throw DivisionByZero();
  UPoly<R> quot;
  if (a.deg() >= b.deg()) quot.c.assign(static_cast<std::size_t>(a.deg() - b.deg() + 1), R());
  while (!a.zero() && a.deg() >= b.deg()) {
    int s = a.deg() - b.deg();
    R factor = Ring<R>::exact_div(a.lc(), b.lc());
    quot.c[static_cast<std::size_t>(s)] = factor;
    a = a - shifted_scale(b, s, factor);
  }
  if (!a.zero()) throw InexactDivision("polynomial division is not exact");
  trim(quot);
  return quot;
}

template <class R>
UPoly<R> normalize_sign(UPoly<R> p) {
  if (!p.zero() && Ring<R>::sign(p.lc()) < 0) p = -p;
  return p;
}

template <class R>
R content(const UPoly<R>& p) {
  R g{};
  for (const auto& x : p.c) {
    g = Ring<R>::gcd(g, x);
    if (Ring<R>::is_one(g)) break;
  }
  return g;
}

template <class R>
UPoly<R> primitive_part(const UPoly<R>& p) {
  if (p.zero()) return p;
  return normalize_sign(div_scalar(p, content(p)));
}

/// Subresultant polynomial remainder sequence gcd.
template <class R>
UPoly<R> upoly_gcd(const UPoly<R>& x, const UPoly<R>& y) {
  if (x.zero()) return normalize_sign(y);
  if (y.zero()) return normalize_sign(x);
  R cont = Ring<R>::gcd(content(x), content(y));
  UPoly<R> a = primitive_part(x);
  UPoly<R> b = primitive_part(y);
  if (a.deg() < b.deg()) std::swap(a, b);
  R g = Ring<R>::one();
  R h = Ring<R>::one();
  while (true) {
    int delta = a.deg() - b.deg();
    UPoly<R> r = prem(a, b);
    if (r.zero()) break;
    if (r.deg() == 0) {
      b = UPoly<R>{{Ring<R>::one()}};
      break;
    }
    a = b;
    b = div_scalar(r, R(g * ring_pow(h, delta)));
    g = a.lc();
    if (delta == 1) {
      h = g;
    } else if (delta > 1) {
      h = Ring<R>::exact_div(ring_pow(g, delta), ring_pow(h, delta - 1));
    }
  }
  return normalize_sign(scale(primitive_part(b), cont));
}

template <class R>
struct Ring<UPoly<R>> {
  static UPoly<R> one() { return UPoly<R>{{Ring<R>::one()}}; }
  static bool is_zero(const UPoly<R>& x) { return x.zero(); }
  static int sign(const UPoly<R>& x) { return x.zero() ? 0 : Ring<R>::sign(x.lc()); }
  static UPoly<R> exact_div(const UPoly<R>& a, const UPoly<R>& b) { return exact_div_poly(a, b); }
  static UPoly<R> gcd(const UPoly<R>& a, const UPoly<R>& b) { return upoly_gcd(a, b); }
  static bool is_one(const UPoly<R>& x) { return x.c.size() == 1 && Ring<R>::is_one(x.c[0]); }
};

}  // namespace qtsym::detail
