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
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "qtsym/errors.hpp"
#include "qtsym/partition.hpp"
#include "qtsym/ratfunc.hpp"

namespace qtsym {

enum class Basis { m, h, e, p, s, Htilde };

std::string basis_name(Basis b);
/// Accepts "m", "h", "e", "p", "s" and "Htilde".
Basis parse_basis(const std::string& name);

/// Symmetric function as a sparse map from partitions to coefficients in one
/// basis. The coefficient ring is the template parameter (LaurentPoly,
/// PolyQT, RatFunc or a plain Rational). Values may be inhomogeneous.
template <class C>
class SymFunc {
 public:
  using Coeff = C;
  using TermMap = std::map<Partition, C>;

  explicit SymFunc(Basis basis = Basis::s) : basis_(basis) {}

  static SymFunc single(Basis basis, const Partition& lambda, const C& c = C(1)) {
    SymFunc f(basis);
    f.add_term(lambda, c);
    return f;
  }
  /// The constant 1, i.e. the empty-partition basis element.
  static SymFunc one(Basis basis = Basis::s) { return single(basis, Partition()); }

  Basis basis() const noexcept { return basis_; }
  const TermMap& terms() const noexcept { return terms_; }
  bool is_zero() const noexcept { return terms_.empty(); }

  C coeff(const Partition& lambda) const {
    auto it = terms_.find(lambda);
    return it == terms_.end() ? C() : it->second;
  }

  void add_term(const Partition& lambda, const C& c) {
    if (qtsym::is_zero(c)) return;
    auto [it, inserted] = terms_.try_emplace(lambda, c);
    if (!inserted) {
      it->second += c;
      if (qtsym::is_zero(it->second)) terms_.erase(it);
    }
  }

  SymFunc& operator+=(const SymFunc& other) {
    require_same_basis(other);
    for (const auto& [lambda, c] : other.terms_) add_term(lambda, c);
    return *this;
  }
  SymFunc& operator-=(const SymFunc& other) {
    require_same_basis(other);
    for (const auto& [lambda, c] : other.terms_) add_term(lambda, -c);
    return *this;
  }
  SymFunc& operator*=(const C& scalar) {
    if (qtsym::is_zero(scalar)) {
      terms_.clear();
      return *this;
    }
    for (auto it = terms_.begin(); it != terms_.end();) {
      it->second *= scalar;
      it = qtsym::is_zero(it->second) ? terms_.erase(it) : std::next(it);
    }
    return *this;
  }

  friend SymFunc operator+(SymFunc a, const SymFunc& b) { return a += b; }
  friend SymFunc operator-(SymFunc a, const SymFunc& b) { return a -= b; }
  friend SymFunc operator-(SymFunc a) {
    for (auto& [lambda, c] : a.terms_) c = -c;
    return a;
  }
  friend SymFunc operator*(const C& scalar, SymFunc f) { return f *= scalar; }
  friend bool operator==(const SymFunc& a, const SymFunc& b) {
    return a.basis_ == b.basis_ && a.terms_ == b.terms_;
  }

  std::set<int> degrees() const {
    std::set<int> out;
    for (const auto& [lambda, c] : terms_) out.insert(lambda.size());
    return out;
  }
  bool is_homogeneous() const { return degrees().size() <= 1; }
  /// Degree of a homogeneous value (0 for zero); throws InhomogeneousInput.
  int degree() const {
    auto ds = degrees();
    if (ds.size() > 1) throw InhomogeneousInput("symmetric function is not homogeneous");
    return ds.empty() ? 0 : *ds.begin();
  }
  SymFunc piece(int degree) const {
    SymFunc out(basis_);
    for (const auto& [lambda, c] : terms_)
      if (lambda.size() == degree) out.terms_.emplace(lambda, c);
    return out;
  }

  template <class D, class F>
  SymFunc<D> map_coeffs(F&& f) const {
    SymFunc<D> out(basis_);
    for (const auto& [lambda, c] : terms_) out.add_term(lambda, f(c));
    return out;
  }
  template <class D>
  SymFunc<D> cast() const {
    return map_coeffs<D>([](const C& c) { return D(c); });
  }
  SymFunc with_basis(Basis b) const {
    SymFunc out = *this;
    out.basis_ = b;
    return out;
  }

  std::string to_string() const {
    if (terms_.empty()) return "0";
    std::string out;
    for (const auto& [lambda, c] : terms_) {
      if (!out.empty()) out += " + ";
      std::string cs;
      if constexpr (requires { c.to_string(); }) {
        cs = c.to_string();
      } else {
        cs = c.get_str();
      }
      out += "(" + cs + ")*" + basis_name(basis_) + "[" + lambda.to_string() + "]";
    }
    return out;
  }

 private:
  void require_same_basis(const SymFunc& other) const {
    if (other.basis_ != basis_ && !other.terms_.empty() && !terms_.empty())
      throw PreconditionError("cannot combine symmetric functions in different bases");
  }

  Basis basis_;
  TermMap terms_;
};

/// Result of straightening a Schur index: 0, or +-s_partition.
struct SignedPartition {
  int sign = 0;
  Partition partition;

  friend bool operator==(const SignedPartition& a, const SignedPartition& b) {
    return a.sign == b.sign && a.partition == b.partition;
  }
};

/// Straightens s_gamma for an arbitrary integer sequence gamma by the delta
/// rule: gamma + (l-1, ..., 1, 0) must have distinct non-negative entries;
/// sorting them gives the sign and, after subtracting delta, the partition.
SignedPartition straighten(const std::vector<int>& gamma);

/// Partitions nu containing lambda with nu/lambda a horizontal strip of size m.
std::vector<Partition> add_horizontal_strip(const Partition& lambda, int m);
/// Partitions mu inside lambda with lambda/mu a horizontal strip of size k.
std::vector<Partition> remove_horizontal_strip(const Partition& lambda, int k);
/// Every mu inside lambda with lambda/mu a horizontal strip, of any size.
std::vector<Partition> horizontal_strips_inside(const Partition& lambda);
std::vector<Partition> add_vertical_strip(const Partition& lambda, int m);
std::vector<Partition> remove_vertical_strip(const Partition& lambda, int k);

namespace detail {
inline void require_schur(Basis b, const char* op) {
  if (b != Basis::s) throw PreconditionError(std::string(op) + " expects a Schur-basis argument");
}
template <class C, class StripFn>
SymFunc<C> apply_strip_rule(const SymFunc<C>& f, int size, StripFn strips, const char* op) {
  require_schur(f.basis(), op);
  if (size < 0) throw PreconditionError(std::string(op) + " requires a non-negative size");
  SymFunc<C> out(Basis::s);
  for (const auto& [lambda, c] : f.terms())
    for (const Partition& nu : strips(lambda, size)) out.add_term(nu, c);
  return out;
}
}  // namespace detail

/// h_m * f by the Pieri rule.
template <class C>
SymFunc<C> pieri_h(const SymFunc<C>& f, int m) {
  return detail::apply_strip_rule(f, m, add_horizontal_strip, "pieri_h");
}

/// e_m * f by the dual Pieri rule.
template <class C>
SymFunc<C> pieri_e(const SymFunc<C>& f, int m) {
  return detail::apply_strip_rule(f, m, add_vertical_strip, "pieri_e");
}

/// Skewing by h_k.
template <class C>
SymFunc<C> perp_h(const SymFunc<C>& f, int k) {
  return detail::apply_strip_rule(f, k, remove_horizontal_strip, "perp_h");
}

/// Skewing by e_i.
template <class C>
SymFunc<C> perp_e(const SymFunc<C>& f, int i) {
  return detail::apply_strip_rule(f, i, remove_vertical_strip, "perp_e");
}

}  // namespace qtsym
