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

#include <cstdint>
#include <map>
#include <utility>
#include <vector>

#include "qtsym/config.hpp"
#include "qtsym/symfunc.hpp"

namespace qtsym {

/// Linear combination of Gessel fundamentals F_{n,S}. The descent set S is a
/// bit mask with bit (i-1) standing for i in {1..n-1}.
template <class C>
class QSymFunc {
 public:
  using Key = std::pair<int, std::uint32_t>;

  static QSymFunc fundamental(int degree, std::uint32_t descents, const C& c = C(1)) {
    QSymFunc f;
    f.add_term(degree, descents, c);
    return f;
  }

  const std::map<Key, C>& terms() const noexcept { return terms_; }
  bool is_zero() const noexcept { return terms_.empty(); }

  void add_term(int degree, std::uint32_t descents, const C& c) {
    if (degree < 0 || (degree < 32 && (descents >> (degree > 0 ? degree - 1 : 0)) != 0))
      throw PreconditionError("descent set must lie in {1..degree-1}");
    if (qtsym::is_zero(c)) return;
    auto [it, inserted] = terms_.try_emplace(Key{degree, descents}, c);
    if (!inserted) {
      it->second += c;
      if (qtsym::is_zero(it->second)) terms_.erase(it);
    }
  }

  QSymFunc& operator+=(const QSymFunc& other) {
    for (const auto& [key, c] : other.terms_) add_term(key.first, key.second, c);
    return *this;
  }
  friend bool operator==(const QSymFunc& a, const QSymFunc& b) { return a.terms_ == b.terms_; }

 private:
  std::map<Key, C> terms_;
};

/// Rewrites a homogeneous quasisymmetric function as a symmetric one in the
/// m-basis. Throws NotSymmetric when the monomial quasisymmetric coefficients
/// are not invariant under rearranging composition parts.
template <class C>
SymFunc<C> fqsym_to_sym(const QSymFunc<C>& g) {
  SymFunc<C> out(Basis::m);
  if (g.is_zero()) return out;
  const int n = g.terms().begin()->first.first;
  for (const auto& [key, c] : g.terms())
    if (key.first != n) throw InhomogeneousInput("fqsym_to_sym expects one degree");
  check_degree(n);
  if (n == 0) {
    out.add_term(Partition(), g.terms().begin()->second);
    return out;
  }

  // Coefficient of M_T is the sum over S subset of T of the F_S coefficient.
  const std::size_t masks = std::size_t{1} << (n - 1);
  std::vector<C> m_coeff(masks);
  for (const auto& [key, c] : g.terms()) m_coeff[key.second] += c;
  for (int bit = 0; bit < n - 1; ++bit)
    for (std::size_t mask = 0; mask < masks; ++mask)
      if (mask & (std::size_t{1} << bit)) m_coeff[mask] += m_coeff[mask ^ (std::size_t{1} << bit)];

  std::map<Partition, const C*> seen;
  for (std::size_t mask = 0; mask < masks; ++mask) {
    Composition beta = Composition::from_descent_mask(n, static_cast<std::uint32_t>(mask));
    auto [it, inserted] = seen.try_emplace(beta.sorted(), &m_coeff[mask]);
    if (!inserted && !(*it->second == m_coeff[mask]))
      throw NotSymmetric("coefficient of M_" + beta.to_string() + " differs from a rearrangement");
  }
  for (const auto& [lambda, c] : seen) out.add_term(lambda, *c);
  return out;
}

}  // namespace qtsym
