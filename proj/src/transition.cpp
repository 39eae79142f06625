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
#include "qtsym/transition.hpp"

#include <mutex>

namespace qtsym {

namespace {

// K(lambda, mu): strip the boxes labelled with the largest letter, which form
// a horizontal strip of size mu_last.
class KostkaMemo {
 public:
  Integer get(const Partition& lambda, const std::vector<int>& content) {
    if (content.empty()) return lambda.empty() ? Integer(1) : Integer(0);
    auto key = std::make_pair(lambda, content);
    auto it = memo_.find(key);
    if (it != memo_.end()) return it->second;
    std::vector<int> rest(content.begin(), content.end() - 1);
    Integer total = 0;
    for (const Partition& nu : remove_horizontal_strip(lambda, content.back()))
      // Letters 1..r fill at most r rows.
      if (nu.length() <= static_cast<int>(rest.size())) total += get(nu, rest);
    memo_.emplace(std::move(key), total);
    return total;
  }

 private:
  std::map<std::pair<Partition, std::vector<int>>, Integer> memo_;
};

DenseMatrix<Integer> pieri_matrix(const TransitionTables& t, bool rows) {
  const std::size_t n = t.partitions.size();
  DenseMatrix<Integer> m(n, n);
  for (std::size_t i = 0; i < n; ++i) {
    SymFunc<Rational> acc = SymFunc<Rational>::one();
    for (int part : t.partitions[i].parts()) acc = rows ? pieri_h(acc, part) : pieri_e(acc, part);
    for (const auto& [nu, c] : acc.terms()) m(i, t.index.at(nu)) = c.get_num();
  }
  return m;
}

std::unique_ptr<TransitionTables> build_tables(int degree) {
  auto t = std::make_unique<TransitionTables>();
  t->degree = degree;
  t->partitions = partitions_of(degree);
  for (std::size_t i = 0; i < t->partitions.size(); ++i) t->index.emplace(t->partitions[i], i);
  const std::size_t n = t->partitions.size();

  KostkaMemo memo;
  t->s_to_m = DenseMatrix<Integer>(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) t->s_to_m(i, j) = memo.get(t->partitions[i], t->partitions[j].parts());
  t->m_to_s = integral_inverse(t->s_to_m);
  t->h_to_s = pieri_matrix(*t, true);
  t->s_to_h = integral_inverse(t->h_to_s);
  t->e_to_s = pieri_matrix(*t, false);
  t->s_to_e = integral_inverse(t->e_to_s);
  return t;
}

std::mutex g_tables_mutex;
std::map<int, std::unique_ptr<TransitionTables>> g_tables;

}  // namespace

const TransitionTables& transition_tables(int degree) {
  if (degree < 0) throw PreconditionError("negative degree");
  check_degree(degree);
  std::lock_guard<std::mutex> lock(g_tables_mutex);
  auto it = g_tables.find(degree);
  if (it == g_tables.end()) it = g_tables.emplace(degree, build_tables(degree)).first;
  return *it->second;
}

Integer kostka(const Partition& lambda, const Partition& mu) {
  if (lambda.size() != mu.size()) throw SizeMismatch("kostka: |lambda| != |mu|");
  const TransitionTables& t = transition_tables(lambda.size());
  return t.s_to_m(t.index.at(lambda), t.index.at(mu));
}

SymFunc<Rational> hook_m_to_s(int a, int k) {
  if (a < 1 || k < 0) throw PreconditionError("hook_m_to_s requires a >= 1 and k >= 0");
  const int n = a + k;
  check_degree(n);
  SymFunc<Rational> out(Basis::s);
  // m_(1^n) = e_n; the closed rule would weight it by n.
  if (a == 1) {
    out.add_term(Partition(std::vector<int>(static_cast<std::size_t>(n), 1)), Rational(1));
    return out;
  }
  for (const Partition& mu : partitions_of(n)) {
    if (mu[0] == 1) {
      out.add_term(mu, Rational((a % 2 == 1 ? 1 : -1) * (k + 1)));
      continue;
    }
    // mu = (l, 2^j, 1^i) with l >= 2.
    const int l = mu[0];
    int j = 0;
    int i = 0;
    bool shape_ok = true;
    for (std::size_t r = 1; r < mu.parts().size(); ++r) {
      if (mu[r] == 2 && i == 0) ++j;
      else if (mu[r] == 1) ++i;
      else shape_ok = false;
    }
    if (!shape_ok || j + l > a) continue;
    // Without this bound the rule would put s_(2,2) into p_4.
    if (j > k) continue;
    out.add_term(mu, Rational((a - l) % 2 == 0 ? 1 : -1));
  }
  return out;
}

namespace detail {

const DenseMatrix<Integer>& to_schur_matrix(const TransitionTables& t, Basis from) {
  switch (from) {
    case Basis::m: return t.m_to_s;
    case Basis::h: return t.h_to_s;
    case Basis::e: return t.e_to_s;
    default: throw UnsupportedConversion("no Schur transition from basis " + basis_name(from));
  }
}

const DenseMatrix<Integer>& from_schur_matrix(const TransitionTables& t, Basis to) {
  switch (to) {
    case Basis::m: return t.s_to_m;
    case Basis::h: return t.s_to_h;
    case Basis::e: return t.s_to_e;
    default: throw UnsupportedConversion("no Schur transition to basis " + basis_name(to));
  }
}

std::vector<std::pair<Partition, int>> power_sum_to_schur(const Partition& lambda) {
  if (lambda.empty()) return {{Partition(), 1}};
  if (lambda.length() != 1)
    throw UnsupportedConversion("power sum p_" + lambda.to_string() + " is not a single row");
  const int n = lambda[0];
  std::vector<std::pair<Partition, int>> out;
  for (int r = 1; r <= n; ++r) out.emplace_back(Partition::hook(r, n - r), (n - r) % 2 == 0 ? 1 : -1);
  return out;
}

}  // namespace detail

}  // namespace qtsym
