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
#include <algorithm>
#include <set>

#include "doctest.h"
#include "qtsym/macdonald.hpp"
#include "qtsym/operators.hpp"
#include "qtsym/parking.hpp"

using namespace qtsym;

namespace {

long ipow(long b, int e) {
  long r = 1;
  while (e-- > 0) r *= b;
  return r;
}

// Classical parking functions as preference vectors: car c prefers spot
// pref[c-1] in 0..n-1, and the sorted preferences satisfy b_(j) <= j.
std::set<std::vector<int>> brute_preferences(int n) {
  std::set<std::vector<int>> out;
  std::vector<int> pref(static_cast<std::size_t>(n), 0);
  while (true) {
    std::vector<int> sorted = pref;
    std::sort(sorted.begin(), sorted.end());
    bool ok = true;
    for (int j = 0; j < n; ++j) ok = ok && sorted[static_cast<std::size_t>(j)] <= j;
    if (ok) out.insert(pref);
    int i = 0;
    while (i < n && ++pref[static_cast<std::size_t>(i)] == n) pref[static_cast<std::size_t>(i++)] = 0;
    if (i == n) break;
  }
  return out;
}

// Car in row i sits in column i - a_i.
std::vector<int> preferences_of(const ParkingFunction& pf) {
  std::vector<int> pref(pf.cars.size());
  for (std::size_t i = 0; i < pf.cars.size(); ++i)
    pref[static_cast<std::size_t>(pf.cars[i] - 1)] = static_cast<int>(i) - pf.path.area_word()[i];
  return pref;
}

PolyQT P(long c, int qe, int te) { return PolyQT::monomial(c, qe, te); }

}  // namespace

TEST_CASE("Dyck paths") {
  const long catalan[] = {1, 1, 2, 5, 14, 42, 132, 429, 1430};
  for (int n = 1; n <= 8; ++n) {
    auto paths = dyck_paths(n);
    CHECK(static_cast<long>(paths.size()) == catalan[n]);
    CHECK(std::is_sorted(paths.begin(), paths.end()));
    for (const DyckPath& p : paths) {
      const auto pts = p.touch_points();
      CHECK(p.comp().partial_sums().back() == n);
      std::vector<int> sums{0};
      for (int s : p.comp().partial_sums()) sums.push_back(s);
      CHECK(sums == pts);
    }
  }
  CHECK(DyckPath::parse("0,1,2,0").comp() == Composition{3, 1});
  CHECK_THROWS_AS(DyckPath({0, 2}), PreconditionError);
  CHECK_THROWS_AS(DyckPath({1}), PreconditionError);
  CHECK_THROWS_AS(DyckPath::parse("0,x"), ParseError);
}

TEST_CASE("parking function counts") {
  for (int n = 1; n <= 7; ++n) {
    long count = 0;
    for_each_pf(n, [&](const ParkingFunction&) { ++count; });
    CHECK(count == ipow(n + 1, n - 1));
  }
  CHECK_THROWS_AS(enumerate_pf(9), PreconditionError);
}

TEST_CASE("parking functions match preference vectors") {
  for (int n = 1; n <= 6; ++n) {
    std::set<std::vector<int>> seen;
    for (const ParkingFunction& pf : enumerate_pf(n)) {
      pf.validate();
      CHECK(seen.insert(preferences_of(pf)).second);
    }
    CHECK(seen == brute_preferences(n));
  }
}

TEST_CASE("text forms") {
  ParkingFunction pf = ParkingFunction::parse("a=0,1,1;c=1,3,2");
  CHECK(pf.cars == std::vector<int>{1, 3, 2});
  CHECK(pf.to_string() == "a=0,1,1;c=1,3,2");
  CHECK_THROWS_AS(ParkingFunction::parse("a=0,1;c=2,1"), PreconditionError);
  CHECK_THROWS_AS(ParkingFunction::parse("a=0,0;c=1,1"), PreconditionError);
  CHECK_THROWS_AS(ParkingFunction::parse("0,1;1,2"), ParseError);
  const PFStatistics st = statistics(pf);
  CHECK(pf_csv_row(pf, st) == "3,\"0,1,1\",\"1,3,2\",2,0,\"2 3 1\",\"{1}\",\"3\"");
  CHECK(pf_csv_header() == "n,area_word,cars,area,dinv,sigma,ides,comp");
}

TEST_CASE("size two statistics") {
  PFStatistics a = statistics(ParkingFunction::parse("a=0,0;c=1,2"));
  CHECK(a.area == 0);
  CHECK(a.dinv == 1);
  CHECK(a.sigma == std::vector<int>{2, 1});
  CHECK(a.ides == 1u);
  CHECK(a.comp == Composition{1, 1});
  PFStatistics b = statistics(ParkingFunction::parse("a=0,1;c=1,2"));
  CHECK(b.area == 1);
  CHECK(b.dinv == 0);
  CHECK(b.sigma == std::vector<int>{2, 1});
  CHECK(b.ides == 1u);
  CHECK(b.comp == Composition{2});
}

TEST_CASE("eight-car example reconstruction") {
  const std::vector<int> sigma{7, 6, 5, 8, 3, 1, 4, 2};
  std::vector<ParkingFunction> hits;
  for_each_pf(8, [&](const ParkingFunction& pf) {
    if (!(pf.path.comp() == Composition{2, 4, 2})) return;
    const PFStatistics st = statistics(pf);
    if (st.area == 6 && st.dinv == 9 && st.sigma == sigma) hits.push_back(pf);
  });
  REQUIRE(hits.size() == 1);
  CHECK(hits[0].to_string() == "a=0,1,0,1,1,2,0,1;c=2,3,4,8,5,7,1,6");
  const PFStatistics st = statistics(hits[0]);
  CHECK(ides_to_string(st.ides, 8) == "{2,4,5,6}");
  CHECK(wpoly(5, 3, hits[0].path) == LaurentPoly(4) + LaurentPoly::q_power(3) + LaurentPoly::q_power(4));
}

TEST_CASE("statistic ranges") {
  for (int n = 1; n <= 6; ++n)
    for_each_pf(n, [&](const ParkingFunction& pf) {
      const PFStatistics st = statistics(pf);
      CHECK(st.dinv >= 0);
      CHECK(st.area >= 0);
      CHECK(st.area <= n * (n - 1) / 2);
      std::vector<int> s = st.sigma;
      std::sort(s.begin(), s.end());
      for (int i = 0; i < n; ++i) CHECK(s[static_cast<std::size_t>(i)] == i + 1);
      std::vector<int> pos(static_cast<std::size_t>(n) + 1);
      for (int i = 0; i < n; ++i) pos[static_cast<std::size_t>(st.sigma[static_cast<std::size_t>(i)])] = i;
      for (int i = 1; i < n; ++i)
        CHECK(((st.ides >> (i - 1)) & 1u) == (pos[static_cast<std::size_t>(i + 1)] < pos[static_cast<std::size_t>(i)] ? 1u : 0u));
    });
}

TEST_CASE("shuffle sums") {
  CHECK(shuffle_sum(Composition{1}) == QSymFunc<PolyQT>::fundamental(1, 0));
  QSymFunc<PolyQT> two = QSymFunc<PolyQT>::fundamental(2, 0);
  two += QSymFunc<PolyQT>::fundamental(2, 1, PolyQT::q());
  CHECK(shuffle_sum(Composition{1, 1}) == two);
  CHECK(shuffle_sum(Composition{2}) == QSymFunc<PolyQT>::fundamental(2, 1, PolyQT::t()));
}

TEST_CASE("shuffle sums against nabla C_alpha 1") {
  for (int n = 1; n <= 6; ++n) {
    SymFunc<RatFunc> total(Basis::m);
    for (const Composition& alpha : compositions_of(n)) {
      const SymFunc<RatFunc> pf_side = to_ratfunc(fqsym_to_sym(shuffle_sum(alpha)));
      CHECK(convert(nabla(c_alpha_one(alpha)), Basis::m) == pf_side);
      total += pf_side;
    }
    CHECK(total == convert(nabla(SymFunc<Rational>::single(Basis::e, {n}).with_basis(Basis::e)), Basis::m));
  }
}

TEST_CASE("weight polynomial") {
  CHECK(wpoly(5, 3, DyckPath({0, 1, 0, 1, 1, 2, 0, 1})) ==
        LaurentPoly(4) + LaurentPoly::q_power(3) + LaurentPoly::q_power(4));
  CHECK(wpoly(3, 1, DyckPath({0, 1, 0, 0})) == LaurentPoly(2));
  CHECK(wpoly(4, 2, DyckPath({0, 1, 2, 3, 4, 5})) ==
        LaurentPoly(3) + LaurentPoly::q_power(1) + LaurentPoly::q_power(2) + LaurentPoly::q_power(3));
  CHECK_THROWS_AS(wpoly(4, 2, DyckPath({0, 1})), SizeMismatch);
  CHECK_THROWS_AS(wpoly(1, 2, DyckPath({0, 1, 1})), PreconditionError);
}

TEST_CASE("corollary sum against nabla m") {
  for (int n = 2; n <= 5; ++n)
    for (int k = 1; n + k <= 6; ++k) {
      const SymFunc<RatFunc> expected =
          RatFunc(n % 2 ? 1 : -1) * convert(nabla(SymFunc<Rational>::single(Basis::m, Partition::hook(n, k))), Basis::s);
      CHECK(to_ratfunc(corollary_rhs(n, k)) == expected);
    }
  CHECK_THROWS_AS(corollary_rhs(2, 6), PreconditionError);
}

TEST_CASE("LLT polynomials by path") {
  QSymFunc<PolyQT> nene = QSymFunc<PolyQT>::fundamental(2, 0);
  nene += QSymFunc<PolyQT>::fundamental(2, 1, PolyQT::q());
  CHECK(llt_by_path(DyckPath({0, 0})) == nene);
  SymFunc<PolyQT> nene_s(Basis::s);
  nene_s.add_term({2}, PolyQT(1));
  nene_s.add_term({1, 1}, PolyQT::q());
  CHECK(convert(fqsym_to_sym(nene), Basis::s) == nene_s);
  CHECK(llt_by_path(DyckPath({0, 1})) == QSymFunc<PolyQT>::fundamental(2, 1));
  CHECK(llt_by_path(DyckPath({0})) == QSymFunc<PolyQT>::fundamental(1, 0));

  for (int n = 1; n <= 5; ++n)
    for (const DyckPath& path : dyck_paths(n)) {
      const SymFunc<PolyQT> s = convert(fqsym_to_sym(llt_by_path(path)), Basis::s);
      for (const auto& [lambda, c] : s.terms())
        for (const auto& [e, coeff] : c.terms()) {
          CHECK(e.second == 0);
          CHECK(coeff > 0);
        }
    }
}

TEST_CASE("area statistic factors out of path sums") {
  const PolyQT x = P(1, 0, 1);
  for (const Composition& alpha : compositions_of(4)) {
    QSymFunc<PolyQT> by_path;
    for (const DyckPath& path : dyck_paths(4)) {
      if (!(path.comp() == alpha)) continue;
      const QSymFunc<PolyQT> llt = llt_by_path(path);
      for (const auto& [key, c] : llt.terms()) {
        PolyQT w = c;
        for (int i = 0; i < path.area(); ++i) w = w * x;
        by_path.add_term(key.first, key.second, w);
      }
    }
    CHECK(by_path == shuffle_sum(alpha));
  }
}
