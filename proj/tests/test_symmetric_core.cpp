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
#include <random>

#include "doctest.h"
#include "generators.hpp"
#include "oracles.hpp"
#include "qtsym/qsym.hpp"
#include "qtsym/transition.hpp"

using namespace qtsym;
using qtsym::testing::brute_kostka;

namespace {
using SF = SymFunc<Rational>;

SF S(const Partition& p, long c = 1) { return SF::single(Basis::s, p, Rational(c)); }
SF single(Basis b, const Partition& p) { return SF::single(b, p); }

Partition hook_shape(int a, int k) { return Partition::hook(a, k); }
}  // namespace

TEST_CASE("partitions and compositions") {
  CHECK(partitions_of(0) == std::vector<Partition>{Partition()});
  CHECK(partitions_of(3) == std::vector<Partition>{{3}, {2, 1}, {1, 1, 1}});
  CHECK(partitions_of(5).size() == 7);
  CHECK(partitions_of(10).size() == 42);
  CHECK(compositions_of(1).size() == 1);
  CHECK(compositions_of(3).size() == 4);
  CHECK(compositions_of(8).size() == 128);
  for (const Partition& p : partitions_of(7)) {
    CHECK(p.conjugate().conjugate() == p);
    long binom_sum = 0;
    for (int part : p.parts()) binom_sum += static_cast<long>(part) * (part - 1) / 2;
    CHECK(p.conjugate().n_stat() == binom_sum);
  }
  CHECK(Partition::parse("5,1,1,1") == Partition{5, 1, 1, 1});
  CHECK_THROWS_AS(Partition({1, 2}), PreconditionError);
}

TEST_CASE("straighten") {
  CHECK(straighten({1, 3}) == SignedPartition{-1, Partition{2, 2}});
  CHECK(straighten({2, 3}).sign == 0);
  CHECK(straighten({4, 2, 1}) == SignedPartition{1, Partition{4, 2, 1}});
  CHECK(straighten({0, 2}) == SignedPartition{-1, Partition{1, 1}});
  CHECK(straighten({-1, 1}) == SignedPartition{-1, Partition()});
  CHECK(straighten({-2, 1}).sign == 0);
  CHECK(straighten({}) == SignedPartition{1, Partition()});
}

TEST_CASE("straighten exchange rule") {
  for (int a = -3; a <= 6; ++a)
    for (int b = -3; b <= 6; ++b) {
      SignedPartition x = straighten({a, b});
      SignedPartition y = straighten({b - 1, a + 1});
      CHECK(y.sign == -x.sign);
      if (x.sign != 0) CHECK(x.partition == y.partition);
    }
  for (int a = -2; a <= 6; ++a) CHECK(straighten({a, a + 1}).sign == 0);
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 300; ++trial) {
    std::vector<int> g(static_cast<std::size_t>(testing::uniform(rng, 2, 5)));
    for (int& x : g) x = static_cast<int>(testing::uniform(rng, -2, 5));
    std::size_t i = static_cast<std::size_t>(testing::uniform(rng, 0, static_cast<long>(g.size()) - 2));
    std::vector<int> h = g;
    h[i] = g[i + 1] - 1;
    h[i + 1] = g[i] + 1;
    SignedPartition x = straighten(g), y = straighten(h);
    CHECK(x.sign == -y.sign);
    if (x.sign != 0) CHECK(x.partition == y.partition);
  }
}

TEST_CASE("pieri and skewing") {
  CHECK(pieri_h(SF::one(), 2) == S({2}));
  CHECK(pieri_h(S({1}), 1) == S({2}) + S({1, 1}));
  CHECK(pieri_h(S({2, 1}), 2) == S({4, 1}) + S({3, 2}) + S({3, 1, 1}) + S({2, 2, 1}));
  CHECK(perp_h(S({2}), 1) == S({1}));
  CHECK(perp_h(S({1, 1}), 1) == S({1}));
  CHECK(perp_h(S({2, 1}), 2) == S({1}));
  CHECK(perp_e(S({1, 1}), 2) == SF::one());
  CHECK(perp_e(S({2}), 2).is_zero());
  CHECK(perp_e(S({2, 1}), 1) == S({2}) + S({1, 1}));
  CHECK(pieri_e(S({1}), 2) == S({2, 1}) + S({1, 1, 1}));
  CHECK_THROWS_AS(pieri_h(single(Basis::m, {1}), 1), PreconditionError);
}

TEST_CASE("pieri adjointness") {
  for (int n = 0; n <= 6; ++n)
    for (const Partition& lambda : partitions_of(n))
      for (int m = 0; m <= 3; ++m) CHECK(perp_h(pieri_h(S(lambda), m), m).coeff(lambda) >= 1);
}

TEST_CASE("kostka") {
  CHECK(kostka({4}, {4}) == 1);
  CHECK(kostka({2, 1}, {1, 1, 1}) == 2);
  CHECK(kostka({1, 1, 1}, {2, 1}) == 0);
  CHECK_THROWS_AS(kostka({2}, {1}), SizeMismatch);
  for (int n = 1; n <= 7; ++n)
    for (const Partition& l : partitions_of(n))
      for (const Partition& m : partitions_of(n)) CHECK(kostka(l, m) == brute_kostka(l, m));
}

TEST_CASE("kostka matrix is unitriangular for dominance") {
  for (int n = 1; n <= 9; ++n) {
    const TransitionTables& t = transition_tables(n);
    for (std::size_t i = 0; i < t.partitions.size(); ++i)
      for (std::size_t j = 0; j < t.partitions.size(); ++j) {
        if (i == j) CHECK(t.s_to_m(i, j) == 1);
        else if (!t.partitions[i].dominates(t.partitions[j])) CHECK(t.s_to_m(i, j) == 0);
      }
  }
}

TEST_CASE("basis conversion examples") {
  CHECK(convert(single(Basis::h, {3}), Basis::m) ==
        single(Basis::m, {3}) + single(Basis::m, {2, 1}) + single(Basis::m, {1, 1, 1}));
  SF m21 = single(Basis::m, {2, 1});
  CHECK(convert(m21, Basis::h) == Rational(-3) * single(Basis::h, {3}) + Rational(5) * single(Basis::h, {2, 1}) +
                                      Rational(-2) * single(Basis::h, {1, 1, 1}));
  CHECK(convert(m21, Basis::s) == S({2, 1}) - S({1, 1, 1}, 2));
  CHECK(convert(single(Basis::e, {2}), Basis::m) == single(Basis::m, {1, 1}));
  CHECK(convert(single(Basis::p, {3}), Basis::s) == S({3}) - S({2, 1}) + S({1, 1, 1}));
  CHECK_THROWS_AS(convert(single(Basis::p, {2, 1}), Basis::s), UnsupportedConversion);
  CHECK_THROWS_AS(convert(S({2}), Basis::p), UnsupportedConversion);
  SF mixed = single(Basis::h, {2}) + single(Basis::h, {1});
  CHECK(convert(mixed, Basis::s) == S({2}) + S({1}));
  ScopedDegreeGuard guard(4);
  CHECK_THROWS_AS(convert(single(Basis::h, {5}), Basis::s), DegreeGuardExceeded);
}

TEST_CASE("p_n equals m_n") {
  for (int n = 1; n <= 8; ++n)
    CHECK(convert(single(Basis::p, {n}), Basis::m) == single(Basis::m, {n}));
}

TEST_CASE("conversion round trips on random inputs") {
  std::mt19937_64 rng(2024);
  const Basis bases[] = {Basis::m, Basis::h, Basis::e, Basis::s};
  for (int d = 0; d <= 8; ++d) {
    std::vector<Partition> parts = partitions_of(d);
    for (Basis x : bases)
      for (Basis y : bases) {
        SF f(x);
        for (int i = 0; i < 3; ++i)
          f.add_term(parts[static_cast<std::size_t>(testing::uniform(rng, 0, static_cast<long>(parts.size()) - 1))],
                     testing::random_rational(rng));
        CHECK(convert(convert(f, y), x) == f);
      }
  }
}

TEST_CASE("hook monomial formula") {
  SF h21 = hook_m_to_s(2, 1);
  CHECK(h21.coeff({1, 1, 1}) == -2);
  CHECK(h21.coeff({2, 1}) == 1);
  for (int n = 1; n <= 8; ++n)
    CHECK(hook_m_to_s(n, 0) == convert(single(Basis::p, {n}), Basis::s));
  for (int n = 1; n <= 8; ++n)
    for (int a = 1; a <= n; ++a)
      CHECK(hook_m_to_s(a, n - a) == convert(single(Basis::m, hook_shape(a, n - a)), Basis::s));
}

TEST_CASE("fundamental quasisymmetric to symmetric") {
  using QF = QSymFunc<Rational>;
  CHECK(fqsym_to_sym(QF::fundamental(2, 0)) == single(Basis::m, {2}) + single(Basis::m, {1, 1}));
  for (int n = 1; n <= 6; ++n)
    CHECK(fqsym_to_sym(QF::fundamental(n, (1u << (n - 1)) - 1)) == single(Basis::m, Partition(std::vector<int>(static_cast<std::size_t>(n), 1))));
  // F_{2,{1}} is M_11 = e_2; one degree up, F_{3,{1}} = M_12 + M_111 is not symmetric.
  CHECK(fqsym_to_sym(QF::fundamental(2, 1)) == single(Basis::m, {1, 1}));
  CHECK_THROWS_AS(fqsym_to_sym(QF::fundamental(3, 1)), NotSymmetric);
  CHECK_THROWS_AS(QF::fundamental(2, 2), PreconditionError);
}

TEST_CASE("schur functions from standard tableaux") {
  for (int n = 1; n <= 6; ++n)
    for (const Partition& lambda : partitions_of(n)) {
      QSymFunc<Rational> g;
      for (std::uint32_t mask : testing::syt_descent_masks(lambda)) g.add_term(n, mask, Rational(1));
      CHECK(convert(fqsym_to_sym(g), Basis::s) == S(lambda));
    }
}

TEST_CASE("h_1^n from inverse descents") {
  for (int n = 1; n <= 6; ++n) {
    QSymFunc<Rational> g;
    for (std::uint32_t mask : testing::inverse_descent_masks(n)) g.add_term(n, mask, Rational(1));
    SF expected(Basis::m);
    for (const Partition& lambda : partitions_of(n)) {
      long c = testing::factorial(n);
      for (int part : lambda.parts()) c /= testing::factorial(part);
      expected.add_term(lambda, Rational(c));
    }
    CHECK(fqsym_to_sym(g) == expected);
    CHECK(convert(fqsym_to_sym(QSymFunc<Rational>::fundamental(n, 0)), Basis::h) == single(Basis::h, {n}));
  }
}
