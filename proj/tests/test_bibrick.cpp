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
#include <set>

#include "doctest.h"
#include "qtsym/bibrick.hpp"
#include "qtsym/operators.hpp"

using namespace qtsym;

namespace {

BrickWord random_word(std::mt19937_64& rng, int len) {
  const char alphabet[] = {'B', 'L', 'N', 'U'};
  BrickWord w;
  for (int i = 0; i < len; ++i) w += alphabet[std::uniform_int_distribution<int>(0, 3)(rng)];
  return w;
}

bool brute_lyndon(const BrickWord& w) {
  for (std::size_t r = 1; r < w.size(); ++r) {
    const BrickWord rot = w.substr(r) + w.substr(0, r);
    if (rot <= w) return false;
  }
  return true;
}

// Cycle words built from an inner arrangement and an outer start set, one per
// rotation class, for a single cycle with the given inner bricks in order.
std::set<BrickWord> single_cycle_words(const std::vector<int>& inner) {
  int len = 0;
  for (int p : inner) len += p;
  std::vector<bool> in(static_cast<std::size_t>(len));
  int pos = 0;
  for (int p : inner) {
    in[static_cast<std::size_t>(pos)] = true;
    pos += p;
  }
  std::set<BrickWord> out;
  for (unsigned mask = 1; mask < (1u << len); ++mask) {
    BrickWord w;
    for (int i = 0; i < len; ++i) {
      const bool o = (mask >> i) & 1u, u = in[static_cast<std::size_t>(i)];
      w += o && u ? 'B' : o ? 'L' : u ? 'U' : 'N';
    }
    try {
      out.insert(canonical_rotation(w));
    } catch (const PeriodicWord&) {
    }
  }
  return out;
}

}  // namespace

TEST_CASE("Lyndon words") {
  CHECK(is_lyndon("BUULUU"));
  CHECK_FALSE(is_lyndon("LUULUU"));
  CHECK(is_lyndon("N"));
  CHECK_FALSE(is_lyndon("BUBU"));
  CHECK_THROWS_AS(is_lyndon("BXU"), ParseError);
  CHECK_THROWS_AS(is_lyndon(""), ParseError);
  CHECK(canonical_rotation("ULUUBU") == "BUULUU");
  CHECK(canonical_rotation("B") == "B");
  CHECK_THROWS_AS(canonical_rotation("LUULUU"), PeriodicWord);
  CHECK_THROWS_AS(canonical_rotation("NNN"), PreconditionError);
  CHECK_THROWS_AS(canonical_rotation("LN"), PreconditionError);
  CHECK(cfl_factorize("BUBU") == std::vector<BrickWord>{"BU", "BU"});
  CHECK(cfl_factorize("NB") == std::vector<BrickWord>{"N", "B"});
  CHECK(cfl_factorize("BUULUU") == std::vector<BrickWord>{"BUULUU"});
}

TEST_CASE("Lyndon round trips") {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 2000; ++trial) {
    const BrickWord w = random_word(rng, std::uniform_int_distribution<int>(1, 10)(rng));
    CHECK(is_lyndon(w) == brute_lyndon(w));
    const std::vector<BrickWord> f = cfl_factorize(w);
    BrickWord joined;
    for (std::size_t i = 0; i < f.size(); ++i) {
      CHECK(brute_lyndon(f[i]));
      if (i) CHECK(f[i - 1] >= f[i]);
      joined += f[i];
    }
    CHECK(joined == w);
    CHECK(cfl_factorize(joined) == f);
    if (brute_lyndon(w)) {
      CHECK(cfl_factorize(w) == std::vector<BrickWord>{w});
      for (std::size_t r = 0; r < w.size(); ++r) {
        const BrickWord rot = w.substr(r) + w.substr(0, r);
        if (rot.find_first_of("BL") != BrickWord::npos && rot.find_first_of("BU") != BrickWord::npos)
          CHECK(canonical_rotation(rot) == w);
        CHECK(least_rotation(rot) == w);
      }
    }
  }
}

TEST_CASE("alpha of cycles and permutations") {
  CHECK(alpha_of_cycle("BUULUU") == Composition{3, 3});
  CHECK(alpha_of_cycle("LLLU") == Composition{1, 1, 2});
  CHECK(alpha_of_cycle("LNLUNN") == Composition{2, 4});
  CHECK(alpha_of_cycle("BU") == Composition{2});
  const BiBrickPermutation fig2 = BiBrickPermutation::parse("BUULUU,LLLU,BU,BU");
  CHECK(fig2.alpha() == Composition{1, 1, 2, 3, 3, 2, 2});
  CHECK(fig2.mu() == (Partition{4, 2, 1, 1, 1, 1, 1, 1, 1, 1}));
  CHECK(fig2.to_string() == "LLLU,BUULUU,BU,BU");
  CHECK(fig2.size() == 14);
  const BiBrickPermutation fig4 = BiBrickPermutation::parse("LNLUNN,BUULUU");
  CHECK(alpha_of(fig4) == Composition{2, 4, 3, 3});
  CHECK(fig4.size() == 12);
  CHECK(BiBrickPermutation::parse("B").alpha() == Composition{1});
  CHECK(BiBrickPermutation(std::vector<BrickWord>{"ULUUBU"}).to_string() == "BUULUU");
}

TEST_CASE("inner and outer lengths") {
  CHECK(inner_lengths("BUULUU") == std::vector<int>{1, 1, 2, 1, 1});
  CHECK(outer_lengths("BUULUU") == std::vector<int>{3, 3});
  CHECK(inner_lengths("LLLU") == std::vector<int>{4});
  for (int n = 1; n <= 8; ++n)
    for (const Partition& mu : partitions_of(n))
      for_each_bibrick(mu, [&](const BiBrickPermutation& pi) {
        CHECK(pi.mu() == mu);
        CHECK(pi.alpha().size() == n);
        for (const BrickWord& w : pi.cycles()) CHECK(brute_lyndon(w));
      });
}

TEST_CASE("enumeration") {
  CHECK(enumerate_bibrick({1}).size() == 1);
  CHECK(enumerate_bibrick({1})[0].to_string() == "B");
  int threes = 0;
  for (const BiBrickPermutation& pi : enumerate_bibrick({2, 1}))
    if (pi.alpha().sorted() == Partition{3}) ++threes;
  CHECK(threes == 3);
  // Single-cycle permutations against a direct construction.
  for (const std::vector<int>& inner : std::vector<std::vector<int>>{{3}, {2, 1}, {2, 2, 1}, {3, 1, 1}, {4, 2}}) {
    std::set<BrickWord> expected;
    std::vector<int> arrangement = inner;
    std::sort(arrangement.begin(), arrangement.end());
    do {
      for (const BrickWord& w : single_cycle_words(arrangement)) expected.insert(w);
    } while (std::next_permutation(arrangement.begin(), arrangement.end()));
    std::set<BrickWord> got;
    for (const BiBrickPermutation& pi : enumerate_bibrick(Partition::from_unsorted(inner)))
      if (pi.cycles().size() == 1) got.insert(pi.cycles()[0]);
    CHECK(got == expected);
  }
  const auto all = enumerate_bibrick({3, 2, 1});
  CHECK(std::set<BiBrickPermutation>(all.begin(), all.end()).size() == all.size());
  CHECK_THROWS_AS(enumerate_bibrick(Partition{5, 4}), PreconditionError);
}

TEST_CASE("q = 1 expansion") {
  const Q1Result r = verify_q1({2, 1});
  CHECK(r.holds);
  CHECK(r.lhs.coeff({3}) == 3);
  CHECK(r.lhs.coeff({2, 1}) == -5);
  CHECK(r.lhs.coeff({1, 1, 1}) == 2);
  for (int n = 1; n <= 7; ++n)
    for (const Partition& mu : partitions_of(n)) CHECK(verify_q1(mu).holds);
  CHECK(verify_q1(Partition::hook(5, 3)).holds);
  CHECK_THROWS_AS(verify_q1({4, 4}), PreconditionError);
}

TEST_CASE("hook construction") {
  const auto terms = hook_construct(5, 3, Composition{2, 4, 2});
  REQUIRE(terms.size() == 6);
  std::multiset<int> stats;
  for (const HookTerm& t : terms) {
    stats.insert(t.stat);
    CHECK(t.pi.alpha() == Composition{2, 4, 2});
    CHECK(t.pi.mu() == Partition::hook(5, 3));
  }
  CHECK(stats == std::multiset<int>{0, 0, 0, 0, 3, 4});
  CHECK(hook_stat_poly(5, 3, Composition{2, 4, 2}) ==
        LaurentPoly(4) + LaurentPoly::q_power(3) + LaurentPoly::q_power(4));
  CHECK(eval_q1(hook_stat_poly(2, 1, Composition{3})) == 3);
  CHECK_THROWS_AS(hook_construct(2, 1, Composition{2, 2}), SizeMismatch);
  CHECK_THROWS_AS(hook_construct(1, 1, Composition{2}), PreconditionError);
}

TEST_CASE("hook construction against the enumeration and the coefficients") {
  for (int size = 3; size <= 8; ++size)
    for (int n = 2; n < size; ++n) {
      const int k = size - n;
      const auto all = enumerate_bibrick(Partition::hook(n, k));
      for (const Composition& alpha : compositions_of(size)) {
        std::multiset<std::string> expected, got;
        for (const BiBrickPermutation& pi : all)
          if (pi.alpha() == alpha) expected.insert(pi.to_string());
        for (const HookTerm& t : hook_construct(n, k, alpha)) {
          got.insert(t.pi.to_string());
          CHECK(t.stat >= 0);
          CHECK(t.stat < n);
          bool all_b = true;
          for (const BrickWord& w : t.pi.cycles()) all_b = all_b && w.find('B') != BrickWord::npos;
          CHECK((t.stat == 0) == all_b);
        }
        CHECK(got == expected);
        CHECK(hook_stat_poly(n, k, alpha) == theorem_coeff(n, k, alpha).poly);
      }
    }
}

TEST_CASE("csv rows") {
  CHECK(bibrick_csv_header() == "mu,alpha,words,stat");
  const BiBrickPermutation pi = BiBrickPermutation::parse("BU,BU");
  CHECK(bibrick_csv_row({1, 1, 1, 1}, pi) == "\"1,1,1,1\",\"2,2\",\"BU,BU\",");
  CHECK(bibrick_csv_row({1, 1, 1, 1}, pi, 0) == "\"1,1,1,1\",\"2,2\",\"BU,BU\",0");
}
