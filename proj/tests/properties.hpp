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
// Randomized property suites shared by test_properties and the acceptance
// runner. Each suite counts checks and keeps the first failure.
#pragma once

#include <random>
#include <string>

#include "generators.hpp"
#include "qtsym/bibrick.hpp"
#include "qtsym/transition.hpp"

namespace qtsym::testing {

struct Tally {
  long checks = 0;
  long failures = 0;
  std::string first_failure;

  void check(bool ok, const std::string& what) {
    ++checks;
    if (ok) return;
    if (failures++ == 0) first_failure = what;
  }
  bool ok() const { return failures == 0 && checks > 0; }
};

inline std::string show(const std::vector<int>& g) {
  std::string s = "(";
  for (std::size_t i = 0; i < g.size(); ++i) s += (i ? "," : "") + std::to_string(g[i]);
  return s + ")";
}

inline void straightening_suite(Tally& t, std::uint64_t seed, int trials = 2000) {
  std::mt19937_64 rng(seed);
  for (int n = 0; n <= 8; ++n)
    for (const Partition& p : n == 0 ? std::vector<Partition>{Partition()} : partitions_of(n))
      t.check(straighten(p.parts()) == SignedPartition{1, p}, "partition fixed " + p.to_string());
  for (int trial = 0; trial < trials; ++trial) {
    std::vector<int> g(static_cast<std::size_t>(uniform(rng, 1, 6)));
    for (int& x : g) x = static_cast<int>(uniform(rng, -2, 6));
    const SignedPartition base = straighten(g);
    const std::size_t i = static_cast<std::size_t>(uniform(rng, 0, static_cast<long>(g.size()) - 1));
    if (i + 1 < g.size()) {
      std::vector<int> h = g;
      h[i] = g[i + 1] - 1;
      h[i + 1] = g[i] + 1;
      const SignedPartition swapped = straighten(h);
      t.check(swapped.sign == -base.sign && (base.sign == 0 || swapped.partition == base.partition),
              "exchange " + show(g));
      std::vector<int> z = g;
      z[i + 1] = z[i] + 1;
      t.check(straighten(z).sign == 0, "vanishing " + show(z));
    }
    std::vector<int> padded = g;
    padded.push_back(0);
    t.check(straighten(padded) == base, "trailing zero " + show(g));
    if (base.sign != 0) {
      t.check(straighten(base.partition.parts()) == SignedPartition{1, base.partition}, "idempotent " + show(g));
      t.check(base.partition.size() == [&] {
        int s = 0;
        for (int x : g) s += x;
        return s;
      }(), "size preserved " + show(g));
    }
  }
}

inline BrickWord random_brick_word(std::mt19937_64& rng, int len) {
  static const char alphabet[] = {'B', 'L', 'N', 'U'};
  BrickWord w;
  for (int i = 0; i < len; ++i) w += alphabet[uniform(rng, 0, 3)];
  return w;
}

inline void lyndon_suite(Tally& t, std::uint64_t seed, int trials = 3000) {
  std::mt19937_64 rng(seed);
  for (int trial = 0; trial < trials; ++trial) {
    const BrickWord w = random_brick_word(rng, static_cast<int>(uniform(rng, 1, 12)));
    const std::vector<BrickWord> f = cfl_factorize(w);
    BrickWord joined;
    bool decreasing = true;
    for (std::size_t i = 0; i < f.size(); ++i) {
      joined += f[i];
      t.check(is_lyndon(f[i]), "factor not Lyndon in " + w);
      if (i && f[i - 1] < f[i]) decreasing = false;
    }
    t.check(joined == w && decreasing, "factorization of " + w);
    const BrickWord lyndon = f[0];
    for (std::size_t r = 0; r < lyndon.size(); ++r) {
      const BrickWord rot = lyndon.substr(r) + lyndon.substr(0, r);
      t.check(least_rotation(rot) == lyndon, "rotation of " + lyndon);
      if (rot.find_first_of("BL") != BrickWord::npos && rot.find_first_of("BU") != BrickWord::npos)
        t.check(canonical_rotation(rot) == lyndon, "canonical rotation of " + rot);
    }
    // Concatenating weakly decreasing Lyndon words factors back into them.
    std::vector<BrickWord> pieces;
    for (int i = 0; i < uniform(rng, 1, 4); ++i) {
      const std::vector<BrickWord> g = cfl_factorize(random_brick_word(rng, static_cast<int>(uniform(rng, 1, 6))));
      pieces.insert(pieces.end(), g.begin(), g.end());
    }
    std::sort(pieces.begin(), pieces.end(), std::greater<>());
    BrickWord cat;
    for (const BrickWord& p : pieces) cat += p;
    t.check(cfl_factorize(cat) == pieces, "refactor " + cat);
  }
}

inline SymFunc<Rational> random_symfunc(std::mt19937_64& rng, Basis basis, int degree) {
  const std::vector<Partition> parts = partitions_of(degree);
  SymFunc<Rational> f(basis);
  const long terms = uniform(rng, 1, std::min<long>(5, static_cast<long>(parts.size())));
  for (long i = 0; i < terms; ++i)
    f.add_term(parts[static_cast<std::size_t>(uniform(rng, 0, static_cast<long>(parts.size()) - 1))],
               random_rational(rng));
  return f;
}

/// `per_degree` random inputs per degree 1..max_degree, each sent around
/// every pair of the m, h, e, s bases.
inline void conversion_suite(Tally& t, std::uint64_t seed, int max_degree = 8, int per_degree = 100) {
  std::mt19937_64 rng(seed);
  const Basis bases[] = {Basis::m, Basis::h, Basis::e, Basis::s};
  for (int d = 1; d <= max_degree; ++d)
    for (int trial = 0; trial < per_degree; ++trial) {
      const Basis from = bases[uniform(rng, 0, 3)];
      const SymFunc<Rational> f = random_symfunc(rng, from, d);
      for (Basis to : bases) {
        const SymFunc<Rational> g = convert(f, to);
        t.check(g.basis() == to && convert(g, from) == f,
                "round trip " + basis_name(from) + "->" + basis_name(to) + " degree " + std::to_string(d));
      }
    }
}

inline void canonical_form_suite(Tally& t, std::uint64_t seed, int trials = 500) {
  std::mt19937_64 rng(seed);
  for (int trial = 0; trial < trials; ++trial) {
    const RatFunc f = random_ratfunc(rng);
    t.check(RatFunc(f.num(), f.den()) == f, "ratfunc renormalize " + f.to_string());
    const RatFunc g = f * RatFunc(random_poly(rng) + PolyQT(7)) / RatFunc(random_poly(rng) + PolyQT(7));
    t.check(RatFunc(g.num(), g.den()) == g, "ratfunc product renormalize");

    std::vector<int> parts(static_cast<std::size_t>(uniform(rng, 0, 6)));
    for (int& x : parts) x = static_cast<int>(uniform(rng, 1, 5));
    const Partition p = Partition::from_unsorted(parts);
    t.check(Partition::from_unsorted(p.parts()) == p, "partition sort");

    const BrickWord w = random_brick_word(rng, static_cast<int>(uniform(rng, 1, 9)));
    t.check(least_rotation(least_rotation(w)) == least_rotation(w), "least rotation " + w);

    std::vector<BrickWord> words;
    for (const BrickWord& piece : cfl_factorize(w))
      if (piece.find_first_of("BL") != BrickWord::npos && piece.find_first_of("BU") != BrickWord::npos)
        words.push_back(piece);
    if (!words.empty()) {
      const BiBrickPermutation pi(words);
      t.check(BiBrickPermutation(pi.cycles()) == pi, "permutation canonical form " + pi.to_string());
      t.check(BiBrickPermutation::parse(pi.to_string()) == pi, "permutation text form " + pi.to_string());
    }

    const LaurentPoly l = random_laurent(rng);
    LaurentPoly rebuilt;
    for (const auto& [e, c] : l.terms()) rebuilt.add_term(e, c);
    t.check(rebuilt == l && (l - l).is_zero(), "laurent canonical form");
  }
}

}  // namespace qtsym::testing
