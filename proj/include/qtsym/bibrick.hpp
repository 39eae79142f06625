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

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "qtsym/laurent.hpp"
#include "qtsym/partition.hpp"
#include "qtsym/symfunc.hpp"

namespace qtsym {

/// Word over B < L < N < U, one letter per segment of a cycle: B when an
/// outer and an inner brick both start, L outer only, U inner only, N neither.
using BrickWord = std::string;

/// Throws ParseError on an empty word or a letter outside {B, L, N, U}.
void check_brick_word(const BrickWord& w);

/// Strictly smaller than every proper rotation.
bool is_lyndon(const BrickWord& w);

/// Lexicographically least rotation (defined for periodic words too).
BrickWord least_rotation(const BrickWord& w);

/// The Lyndon rotation of a cycle word. Throws PeriodicWord when w is a power
/// of a shorter word and PreconditionError when w lacks an outer (B/L) or an
/// inner (B/U) brick start.
BrickWord canonical_rotation(const BrickWord& w);

/// Lyndon factorization into weakly decreasing factors (Duval).
std::vector<BrickWord> cfl_factorize(const BrickWord& w);

/// Cyclic gaps between outer (B/L) resp. inner (B/U) starts, read from the
/// first such start.
std::vector<int> outer_lengths(const BrickWord& w);
std::vector<int> inner_lengths(const BrickWord& w);

/// Outer composition of one cycle. Words without B have their inner bricks
/// rotated forward one segment at a time until an inner and an outer start
/// coincide; the gaps are then read from the least rotation of that word.
Composition alpha_of_cycle(const BrickWord& cycle);

/// Multiset of cycles, each stored as its Lyndon word, kept in reverse
/// lexicographic order.
class BiBrickPermutation {
 public:
  BiBrickPermutation() = default;
  /// Canonicalizes every word and sorts.
  explicit BiBrickPermutation(std::vector<BrickWord> words);
  /// Comma-separated words in any order, e.g. "LLLU,BUULUU,BU,BU".
  static BiBrickPermutation parse(const std::string& text);

  const std::vector<BrickWord>& cycles() const noexcept { return cycles_; }
  int size() const;
  /// Sorted inner brick lengths.
  Partition mu() const;
  /// alpha_of_cycle of every cycle, concatenated in stored order.
  Composition alpha() const;
  std::string to_string() const;

  friend bool operator==(const BiBrickPermutation& a, const BiBrickPermutation& b) {
    return a.cycles_ == b.cycles_;
  }
  friend bool operator<(const BiBrickPermutation& a, const BiBrickPermutation& b) {
    return a.cycles_ < b.cycles_;
  }

 private:
  std::vector<BrickWord> cycles_;
};

inline Composition alpha_of(const BiBrickPermutation& pi) { return pi.alpha(); }

/// Every bi-brick permutation with inner brick lengths mu, exactly once;
/// |mu| <= 8. Order is deterministic.
void for_each_bibrick(const Partition& mu, const std::function<void(const BiBrickPermutation&)>& visit);
std::vector<BiBrickPermutation> enumerate_bibrick(const Partition& mu);

struct HookTerm {
  BiBrickPermutation pi;
  int stat = 0;
};

/// The bi-brick permutations with mu = (n,1^k) and alpha(pi) = alpha, with
/// stat, built directly: k+1 permutations from cutting the bricked cycle at
/// each inner start (stat 0), then the inner-brick rotations of the main
/// cycle (stat = segments of the size-n brick before the alpha_r brick).
std::vector<HookTerm> hook_construct(int n, int k, const Composition& alpha);

/// sum over hook_construct of q^stat.
LaurentPoly hook_stat_poly(int n, int k, const Composition& alpha);

struct Q1Result {
  bool holds = false;
  SymFunc<Rational> lhs;  // signed h-expansion from the enumeration
  SymFunc<Rational> rhs;  // (-1)^{|mu|-l(mu)} m_mu in the h-basis
  SymFunc<Rational> difference;
  long count = 0;  // permutations enumerated
};

/// |mu| <= 7, or 8 for hook shapes.
Q1Result verify_q1(const Partition& mu);

std::string bibrick_csv_header();
std::string bibrick_csv_row(const Partition& mu, const BiBrickPermutation& pi, std::optional<int> stat = {});

}  // namespace qtsym
