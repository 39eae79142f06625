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
#include "qtsym/bibrick.hpp"

#include <algorithm>
#include <array>
#include <sstream>

#include "qtsym/config.hpp"
#include "qtsym/errors.hpp"
#include "qtsym/transition.hpp"

namespace qtsym {

namespace {

constexpr int kMaxBibrickSize = 8;

bool outer_start(char c) { return c == 'B' || c == 'L'; }
bool inner_start(char c) { return c == 'B' || c == 'U'; }

char letter(bool outer, bool inner) {
  if (outer && inner) return 'B';
  if (outer) return 'L';
  if (inner) return 'U';
  return 'N';
}

BrickWord rotate(const BrickWord& w, std::size_t by) { return w.substr(by) + w.substr(0, by); }

bool is_periodic(const BrickWord& w) {
  for (std::size_t r = 1; r < w.size(); ++r)
    if (w.size() % r == 0 && rotate(w, r) == w) return true;
  return false;
}

std::vector<int> cyclic_gaps(const BrickWord& w, bool (*starts)(char)) {
  std::vector<int> pos;
  for (std::size_t i = 0; i < w.size(); ++i)
    if (starts(w[i])) pos.push_back(static_cast<int>(i));
  std::vector<int> gaps;
  for (std::size_t i = 0; i < pos.size(); ++i) {
    const int next = i + 1 < pos.size() ? pos[i + 1] : pos[0] + static_cast<int>(w.size());
    gaps.push_back(next - pos[i]);
  }
  return gaps;
}

// Cycle word with outer starts and inner starts given as position flags.
BrickWord encode(const std::vector<bool>& outer, const std::vector<bool>& inner) {
  BrickWord w;
  for (std::size_t i = 0; i < outer.size(); ++i) w += letter(outer[i], inner[i]);
  return w;
}

using InnerCounts = std::array<int, kMaxBibrickSize + 1>;

InnerCounts counts_of(const std::vector<int>& parts) {
  InnerCounts c{};
  for (int p : parts) ++c[static_cast<std::size_t>(p)];
  return c;
}

struct CycleWord {
  BrickWord word;
  InnerCounts inner;
  int length;
};

// Every valid Lyndon cycle word of length <= kMaxBibrickSize, in decreasing
// lexicographic order.
const std::vector<CycleWord>& all_cycle_words() {
  static const std::vector<CycleWord> words = [] {
    std::vector<CycleWord> out;
    const char alphabet[] = {'B', 'L', 'N', 'U'};
    for (int len = 1; len <= kMaxBibrickSize; ++len) {
      BrickWord w(static_cast<std::size_t>(len), 'B');
      std::vector<int> digits(static_cast<std::size_t>(len), 0);
      while (true) {
        for (int i = 0; i < len; ++i) w[static_cast<std::size_t>(i)] = alphabet[digits[static_cast<std::size_t>(i)]];
        const bool has_outer = std::any_of(w.begin(), w.end(), outer_start);
        const bool has_inner = std::any_of(w.begin(), w.end(), inner_start);
        if (has_outer && has_inner && is_lyndon(w)) out.push_back({w, counts_of(inner_lengths(w)), len});
        int i = len - 1;
        while (i >= 0 && ++digits[static_cast<std::size_t>(i)] == 4) digits[static_cast<std::size_t>(i--)] = 0;
        if (i < 0) break;
      }
    }
    std::sort(out.begin(), out.end(), [](const CycleWord& a, const CycleWord& b) { return a.word > b.word; });
    return out;
  }();
  return words;
}

bool fits(const InnerCounts& part, const InnerCounts& remaining) {
  for (std::size_t i = 0; i < part.size(); ++i)
    if (part[i] > remaining[i]) return false;
  return true;
}

std::string join_ints(const std::vector<int>& xs) {
  std::string out;
  for (std::size_t i = 0; i < xs.size(); ++i) out += (i ? "," : "") + std::to_string(xs[i]);
  return out;
}

}  // namespace

void check_brick_word(const BrickWord& w) {
  if (w.empty()) throw ParseError("empty brick word");
  for (char c : w)
    if (c != 'B' && c != 'L' && c != 'N' && c != 'U')
      throw ParseError(std::string("brick words use the letters B, L, N, U; got '") + c + "'");
}

bool is_lyndon(const BrickWord& w) {
  check_brick_word(w);
  for (std::size_t r = 1; r < w.size(); ++r)
    if (!(w < rotate(w, r))) return false;
  return true;
}

BrickWord least_rotation(const BrickWord& w) {
  check_brick_word(w);
  BrickWord best = w;
  for (std::size_t r = 1; r < w.size(); ++r) best = std::min(best, rotate(w, r));
  return best;
}

BrickWord canonical_rotation(const BrickWord& w) {
  check_brick_word(w);
  if (!std::any_of(w.begin(), w.end(), outer_start) || !std::any_of(w.begin(), w.end(), inner_start))
    throw PreconditionError("cycle word " + w + " needs an outer and an inner brick start");
  if (is_periodic(w)) throw PeriodicWord("cycle word " + w + " has rotational symmetry");
  return least_rotation(w);
}

std::vector<BrickWord> cfl_factorize(const BrickWord& w) {
  check_brick_word(w);
  std::vector<BrickWord> out;
  const std::size_t n = w.size();
  std::size_t i = 0;
  while (i < n) {
    std::size_t j = i + 1, k = i;
    while (j < n && w[k] <= w[j]) {
      k = w[k] < w[j] ? i : k + 1;
      ++j;
    }
    while (i <= k) {
      out.push_back(w.substr(i, j - k));
      i += j - k;
    }
  }
  return out;
}

std::vector<int> outer_lengths(const BrickWord& w) { return cyclic_gaps(w, outer_start); }
std::vector<int> inner_lengths(const BrickWord& w) { return cyclic_gaps(w, inner_start); }

Composition alpha_of_cycle(const BrickWord& cycle) {
  BrickWord word = canonical_rotation(cycle);
  if (word.find('B') == BrickWord::npos) {
    const std::size_t n = word.size();
    std::vector<bool> outer(n), inner(n);
    for (std::size_t i = 0; i < n; ++i) {
      outer[i] = outer_start(word[i]);
      inner[i] = inner_start(word[i]);
    }
    do {
      std::rotate(inner.rbegin(), inner.rbegin() + 1, inner.rend());
      word = encode(outer, inner);
    } while (word.find('B') == BrickWord::npos);
    word = least_rotation(word);
  }
  return Composition(outer_lengths(word));
}

BiBrickPermutation::BiBrickPermutation(std::vector<BrickWord> words) {
  for (BrickWord& w : words) w = canonical_rotation(w);
  std::sort(words.begin(), words.end(), std::greater<>());
  cycles_ = std::move(words);
}

BiBrickPermutation BiBrickPermutation::parse(const std::string& text) {
  std::vector<BrickWord> words;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) words.push_back(item);
  if (words.empty()) throw ParseError("a bi-brick permutation needs at least one cycle");
  return BiBrickPermutation(std::move(words));
}

int BiBrickPermutation::size() const {
  int s = 0;
  for (const BrickWord& w : cycles_) s += static_cast<int>(w.size());
  return s;
}

Partition BiBrickPermutation::mu() const {
  std::vector<int> parts;
  for (const BrickWord& w : cycles_) {
    std::vector<int> in = inner_lengths(w);
    parts.insert(parts.end(), in.begin(), in.end());
  }
  return Partition::from_unsorted(std::move(parts));
}

Composition BiBrickPermutation::alpha() const {
  Composition out;
  for (const BrickWord& w : cycles_) out = out.concat(alpha_of_cycle(w));
  return out;
}

std::string BiBrickPermutation::to_string() const {
  std::string out;
  for (std::size_t i = 0; i < cycles_.size(); ++i) out += (i ? "," : "") + cycles_[i];
  return out;
}

void for_each_bibrick(const Partition& mu, const std::function<void(const BiBrickPermutation&)>& visit) {
  if (mu.empty()) throw PreconditionError("enumerate_bibrick needs a nonempty partition");
  if (mu.size() > kMaxBibrickSize) throw PreconditionError("enumerate_bibrick supports |mu| <= 8");
  const std::vector<CycleWord>& words = all_cycle_words();
  InnerCounts remaining = counts_of(mu.parts());
  std::vector<BrickWord> chosen;
  int left = mu.size();
  // Cycles are chosen in weakly decreasing order, so each multiset appears once.
  std::function<void(std::size_t)> rec = [&](std::size_t from) {
    if (left == 0) {
      visit(BiBrickPermutation(chosen));
      return;
    }
    for (std::size_t i = from; i < words.size(); ++i) {
      const CycleWord& cw = words[i];
      if (cw.length > left || !fits(cw.inner, remaining)) continue;
      for (std::size_t p = 0; p < remaining.size(); ++p) remaining[p] -= cw.inner[p];
      left -= cw.length;
      chosen.push_back(cw.word);
      rec(i);
      chosen.pop_back();
      left += cw.length;
      for (std::size_t p = 0; p < remaining.size(); ++p) remaining[p] += cw.inner[p];
    }
  };
  rec(0);
}

std::vector<BiBrickPermutation> enumerate_bibrick(const Partition& mu) {
  std::vector<BiBrickPermutation> out;
  for_each_bibrick(mu, [&](const BiBrickPermutation& pi) { out.push_back(pi); });
  return out;
}

std::vector<HookTerm> hook_construct(int n, int k, const Composition& alpha) {
  if (n < 2 || k < 1) throw PreconditionError("hook_construct requires n >= 2 and k >= 1");
  if (alpha.size() != n + k) throw SizeMismatch("hook_construct requires |alpha| = n + k");
  const int total = n + k;
  const std::vector<int> sums = alpha.partial_sums();
  std::vector<HookTerm> out;

  // Inner starts of (n,1^k) around the cycle: 0, n, n+1, ..., n+k-1.
  std::vector<int> inner_starts{0};
  for (int i = n; i < total; ++i) inner_starts.push_back(i);
  for (int p : inner_starts) {
    std::vector<bool> outer(static_cast<std::size_t>(total)), inner(static_cast<std::size_t>(total));
    for (int s : inner_starts) inner[static_cast<std::size_t>((s - p + total) % total)] = true;
    outer[0] = true;
    for (std::size_t i = 0; i + 1 < sums.size(); ++i) outer[static_cast<std::size_t>(sums[i])] = true;
    out.push_back({BiBrickPermutation(cfl_factorize(encode(outer, inner))), 0});
  }

  // Main cycle: outer bricks alpha_1..alpha_r with sum n+s, r minimal.
  std::size_t r = 0;
  while (sums[r] < n) ++r;
  const int main_len = sums[r];
  const int s = main_len - n;
  const int last_start = r == 0 ? 0 : sums[r - 1];
  std::vector<bool> tail_outer, tail_inner;
  for (std::size_t i = r + 1; i < sums.size(); ++i)
    for (int j = 0; j < alpha[i]; ++j) {
      tail_outer.push_back(j == 0);
      tail_inner.push_back(true);
    }
  const std::vector<BrickWord> tail =
      tail_outer.empty() ? std::vector<BrickWord>{} : cfl_factorize(encode(tail_outer, tail_inner));
  // Unit bricks occupy [u, u+s) strictly inside the alpha_r brick; the size-n
  // brick starts at u+s.
  for (int u = last_start + 1; u < n; ++u) {
    std::vector<bool> outer(static_cast<std::size_t>(main_len)), inner(static_cast<std::size_t>(main_len));
    outer[0] = true;
    for (std::size_t i = 0; i < r; ++i) outer[static_cast<std::size_t>(sums[i])] = true;
    for (int j = u; j <= u + s; ++j) inner[static_cast<std::size_t>(j % main_len)] = true;
    std::vector<BrickWord> words = tail;
    words.push_back(encode(outer, inner));
    out.push_back({BiBrickPermutation(std::move(words)), n + last_start - u});
  }
  return out;
}

LaurentPoly hook_stat_poly(int n, int k, const Composition& alpha) {
  LaurentPoly out;
  for (const HookTerm& t : hook_construct(n, k, alpha)) out += LaurentPoly::q_power(t.stat);
  return out;
}

Q1Result verify_q1(const Partition& mu) {
  const bool hook = mu.length() <= 1 || mu[1] == 1;
  if (mu.empty() || mu.size() > (hook ? 8 : 7))
    throw PreconditionError("verify_q1 supports |mu| <= 7 (8 for hooks)");
  check_degree(mu.size());
  Q1Result res;
  res.lhs = SymFunc<Rational>(Basis::h);
  for_each_bibrick(mu, [&](const BiBrickPermutation& pi) {
    const Composition a = pi.alpha();
    const int sign = (a.size() - a.length()) % 2 ? -1 : 1;
    res.lhs.add_term(a.sorted(), Rational(sign));
    ++res.count;
  });
  const int sign = (mu.size() - mu.length()) % 2 ? -1 : 1;
  res.rhs = convert(SymFunc<Rational>::single(Basis::m, mu, Rational(sign)), Basis::h);
  res.difference = res.lhs - res.rhs;
  res.holds = res.difference.is_zero();
  return res;
}

std::string bibrick_csv_header() { return "mu,alpha,words,stat"; }

std::string bibrick_csv_row(const Partition& mu, const BiBrickPermutation& pi, std::optional<int> stat) {
  return "\"" + join_ints(mu.parts()) + "\",\"" + join_ints(pi.alpha().parts()) + "\",\"" + pi.to_string() + "\"," +
         (stat ? std::to_string(*stat) : std::string());
}

}  // namespace qtsym
