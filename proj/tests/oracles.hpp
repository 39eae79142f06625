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
// Slow, independent reference computations used to check the library.
#pragma once

#include <algorithm>
#include <cstdint>
#include <functional>
#include <numeric>
#include <vector>

#include "qtsym/partition.hpp"

namespace qtsym::testing {

// Counts semistandard fillings of shape lambda with content mu by direct
// backtracking over cells in reading order.
inline long brute_kostka(const Partition& lambda, const Partition& mu) {
  if (lambda.size() != mu.size()) return 0;
  std::vector<std::pair<int, int>> cells;
  for (int r = 0; r < lambda.length(); ++r)
    for (int c = 0; c < lambda[static_cast<std::size_t>(r)]; ++c) cells.emplace_back(r, c);
  std::vector<std::vector<int>> grid(static_cast<std::size_t>(lambda.length()));
  for (int r = 0; r < lambda.length(); ++r) grid[static_cast<std::size_t>(r)].assign(static_cast<std::size_t>(lambda[static_cast<std::size_t>(r)]), 0);
  std::vector<int> remaining = mu.parts();
  long count = 0;
  std::function<void(std::size_t)> rec = [&](std::size_t idx) {
    if (idx == cells.size()) {
      ++count;
      return;
    }
    auto [r, c] = cells[idx];
    for (int v = 1; v <= static_cast<int>(remaining.size()); ++v) {
      if (remaining[static_cast<std::size_t>(v - 1)] == 0) continue;
      if (c > 0 && grid[static_cast<std::size_t>(r)][static_cast<std::size_t>(c - 1)] > v) continue;
      if (r > 0 && grid[static_cast<std::size_t>(r - 1)][static_cast<std::size_t>(c)] >= v) continue;
      grid[static_cast<std::size_t>(r)][static_cast<std::size_t>(c)] = v;
      --remaining[static_cast<std::size_t>(v - 1)];
      rec(idx + 1);
      ++remaining[static_cast<std::size_t>(v - 1)];
    }
    grid[static_cast<std::size_t>(r)][static_cast<std::size_t>(c)] = 0;
  };
  rec(0);
  return count;
}

// Descent masks of all standard Young tableaux of shape lambda (English
// convention): i is a descent when i+1 sits in a lower row than i.
inline std::vector<std::uint32_t> syt_descent_masks(const Partition& lambda) {
  const int n = lambda.size();
  std::vector<int> filled(static_cast<std::size_t>(lambda.length()), 0);
  std::vector<int> row_of(static_cast<std::size_t>(n) + 1, 0);
  std::vector<std::uint32_t> out;
  std::function<void(int)> rec = [&](int next) {
    if (next > n) {
      std::uint32_t mask = 0;
      for (int i = 1; i < n; ++i)
        if (row_of[static_cast<std::size_t>(i) + 1] > row_of[static_cast<std::size_t>(i)]) mask |= 1u << (i - 1);
      out.push_back(mask);
      return;
    }
    for (int r = 0; r < lambda.length(); ++r) {
      auto rr = static_cast<std::size_t>(r);
      if (filled[rr] == lambda[rr]) continue;
      if (r > 0 && filled[rr - 1] <= filled[rr]) continue;
      ++filled[rr];
      row_of[static_cast<std::size_t>(next)] = r;
      rec(next + 1);
      --filled[rr];
    }
  };
  rec(1);
  return out;
}

// Descent mask of the inverse of each permutation of {1..n}.
inline std::vector<std::uint32_t> inverse_descent_masks(int n) {
  std::vector<int> w(static_cast<std::size_t>(n));
  std::iota(w.begin(), w.end(), 1);
  std::vector<std::uint32_t> out;
  do {
    std::vector<int> pos(static_cast<std::size_t>(n) + 1);
    for (int i = 0; i < n; ++i) pos[static_cast<std::size_t>(w[static_cast<std::size_t>(i)])] = i;
    std::uint32_t mask = 0;
    for (int i = 1; i < n; ++i)
      if (pos[static_cast<std::size_t>(i)] > pos[static_cast<std::size_t>(i) + 1]) mask |= 1u << (i - 1);
    out.push_back(mask);
  } while (std::next_permutation(w.begin(), w.end()));
  return out;
}

inline long factorial(int n) { return n <= 1 ? 1 : n * factorial(n - 1); }

}  // namespace qtsym::testing
