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
#include "qtsym/symfunc.hpp"

#include <algorithm>
#include <functional>
#include <numeric>

namespace qtsym {

std::string basis_name(Basis b) {
  switch (b) {
    case Basis::m: return "m";
    case Basis::h: return "h";
    case Basis::e: return "e";
    case Basis::p: return "p";
    case Basis::s: return "s";
    case Basis::Htilde: return "Htilde";
  }
  return "?";
}

Basis parse_basis(const std::string& name) {
  if (name == "m") return Basis::m;
  if (name == "h") return Basis::h;
  if (name == "e") return Basis::e;
  if (name == "p") return Basis::p;
  if (name == "s") return Basis::s;
  if (name == "Htilde") return Basis::Htilde;
  throw ParseError("unknown basis '" + name + "'");
}

SignedPartition straighten(const std::vector<int>& gamma) {
  const int len = static_cast<int>(gamma.size());
  std::vector<int> shifted(gamma.size());
  for (int i = 0; i < len; ++i) {
    shifted[static_cast<std::size_t>(i)] = gamma[static_cast<std::size_t>(i)] + (len - 1 - i);
    if (shifted[static_cast<std::size_t>(i)] < 0) return {};
  }
  // Sign of the sorting permutation is the parity of the inversion count.
  int inversions = 0;
  for (int i = 0; i < len; ++i)
    for (int j = i + 1; j < len; ++j) {
      if (shifted[static_cast<std::size_t>(i)] == shifted[static_cast<std::size_t>(j)]) return {};
      if (shifted[static_cast<std::size_t>(i)] < shifted[static_cast<std::size_t>(j)]) ++inversions;
    }
  std::sort(shifted.begin(), shifted.end(), std::greater<>());
  std::vector<int> parts;
  for (int i = 0; i < len; ++i) parts.push_back(shifted[static_cast<std::size_t>(i)] - (len - 1 - i));
  while (!parts.empty() && parts.back() == 0) parts.pop_back();
  return {inversions % 2 == 0 ? 1 : -1, Partition(std::move(parts))};
}

std::vector<Partition> add_horizontal_strip(const Partition& lambda, int m) {
  std::vector<Partition> out;
  if (m < 0) return out;
  const std::size_t rows = lambda.parts().size() + 1;
  std::vector<int> nu(rows);
  std::function<void(std::size_t, int)> rec = [&](std::size_t i, int remaining) {
    if (i == rows) {
      if (remaining == 0) out.push_back(Partition::from_unsorted(nu));
      return;
    }
    int cap = (i == 0) ? remaining : std::min(remaining, lambda[i - 1] - lambda[i]);
    for (int x = cap; x >= 0; --x) {
      nu[i] = lambda[i] + x;
      rec(i + 1, remaining - x);
    }
  };
  rec(0, m);
  return out;
}

std::vector<Partition> remove_horizontal_strip(const Partition& lambda, int k) {
  std::vector<Partition> out;
  if (k < 0) return out;
  const std::size_t rows = lambda.parts().size();
  std::vector<int> mu(rows);
  std::function<void(std::size_t, int)> rec = [&](std::size_t i, int remaining) {
    if (i == rows) {
      if (remaining == 0) out.push_back(Partition::from_unsorted(mu));
      return;
    }
    int cap = std::min(remaining, lambda[i] - lambda[i + 1]);
    for (int x = 0; x <= cap; ++x) {
      mu[i] = lambda[i] - x;
      rec(i + 1, remaining - x);
    }
  };
  rec(0, k);
  return out;
}

std::vector<Partition> horizontal_strips_inside(const Partition& lambda) {
  std::vector<Partition> out;
  for (int k = 0; k <= lambda.size(); ++k) {
    auto part = remove_horizontal_strip(lambda, k);
    out.insert(out.end(), part.begin(), part.end());
  }
  return out;
}

std::vector<Partition> add_vertical_strip(const Partition& lambda, int m) {
  std::vector<Partition> out;
  for (const Partition& p : add_horizontal_strip(lambda.conjugate(), m)) out.push_back(p.conjugate());
  return out;
}

std::vector<Partition> remove_vertical_strip(const Partition& lambda, int k) {
  std::vector<Partition> out;
  for (const Partition& p : remove_horizontal_strip(lambda.conjugate(), k)) out.push_back(p.conjugate());
  return out;
}

}  // namespace qtsym
