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
#include "qtsym/partition.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <sstream>

#include "qtsym/errors.hpp"

namespace qtsym {

namespace {

std::vector<int> parse_int_list(const std::string& text) {
  std::vector<int> out;
  if (text.empty()) return out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    try {
      std::size_t used = 0;
      int v = std::stoi(item, &used);
      if (used != item.size()) throw ParseError("bad integer '" + item + "'");
      out.push_back(v);
    } catch (const std::logic_error&) {
      throw ParseError("bad integer '" + item + "'");
    }
  }
  return out;
}

std::string join(const std::vector<int>& v) {
  std::string s;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) s += ',';
    s += std::to_string(v[i]);
  }
  return s;
}

}  // namespace

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
  for (std::size_t i = 0; i < parts_.size(); ++i) {
    if (parts_[i] <= 0) throw PreconditionError("partition parts must be positive");
    if (i > 0 && parts_[i] > parts_[i - 1]) throw PreconditionError("partition parts must be weakly decreasing");
  }
  size_ = std::accumulate(parts_.begin(), parts_.end(), 0);
}

Partition Partition::from_unsorted(std::vector<int> parts) {
  std::erase(parts, 0);
  std::sort(parts.begin(), parts.end(), std::greater<>());
  return Partition(std::move(parts));
}

Partition Partition::parse(const std::string& text) {
  try {
    return Partition(parse_int_list(text));
  } catch (const PreconditionError& e) {
    throw ParseError(std::string("invalid partition '") + text + "': " + e.what());
  }
}

Partition Partition::hook(int arm, int leg_length) {
  std::vector<int> parts{arm};
  parts.insert(parts.end(), static_cast<std::size_t>(leg_length), 1);
  return Partition(std::move(parts));
}

Partition Partition::conjugate() const {
  std::vector<int> out;
  if (parts_.empty()) return Partition();
  for (int col = 1; col <= parts_[0]; ++col) {
    int count = 0;
    for (int p : parts_) count += (p >= col);
    out.push_back(count);
  }
  return Partition(std::move(out));
}

long Partition::n_stat() const {
  long s = 0;
  for (std::size_t i = 0; i < parts_.size(); ++i) s += static_cast<long>(i) * parts_[i];
  return s;
}

bool Partition::dominates(const Partition& other) const {
  long a = 0, b = 0;
  std::size_t len = std::max(parts_.size(), other.parts_.size());
  for (std::size_t i = 0; i < len; ++i) {
    a += (*this)[i];
    b += other[i];
    if (a < b) return false;
  }
  return true;
}

bool Partition::contains(const Partition& other) const {
  if (other.length() > length()) return false;
  for (std::size_t i = 0; i < other.parts_.size(); ++i)
    if (other.parts_[i] > parts_[i]) return false;
  return true;
}

std::string Partition::to_string() const { return join(parts_); }

Composition::Composition(std::vector<int> parts) : parts_(std::move(parts)) {
  for (int p : parts_)
    if (p <= 0) throw PreconditionError("composition parts must be positive");
  size_ = std::accumulate(parts_.begin(), parts_.end(), 0);
}

Composition Composition::parse(const std::string& text) {
  try {
    return Composition(parse_int_list(text));
  } catch (const PreconditionError& e) {
    throw ParseError(std::string("invalid composition '") + text + "': " + e.what());
  }
}

std::vector<int> Composition::partial_sums() const {
  std::vector<int> out;
  int s = 0;
  for (int p : parts_) out.push_back(s += p);
  return out;
}

std::uint32_t Composition::descent_mask() const {
  std::uint32_t mask = 0;
  int s = 0;
  for (std::size_t i = 0; i + 1 < parts_.size(); ++i) {
    s += parts_[i];
    mask |= 1u << (s - 1);
  }
  return mask;
}

Composition Composition::from_descent_mask(int size, std::uint32_t mask) {
  std::vector<int> parts;
  int last = 0;
  for (int i = 1; i < size; ++i) {
    if (mask & (1u << (i - 1))) {
      parts.push_back(i - last);
      last = i;
    }
  }
  if (size > 0) parts.push_back(size - last);
  return Composition(std::move(parts));
}

Composition Composition::concat(const Composition& other) const {
  std::vector<int> parts = parts_;
  parts.insert(parts.end(), other.parts_.begin(), other.parts_.end());
  return Composition(std::move(parts));
}

std::string Composition::to_string() const { return join(parts_); }

std::vector<Partition> partitions_of(int n) {
  if (n < 0) throw PreconditionError("partitions_of requires n >= 0");
  std::vector<Partition> out;
  std::vector<int> current;
  std::function<void(int, int)> rec = [&](int remaining, int max_part) {
    if (remaining == 0) {
      out.emplace_back(current);
      return;
    }
    for (int p = std::min(remaining, max_part); p >= 1; --p) {
      current.push_back(p);
      rec(remaining - p, p);
      current.pop_back();
    }
  };
  rec(n, n);
  return out;
}

std::vector<Composition> compositions_of(int n) {
  if (n < 0) throw PreconditionError("compositions_of requires n >= 0");
  std::vector<Composition> out;
  std::vector<int> current;
  std::function<void(int)> rec = [&](int remaining) {
    if (remaining == 0) {
      out.emplace_back(current);
      return;
    }
    for (int p = 1; p <= remaining; ++p) {
      current.push_back(p);
      rec(remaining - p);
      current.pop_back();
    }
  };
  rec(n);
  return out;
}

}  // namespace qtsym
