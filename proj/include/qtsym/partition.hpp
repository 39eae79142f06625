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

#include <cstdint>
#include <string>
#include <vector>

namespace qtsym {

/// Integer partition: weakly decreasing positive parts.
///
/// Partitions are totally ordered by size and then reverse lexicographically,
/// so (3) < (2,1) < (1,1,1) and every container keyed by Partition iterates
/// in the same canonical order used for matrix indexing and serialization.
class Partition {
 public:
  Partition() = default;
  /// Throws PreconditionError unless parts are positive and weakly decreasing.
  explicit Partition(std::vector<int> parts);
  Partition(std::initializer_list<int> parts) : Partition(std::vector<int>(parts)) {}

  /// Sorts arbitrary positive parts (zeros are dropped).
  static Partition from_unsorted(std::vector<int> parts);
  /// Parses the text form "5,1,1,1"; the empty string is the empty partition.
  static Partition parse(const std::string& text);
  static Partition hook(int arm, int leg_length);  // (arm, 1^leg_length)

  const std::vector<int>& parts() const noexcept { return parts_; }
  int size() const noexcept { return size_; }
  int length() const noexcept { return static_cast<int>(parts_.size()); }
  bool empty() const noexcept { return parts_.empty(); }
  /// i-th part, 0-based, or 0 past the end.
  int operator[](std::size_t i) const noexcept { return i < parts_.size() ? parts_[i] : 0; }

  Partition conjugate() const;
  /// Sum over i of (i-1) * part_i with 1-based i.
  long n_stat() const;
  /// Dominance order: this dominates other (equal sizes assumed).
  bool dominates(const Partition& other) const;
  bool contains(const Partition& other) const;

  std::string to_string() const;

  friend bool operator==(const Partition& a, const Partition& b) { return a.parts_ == b.parts_; }
  friend bool operator<(const Partition& a, const Partition& b) {
    if (a.size_ != b.size_) return a.size_ < b.size_;
    return b.parts_ < a.parts_;
  }

 private:
  std::vector<int> parts_;
  int size_ = 0;
};

/// Ordered sequence of positive parts.
class Composition {
 public:
  Composition() = default;
  explicit Composition(std::vector<int> parts);
  Composition(std::initializer_list<int> parts) : Composition(std::vector<int>(parts)) {}
  static Composition parse(const std::string& text);

  const std::vector<int>& parts() const noexcept { return parts_; }
  int size() const noexcept { return size_; }
  int length() const noexcept { return static_cast<int>(parts_.size()); }
  bool empty() const noexcept { return parts_.empty(); }
  int operator[](std::size_t i) const { return parts_.at(i); }

  std::vector<int> partial_sums() const;
  Partition sorted() const { return Partition::from_unsorted(parts_); }
  /// Partial-sum set as a bit mask: bit (s-1) set for each proper partial sum s.
  std::uint32_t descent_mask() const;
  static Composition from_descent_mask(int size, std::uint32_t mask);

  Composition concat(const Composition& other) const;
  std::string to_string() const;

  friend bool operator==(const Composition& a, const Composition& b) { return a.parts_ == b.parts_; }
  friend bool operator<(const Composition& a, const Composition& b) {
    if (a.size_ != b.size_) return a.size_ < b.size_;
    return a.parts_ < b.parts_;
  }

 private:
  std::vector<int> parts_;
  int size_ = 0;
};

/// All partitions of n in canonical (reverse lexicographic) order.
std::vector<Partition> partitions_of(int n);

/// All 2^(n-1) compositions of n (one empty composition for n = 0), in
/// lexicographic order of their parts.
std::vector<Composition> compositions_of(int n);

}  // namespace qtsym
