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
#include <functional>
#include <string>
#include <vector>

#include "qtsym/laurent.hpp"
#include "qtsym/partition.hpp"
#include "qtsym/poly_qt.hpp"
#include "qtsym/qsym.hpp"
#include "qtsym/symfunc.hpp"

namespace qtsym {

/// Dyck path stored by its area word a_1..a_n, rows bottom to top.
class DyckPath {
 public:
  DyckPath() = default;
  /// Throws PreconditionError unless a_1 = 0, a_i >= 0 and a_{i+1} <= a_i + 1.
  explicit DyckPath(std::vector<int> area_word);
  /// Text form "0,1,1".
  static DyckPath parse(const std::string& text);

  const std::vector<int>& area_word() const noexcept { return area_; }
  int size() const noexcept { return static_cast<int>(area_.size()); }
  int area() const;
  /// Diagonal points (i,i) the path passes through, 0 and n included.
  std::vector<int> touch_points() const;
  bool touches(int i) const;
  Composition comp() const;
  std::string to_string() const;

  friend bool operator==(const DyckPath& a, const DyckPath& b) { return a.area_ == b.area_; }
  friend bool operator<(const DyckPath& a, const DyckPath& b) { return a.area_ < b.area_; }

 private:
  std::vector<int> area_;
};

/// All Dyck paths of size n, area words in lexicographic order.
std::vector<DyckPath> dyck_paths(int n);

struct ParkingFunction {
  DyckPath path;
  std::vector<int> cars;  // car in row i, bottom to top

  /// Throws PreconditionError unless cars are a permutation and column-increasing.
  void validate() const;
  /// Text form "a=0,1,1;c=1,3,2".
  static ParkingFunction parse(const std::string& text);
  std::string to_string() const;
  friend bool operator==(const ParkingFunction& a, const ParkingFunction& b) {
    return a.path == b.path && a.cars == b.cars;
  }
};

struct PFStatistics {
  int area = 0;
  int dinv = 0;
  std::vector<int> sigma;
  std::uint32_t ides = 0;  // bit i-1 for i
  Composition comp;
};

/// Column-increasing labelings of one path, by backtracking over rows.
void for_each_labeling(const DyckPath& path, const std::function<void(const ParkingFunction&)>& visit);
/// Paths in lexicographic order, labelings per path; n <= 8.
void for_each_pf(int n, const std::function<void(const ParkingFunction&)>& visit);
std::vector<ParkingFunction> enumerate_pf(int n);

PFStatistics statistics(const ParkingFunction& pf);

/// sum over parking functions with comp = alpha of t^area q^dinv F_ides.
QSymFunc<PolyQT> shuffle_sum(const Composition& alpha);

/// Weight w_{n,k} of a path of size n+k.
LaurentPoly wpoly(int n, int k, const DyckPath& path);

/// sum over parking functions of size n+k of w_{n,k} t^area q^dinv F_ides, in
/// the Schur basis.
SymFunc<PolyQT> corollary_rhs(int n, int k);

/// sum over labelings of the path of q^dinv F_ides.
QSymFunc<PolyQT> llt_by_path(const DyckPath& path);

std::string ides_to_string(std::uint32_t ides, int n);
std::string pf_csv_header();
std::string pf_csv_row(const ParkingFunction& pf, const PFStatistics& st);

}  // namespace qtsym
