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
#include "qtsym/parking.hpp"

#include <algorithm>
#include <map>
#include <sstream>

#include "qtsym/config.hpp"
#include "qtsym/errors.hpp"
#include "qtsym/transition.hpp"

namespace qtsym {

namespace {

std::vector<int> parse_ints(const std::string& text) {
  std::vector<int> out;
  if (text.empty()) return out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    try {
      std::size_t used = 0;
      out.push_back(std::stoi(item, &used));
      if (used != item.size()) throw ParseError("bad integer '" + item + "'");
    } catch (const std::logic_error&) {
      throw ParseError("bad integer '" + item + "'");
    }
  }
  return out;
}

std::string join(const std::vector<int>& xs, const char* sep) {
  std::string out;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    if (i) out += sep;
    out += std::to_string(xs[i]);
  }
  return out;
}

void check_pf_size(int n) {
  if (n < 1 || n > 8) throw PreconditionError("parking functions are enumerated for 1 <= n <= 8");
}

std::string quoted(const std::string& s) { return "\"" + s + "\""; }

}  // namespace

DyckPath::DyckPath(std::vector<int> area_word) : area_(std::move(area_word)) {
  if (area_.empty()) throw PreconditionError("a Dyck path has at least one row");
  if (area_[0] != 0) throw PreconditionError("area word must start with 0");
  for (std::size_t i = 1; i < area_.size(); ++i)
    if (area_[i] < 0 || area_[i] > area_[i - 1] + 1) throw PreconditionError("invalid area word");
}

DyckPath DyckPath::parse(const std::string& text) { return DyckPath(parse_ints(text)); }

int DyckPath::area() const {
  int s = 0;
  for (int a : area_) s += a;
  return s;
}

std::vector<int> DyckPath::touch_points() const {
  std::vector<int> out;
  for (std::size_t i = 0; i < area_.size(); ++i)
    if (area_[i] == 0) out.push_back(static_cast<int>(i));
  out.push_back(size());
  return out;
}

bool DyckPath::touches(int i) const {
  if (i == size()) return true;
  return i >= 0 && i < size() && area_[static_cast<std::size_t>(i)] == 0;
}

Composition DyckPath::comp() const {
  std::vector<int> pts = touch_points(), parts;
  for (std::size_t i = 1; i < pts.size(); ++i) parts.push_back(pts[i] - pts[i - 1]);
  return Composition(std::move(parts));
}

std::string DyckPath::to_string() const { return join(area_, ","); }

std::vector<DyckPath> dyck_paths(int n) {
  if (n < 1) throw PreconditionError("Dyck paths need n >= 1");
  std::vector<DyckPath> out;
  std::vector<int> word{0};
  std::function<void()> rec = [&] {
    if (static_cast<int>(word.size()) == n) {
      out.emplace_back(word);
      return;
    }
    for (int a = 0; a <= word.back() + 1; ++a) {
      word.push_back(a);
      rec();
      word.pop_back();
    }
  };
  rec();
  return out;
}

void ParkingFunction::validate() const {
  const std::vector<int>& a = path.area_word();
  if (cars.size() != a.size()) throw PreconditionError("car count must equal the path size");
  std::vector<int> sorted = cars;
  std::sort(sorted.begin(), sorted.end());
  for (std::size_t i = 0; i < sorted.size(); ++i)
    if (sorted[i] != static_cast<int>(i) + 1) throw PreconditionError("cars must be a permutation of 1..n");
  for (std::size_t i = 0; i + 1 < a.size(); ++i)
    if (a[i + 1] == a[i] + 1 && cars[i + 1] < cars[i]) throw PreconditionError("cars must increase up each column");
}

ParkingFunction ParkingFunction::parse(const std::string& text) {
  const auto semi = text.find(';');
  if (semi == std::string::npos || text.compare(0, 2, "a=") != 0 || text.compare(semi + 1, 2, "c=") != 0)
    throw ParseError("parking function text must look like a=0,1,1;c=1,3,2");
  ParkingFunction pf{DyckPath::parse(text.substr(2, semi - 2)), parse_ints(text.substr(semi + 3))};
  pf.validate();
  return pf;
}

std::string ParkingFunction::to_string() const { return "a=" + path.to_string() + ";c=" + join(cars, ","); }

void for_each_labeling(const DyckPath& path, const std::function<void(const ParkingFunction&)>& visit) {
  const int n = path.size();
  const std::vector<int>& a = path.area_word();
  ParkingFunction pf{path, std::vector<int>(static_cast<std::size_t>(n), 0)};
  std::vector<bool> used(static_cast<std::size_t>(n) + 1, false);
  std::function<void(std::size_t)> rec = [&](std::size_t row) {
    if (row == static_cast<std::size_t>(n)) {
      visit(pf);
      return;
    }
    const int low = (row > 0 && a[row] == a[row - 1] + 1) ? pf.cars[row - 1] + 1 : 1;
    for (int c = low; c <= n; ++c) {
      if (used[static_cast<std::size_t>(c)]) continue;
      used[static_cast<std::size_t>(c)] = true;
      pf.cars[row] = c;
      rec(row + 1);
      used[static_cast<std::size_t>(c)] = false;
    }
  };
  rec(0);
}

void for_each_pf(int n, const std::function<void(const ParkingFunction&)>& visit) {
  check_pf_size(n);
  for (const DyckPath& path : dyck_paths(n)) for_each_labeling(path, visit);
}

std::vector<ParkingFunction> enumerate_pf(int n) {
  std::vector<ParkingFunction> out;
  for_each_pf(n, [&](const ParkingFunction& pf) { out.push_back(pf); });
  return out;
}

PFStatistics statistics(const ParkingFunction& pf) {
  const std::vector<int>& a = pf.path.area_word();
  const std::vector<int>& c = pf.cars;
  const std::size_t n = a.size();
  PFStatistics st;
  st.area = pf.path.area();
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) {
      if (a[i] == a[j] && c[i] < c[j]) ++st.dinv;
      if (a[i] == a[j] + 1 && c[i] > c[j]) ++st.dinv;
    }
  std::vector<std::size_t> rows(n);
  for (std::size_t i = 0; i < n; ++i) rows[i] = i;
  std::sort(rows.begin(), rows.end(), [&](std::size_t x, std::size_t y) {
    return a[x] != a[y] ? a[x] > a[y] : x > y;
  });
  for (std::size_t r : rows) st.sigma.push_back(c[r]);
  std::vector<std::size_t> pos(n + 2);
  for (std::size_t i = 0; i < n; ++i) pos[static_cast<std::size_t>(st.sigma[i])] = i;
  for (std::size_t i = 1; i < n; ++i)
    if (pos[i + 1] < pos[i]) st.ides |= 1u << (i - 1);
  st.comp = pf.path.comp();
  return st;
}

QSymFunc<PolyQT> llt_by_path(const DyckPath& path) {
  if (path.size() > 8) throw PreconditionError("llt_by_path supports paths of size <= 8");
  std::map<std::uint32_t, std::map<int, long>> acc;
  for_each_labeling(path, [&](const ParkingFunction& pf) {
    PFStatistics st = statistics(pf);
    ++acc[st.ides][st.dinv];
  });
  QSymFunc<PolyQT> out;
  for (const auto& [mask, by_dinv] : acc) {
    PolyQT c;
    for (const auto& [d, count] : by_dinv) c.add_term(d, 0, Integer(count));
    out.add_term(path.size(), mask, c);
  }
  return out;
}

namespace {

// sum over the given paths of weight(path) t^area LLT(path).
template <class Weight>
QSymFunc<PolyQT> weighted_path_sum(const std::vector<DyckPath>& paths, Weight weight) {
  QSymFunc<PolyQT> out;
  for (const DyckPath& path : paths) {
    PolyQT w = weight(path);
    if (w.is_zero()) continue;
    w = shift(w, 0, path.area());
    const QSymFunc<PolyQT> llt = llt_by_path(path);
    for (const auto& [key, c] : llt.terms()) out.add_term(key.first, key.second, w * c);
  }
  return out;
}

}  // namespace

QSymFunc<PolyQT> shuffle_sum(const Composition& alpha) {
  check_pf_size(alpha.size());
  std::vector<DyckPath> paths;
  for (const DyckPath& p : dyck_paths(alpha.size()))
    if (p.comp() == alpha) paths.push_back(p);
  return weighted_path_sum(paths, [](const DyckPath&) { return PolyQT(1); });
}

LaurentPoly wpoly(int n, int k, const DyckPath& path) {
  if (n < 2 || k < 1) throw PreconditionError("wpoly requires n >= 2 and k >= 1");
  if (path.size() != n + k) throw SizeMismatch("wpoly requires a path of size n + k");
  LaurentPoly w(k + 1);
  for (int i = n - 1; i >= 1; --i) {
    if (path.touches(i)) break;
    w += LaurentPoly::q_power(i);
  }
  return w;
}

SymFunc<PolyQT> corollary_rhs(int n, int k) {
  if (n < 2 || k < 1) throw PreconditionError("corollary_rhs requires n >= 2 and k >= 1");
  if (n + k > 7) throw PreconditionError("corollary_rhs supports n + k <= 7");
  check_degree(n + k);
  QSymFunc<PolyQT> g =
      weighted_path_sum(dyck_paths(n + k), [&](const DyckPath& p) { return to_poly_qt(wpoly(n, k, p)); });
  return convert(fqsym_to_sym(g), Basis::s);
}

std::string ides_to_string(std::uint32_t ides, int n) {
  std::vector<int> xs;
  for (int i = 1; i < n; ++i)
    if (ides & (1u << (i - 1))) xs.push_back(i);
  return "{" + join(xs, ",") + "}";
}

std::string pf_csv_header() { return "n,area_word,cars,area,dinv,sigma,ides,comp"; }

std::string pf_csv_row(const ParkingFunction& pf, const PFStatistics& st) {
  const int n = pf.path.size();
  return std::to_string(n) + "," + quoted(pf.path.to_string()) + "," + quoted(join(pf.cars, ",")) + "," +
         std::to_string(st.area) + "," + std::to_string(st.dinv) + "," + quoted(join(st.sigma, " ")) + "," +
         quoted(ides_to_string(st.ides, n)) + "," + quoted(st.comp.to_string());
}

}  // namespace qtsym
