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
#include "qtsym/macdonald.hpp"

#include <algorithm>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <numeric>

#include "once_table.hpp"
#include "qtsym/config.hpp"
#include "qtsym/qsym.hpp"
#include "qtsym/serialize.hpp"

namespace qtsym {

namespace {

struct Cell {
  int row;
  int col;
};

struct DescentSlot {
  std::size_t cell;
  std::size_t below;
  int leg_plus_one;
  int arm;
};

}  // namespace

// French diagram, rows bottom-up. Reading order: rows top to bottom, each
// left to right. A filling w assigns w[i] to the i-th cell in that order.
SymFunc<PolyQT> macdonald(const Partition& mu) {
  const int n = mu.size();
  check_degree(n);
  if (n == 0) return SymFunc<PolyQT>::one(Basis::m);

  std::vector<Cell> cells;
  std::map<std::pair<int, int>, std::size_t> at;
  for (int r = mu.length() - 1; r >= 0; --r)
    for (int c = 0; c < mu[static_cast<std::size_t>(r)]; ++c) {
      at[{r, c}] = cells.size();
      cells.push_back({r, c});
    }
  const Partition conj = mu.conjugate();

  std::vector<std::pair<std::size_t, std::size_t>> attacking;
  for (std::size_t u = 0; u < cells.size(); ++u)
    for (std::size_t v = u + 1; v < cells.size(); ++v) {
      const bool same_row = cells[u].row == cells[v].row;
      const bool next_row = cells[u].row == cells[v].row + 1 && cells[u].col > cells[v].col;
      if (same_row || next_row) attacking.emplace_back(u, v);
    }
  std::vector<DescentSlot> slots;
  for (std::size_t u = 0; u < cells.size(); ++u) {
    const auto [r, c] = cells[u];
    if (r == 0) continue;
    slots.push_back({u, at.at({r - 1, c}), conj[static_cast<std::size_t>(c)] - r,
                     mu[static_cast<std::size_t>(r)] - 1 - c});
  }

  const std::size_t masks = std::size_t{1} << (n - 1);
  std::vector<std::map<std::pair<int, int>, long>> counts(masks);
  std::vector<int> w(static_cast<std::size_t>(n));
  std::iota(w.begin(), w.end(), 1);
  std::vector<std::size_t> pos(static_cast<std::size_t>(n) + 2);
  do {
    int inv = 0;
    int maj = 0;
    for (const auto& [u, v] : attacking)
      if (w[u] > w[v]) ++inv;
    for (const DescentSlot& d : slots)
      if (w[d.cell] > w[d.below]) {
        maj += d.leg_plus_one;
        inv -= d.arm;
      }
    for (std::size_t i = 0; i < w.size(); ++i) pos[static_cast<std::size_t>(w[i])] = i;
    std::uint32_t mask = 0;
    for (int i = 1; i < n; ++i)
      if (pos[static_cast<std::size_t>(i) + 1] < pos[static_cast<std::size_t>(i)]) mask |= 1u << (i - 1);
    ++counts[mask][{inv, maj}];
  } while (std::next_permutation(w.begin(), w.end()));

  QSymFunc<PolyQT> g;
  for (std::size_t mask = 0; mask < masks; ++mask) {
    PolyQT c;
    for (const auto& [e, count] : counts[mask]) {
      if (e.first < 0) throw InternalError("negative inv statistic in " + mu.to_string());
      c.add_term(e.first, e.second, Integer(count));
    }
    g.add_term(n, static_cast<std::uint32_t>(mask), c);
  }
  return fqsym_to_sym(g);
}

namespace {

MacdonaldTable build_macdonald_table(int degree) {
  MacdonaldTable t;
  t.degree = degree;
  t.partitions = partitions_of(degree);
  const std::size_t size = t.partitions.size();
  for (std::size_t i = 0; i < size; ++i) t.index.emplace(t.partitions[i], i);
  t.schur = DenseMatrix<PolyQT>(size, size);
  for (std::size_t i = 0; i < size; ++i) {
    const Partition& mu = t.partitions[i];
    SymFunc<PolyQT> h = macdonald(mu);
    SymFunc<PolyQT> s = convert(h, Basis::s);
    for (const auto& [lambda, c] : s.terms()) t.schur(i, t.index.at(lambda)) = c;
    t.expansions.emplace(mu, std::move(h));
    t.eigenvalues.push_back(PolyQT::monomial(1, static_cast<int>(mu.conjugate().n_stat()), static_cast<int>(mu.n_stat())));
  }
  return t;
}

detail::OnceTable<int, MacdonaldTable> g_macdonald;
detail::OnceTable<int, DenseMatrix<PolyQT>> g_nabla;

Integer exact_div_integer(const Integer& a, const Integer& b) {
  Integer r;
  mpz_divexact(r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return r;
}

bool is_prime(long x) {
  if (x < 2) return false;
  for (long d = 2; d * d <= x; ++d)
    if (x % d == 0) return false;
  return true;
}

bool is_prime_power(long x) {
  for (long p = 2; p <= x; ++p)
    if (x % p == 0) {
      while (x % p == 0) x /= p;
      return x == 1;
    }
  return false;
}

// q runs over integers that are not prime powers and t over primes, so no
// factor of the form q^a - t^b can vanish at a sample point.
std::vector<Integer> sample_points(std::size_t count, bool primes) {
  std::vector<Integer> out;
  for (long x = primes ? 2 : 6; out.size() < count; ++x)
    if (primes ? is_prime(x) : !is_prime_power(x)) out.emplace_back(x);
  return out;
}

// Rows of the inverse Vandermonde matrix map values to monomial coefficients.
DenseMatrix<Rational> inverse_vandermonde(const std::vector<Integer>& xs) {
  DenseMatrix<Rational> v(xs.size(), xs.size());
  for (std::size_t i = 0; i < xs.size(); ++i) {
    Rational p = 1;
    for (std::size_t j = 0; j < xs.size(); ++j) {
      v(i, j) = p;
      p *= xs[i];
    }
  }
  return inverse(v);
}

bool certify(const MacdonaldTable& t, const DenseMatrix<PolyQT>& n) {
  const std::size_t size = t.partitions.size();
  if (n.rows() != size || n.cols() != size) return false;
  DenseMatrix<PolyQT> lhs = t.schur * n;
  for (std::size_t i = 0; i < size; ++i)
    for (std::size_t j = 0; j < size; ++j)
      if (!(lhs(i, j) == t.eigenvalues[i] * t.schur(i, j))) return false;
  return true;
}

// Evaluates A^{-1} D A at one integer point.
DenseMatrix<Integer> nabla_at(const MacdonaldTable& t, const Integer& q, const Integer& tv) {
  const std::size_t size = t.partitions.size();
  DenseMatrix<Integer> a(size, size), b(size, size);
  for (std::size_t i = 0; i < size; ++i) {
    const Integer ev = t.eigenvalues[i].eval(q, tv);
    for (std::size_t j = 0; j < size; ++j) {
      a(i, j) = t.schur(i, j).eval(q, tv);
      b(i, j) = ev * a(i, j);
    }
  }
  auto [det, y] = bareiss_solve(a, b, exact_div_integer);
  for (std::size_t i = 0; i < size; ++i)
    for (std::size_t j = 0; j < size; ++j) {
      if (!mpz_divisible_p(y(i, j).get_mpz_t(), det.get_mpz_t())) throw InternalError("nabla matrix value is not integral");
      y(i, j) = exact_div_integer(y(i, j), det);
    }
  return std::move(y);
}

// Tensor-grid interpolation of every entry with degree at most `bound` in
// each variable. Returns false when some coefficient is not an integer.
bool interpolate(const MacdonaldTable& t, int bound, DenseMatrix<PolyQT>& out) {
  const std::size_t size = t.partitions.size();
  const std::size_t m = static_cast<std::size_t>(bound) + 1;
  const std::vector<Integer> qs = sample_points(m, false);
  const std::vector<Integer> ts = sample_points(m, true);
  const DenseMatrix<Rational> vq = inverse_vandermonde(qs);
  const DenseMatrix<Rational> vt = inverse_vandermonde(ts);

  std::vector<std::vector<DenseMatrix<Integer>>> values(m);
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < m; ++j) values[i].push_back(nabla_at(t, qs[i], ts[j]));

  out = DenseMatrix<PolyQT>(size, size);
  std::vector<Rational> by_q(m * m);
  for (std::size_t r = 0; r < size; ++r)
    for (std::size_t c = 0; c < size; ++c) {
      // by_q[e * m + j]: coefficient of q^e at t = ts[j].
      for (std::size_t j = 0; j < m; ++j)
        for (std::size_t e = 0; e < m; ++e) {
          Rational acc = 0;
          for (std::size_t i = 0; i < m; ++i) acc += vq(e, i) * values[i][j](r, c);
          by_q[e * m + j] = acc;
        }
      PolyQT p;
      for (std::size_t e = 0; e < m; ++e)
        for (std::size_t f = 0; f < m; ++f) {
          Rational acc = 0;
          for (std::size_t j = 0; j < m; ++j) acc += vt(f, j) * by_q[e * m + j];
          if (acc.get_den() != 1) return false;
          p.add_term(static_cast<int>(e), static_cast<int>(f), acc.get_num());
        }
      out(r, c) = std::move(p);
    }
  return true;
}

std::filesystem::path cache_file(int degree) {
  const char* dir = std::getenv("QTSYM_CACHE_DIR");
  if (dir == nullptr || *dir == '\0') return {};
  return std::filesystem::path(dir) / ("nabla_schur_" + std::to_string(degree) + ".json");
}

bool load_cached(const MacdonaldTable& t, const std::filesystem::path& file, DenseMatrix<PolyQT>& out) {
  std::ifstream in(file);
  if (!in) return false;
  try {
    Json j = Json::parse(in);
    const std::size_t size = t.partitions.size();
    if (j.at("degree").get<int>() != t.degree || j.at("matrix").size() != size) return false;
    DenseMatrix<PolyQT> n(size, size);
    for (std::size_t r = 0; r < size; ++r) {
      const Json& row = j["matrix"][r];
      if (row.size() != size) return false;
      for (std::size_t c = 0; c < size; ++c) n(r, c) = poly_from_json(row[c]);
    }
    if (!certify(t, n)) return false;
    out = std::move(n);
    return true;
  } catch (const std::exception&) {
    return false;
  }
}

void store_cached(const MacdonaldTable& t, const std::filesystem::path& file, const DenseMatrix<PolyQT>& n) {
  std::error_code ec;
  std::filesystem::create_directories(file.parent_path(), ec);
  Json matrix = Json::array();
  for (std::size_t r = 0; r < n.rows(); ++r) {
    Json row = Json::array();
    for (std::size_t c = 0; c < n.cols(); ++c) row.push_back(to_json(n(r, c)));
    matrix.push_back(std::move(row));
  }
  Json partitions = Json::array();
  for (const Partition& p : t.partitions) partitions.push_back(to_json(p));
  Json j{{"degree", t.degree}, {"partitions", std::move(partitions)}, {"matrix", std::move(matrix)}};
  std::filesystem::path tmp = file;
  tmp += ".tmp";
  {
    std::ofstream out(tmp);
    if (!out) return;
    out << j.dump();
  }
  std::filesystem::rename(tmp, file, ec);
}

DenseMatrix<PolyQT> build_nabla_matrix(int degree) {
  const MacdonaldTable& t = macdonald_table(degree);
  const std::filesystem::path file = cache_file(degree);
  DenseMatrix<PolyQT> n;
  if (!file.empty() && load_cached(t, file, n)) return n;

  const int base = std::max(1, degree * (degree - 1) / 2);
  for (int bound = base; bound <= 4 * base + 8; bound += std::max(1, degree)) {
    if (interpolate(t, bound, n) && certify(t, n)) {
      if (!file.empty()) store_cached(t, file, n);
      return n;
    }
  }
  throw InternalError("nabla matrix interpolation did not converge at degree " + std::to_string(degree));
}

std::size_t index_of(const MacdonaldTable& t, const Partition& mu) {
  auto it = t.index.find(mu);
  if (it == t.index.end()) throw InternalError("partition missing from Macdonald table");
  return it->second;
}

}  // namespace

const MacdonaldTable& macdonald_table(int degree) {
  if (degree < 0) throw PreconditionError("negative degree");
  check_degree(degree);
  return g_macdonald.get(degree, [degree] { return build_macdonald_table(degree); });
}

const DenseMatrix<PolyQT>& nabla_matrix(int degree) {
  if (degree < 0) throw PreconditionError("negative degree");
  check_degree(degree);
  return g_nabla.get(degree, [degree] { return build_nabla_matrix(degree); });
}

SymFunc<RatFunc> expand_in_macdonald(const SymFunc<RatFunc>& f) {
  if (f.basis() == Basis::Htilde) return f;
  if (f.is_zero()) return SymFunc<RatFunc>(Basis::Htilde);
  const int degree = f.degree();
  const MacdonaldTable& t = macdonald_table(degree);
  const SymFunc<RatFunc> s = convert(f, Basis::s);
  const std::size_t size = t.partitions.size();

  PolyQT common(1);
  for (const auto& [lambda, c] : s.terms()) common = divexact(common * c.den(), gcd(common, c.den()));
  DenseMatrix<PolyQT> at(size, size), b(size, 1);
  for (std::size_t i = 0; i < size; ++i)
    for (std::size_t j = 0; j < size; ++j) at(i, j) = t.schur(j, i);
  for (const auto& [lambda, c] : s.terms())
    b(index_of(t, lambda), 0) = c.num() * divexact(common, c.den());

  auto div = [](const PolyQT& x, const PolyQT& y) { return divexact(x, y); };
  auto [det, y] = bareiss_solve(at, b, div);
  SymFunc<RatFunc> out(Basis::Htilde);
  const PolyQT scale = det * common;
  for (std::size_t i = 0; i < size; ++i) out.add_term(t.partitions[i], RatFunc(y(i, 0), scale));
  return out;
}

SymFunc<RatFunc> from_macdonald(const SymFunc<RatFunc>& f, Basis target) {
  if (f.basis() != Basis::Htilde) throw PreconditionError("from_macdonald expects an H~-basis argument");
  if (target == Basis::Htilde) return f;
  SymFunc<RatFunc> s(Basis::s);
  for (int d : f.degrees()) {
    const MacdonaldTable& t = macdonald_table(d);
    const SymFunc<RatFunc> piece = f.piece(d);
    for (const auto& [mu, c] : piece.terms()) {
      const std::size_t row = index_of(t, mu);
      for (std::size_t col = 0; col < t.partitions.size(); ++col)
        if (!t.schur(row, col).is_zero()) s.add_term(t.partitions[col], c * RatFunc(t.schur(row, col)));
    }
  }
  return convert(s, target);
}

SymFunc<RatFunc> nabla(const SymFunc<RatFunc>& f) {
  if (f.basis() == Basis::Htilde) {
    SymFunc<RatFunc> out(Basis::Htilde);
    for (const auto& [mu, c] : f.terms())
      out.add_term(mu, c * RatFunc(PolyQT::monomial(1, static_cast<int>(mu.conjugate().n_stat()),
                                                     static_cast<int>(mu.n_stat()))));
    return out;
  }
  const Basis target = f.basis() == Basis::p ? Basis::s : f.basis();
  if (f.is_zero()) return SymFunc<RatFunc>(target);
  const int degree = f.degree();
  const SymFunc<RatFunc> s = convert(f, Basis::s);
  const TransitionTables& tt = transition_tables(degree);
  const DenseMatrix<PolyQT>& n = nabla_matrix(degree);
  std::vector<RatFunc> acc(tt.partitions.size());
  for (const auto& [lambda, c] : s.terms()) {
    const std::size_t row = tt.index.at(lambda);
    for (std::size_t col = 0; col < acc.size(); ++col)
      if (!n(row, col).is_zero()) acc[col] += c * RatFunc(n(row, col));
  }
  SymFunc<RatFunc> out(Basis::s);
  for (std::size_t col = 0; col < acc.size(); ++col) out.add_term(tt.partitions[col], acc[col]);
  return convert(out, target);
}

}  // namespace qtsym
