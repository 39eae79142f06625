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

#include <map>
#include <vector>

#include "qtsym/dense_matrix.hpp"
#include "qtsym/poly_qt.hpp"
#include "qtsym/ratfunc.hpp"
#include "qtsym/symfunc.hpp"
#include "qtsym/transition.hpp"

namespace qtsym {

/// Modified Macdonald polynomial H~_mu in the m-basis, from the inv/maj
/// statistics on standard fillings of mu's diagram.
SymFunc<PolyQT> macdonald(const Partition& mu);

struct MacdonaldTable {
  int degree = 0;
  std::vector<Partition> partitions;  // canonical order
  std::map<Partition, std::size_t> index;
  std::map<Partition, SymFunc<PolyQT>> expansions;  // m-basis
  DenseMatrix<PolyQT> schur;                        // row mu: Schur coefficients of H~_mu
  std::vector<PolyQT> eigenvalues;                  // t^{n(mu)} q^{n(mu')}
};

/// Built once per degree; checks the degree guard.
const MacdonaldTable& macdonald_table(int degree);

/// Matrix of nabla on the Schur basis at one degree: row lambda holds the
/// Schur coefficients of nabla s_lambda. Obtained by interpolation at
/// integer points and certified by the exact identity A N = D A. When the
/// environment variable QTSYM_CACHE_DIR is set, matrices are read from and
/// written to that directory (and re-certified after loading).
const DenseMatrix<PolyQT>& nabla_matrix(int degree);

/// Coefficients of a homogeneous f in the H~ basis, by a fraction-free solve
/// over Z[q,t].
SymFunc<RatFunc> expand_in_macdonald(const SymFunc<RatFunc>& f);

/// sum_mu c_mu H~_mu re-expressed in the target basis (m, h, e or s).
SymFunc<RatFunc> from_macdonald(const SymFunc<RatFunc>& f, Basis target = Basis::s);

/// nabla of a homogeneous f. The result is in f's basis, except that p-basis
/// inputs come back in the Schur basis.
SymFunc<RatFunc> nabla(const SymFunc<RatFunc>& f);

template <class C>
SymFunc<RatFunc> nabla(const SymFunc<C>& f) {
  return nabla(f.template map_coeffs<RatFunc>([](const C& c) { return RatFunc(c); }));
}

/// Lifts coefficients into Q(q,t).
template <class C>
SymFunc<RatFunc> to_ratfunc(const SymFunc<C>& f) {
  return f.template map_coeffs<RatFunc>([](const C& c) { return RatFunc(c); });
}

}  // namespace qtsym
