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

#include <string>

#include "json.hpp"

#include "qtsym/laurent.hpp"
#include "qtsym/poly_qt.hpp"
#include "qtsym/qsym.hpp"
#include "qtsym/ratfunc.hpp"
#include "qtsym/symfunc.hpp"

namespace qtsym {

using Json = nlohmann::ordered_json;

/// Integers that fit in int64 are emitted as numbers, larger ones as strings.
Json integer_to_json(const Integer& x);
Integer integer_from_json(const Json& j);

/// [[exponent, "num/den"], ...] sorted by exponent.
Json to_json(const LaurentPoly& p);
LaurentPoly laurent_from_json(const Json& j);

/// [[q_exp, t_exp, coeff], ...] in increasing exponent order.
Json to_json(const PolyQT& p);
PolyQT poly_from_json(const Json& j);

/// {"num": [...], "den": [...]}.
Json to_json(const RatFunc& f);
RatFunc ratfunc_from_json(const Json& j);

inline Json to_json(const Rational& r) { return r.get_str(); }

Json to_json(const Partition& p);

/// {"basis": "s", "terms": [{"partition": [2,1], "coeff": ...}]}.
template <class C>
Json to_json(const SymFunc<C>& f) {
  Json terms = Json::array();
  for (const auto& [lambda, c] : f.terms()) terms.push_back(Json{{"partition", to_json(lambda)}, {"coeff", to_json(c)}});
  return Json{{"basis", basis_name(f.basis())}, {"terms", std::move(terms)}};
}

/// {"terms": [{"degree": n, "descents": [..], "coeff": ...}]}.
template <class C>
Json to_json(const QSymFunc<C>& g) {
  Json terms = Json::array();
  for (const auto& [key, c] : g.terms()) {
    Json descents = Json::array();
    for (int i = 0; i + 1 < key.first; ++i)
      if (key.second & (1u << i)) descents.push_back(i + 1);
    terms.push_back(Json{{"degree", key.first}, {"descents", std::move(descents)}, {"coeff", to_json(c)}});
  }
  return Json{{"terms", std::move(terms)}};
}

}  // namespace qtsym
