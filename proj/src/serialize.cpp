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
#include "qtsym/serialize.hpp"

#include <limits>

namespace qtsym {

Json integer_to_json(const Integer& x) {
  if (x.fits_slong_p()) return static_cast<std::int64_t>(x.get_si());
  return x.get_str();
}

Integer integer_from_json(const Json& j) {
  if (j.is_number_integer()) return Integer(j.get<std::int64_t>());
  if (j.is_string()) {
    Integer out;
    if (out.set_str(j.get<std::string>(), 10) != 0) throw ParseError("bad integer '" + j.get<std::string>() + "'");
    return out;
  }
  throw ParseError("expected an integer");
}

Json to_json(const LaurentPoly& p) {
  Json out = Json::array();
  for (const auto& [e, c] : p.terms()) {
    Integer num = c.get_num(), den = c.get_den();
    out.push_back(Json::array({e, num.get_str() + "/" + den.get_str()}));
  }
  return out;
}

LaurentPoly laurent_from_json(const Json& j) {
  if (!j.is_array()) throw ParseError("Laurent polynomial must be an array");
  LaurentPoly p;
  for (const Json& term : j) {
    if (!term.is_array() || term.size() != 2) throw ParseError("Laurent term must be [exponent, \"num/den\"]");
    Rational c;
    if (c.set_str(term[1].get<std::string>(), 10) != 0) throw ParseError("bad rational coefficient");
    c.canonicalize();
    p.add_term(term[0].get<int>(), c);
  }
  return p;
}

Json to_json(const PolyQT& p) {
  Json out = Json::array();
  for (const auto& [e, c] : p.terms()) out.push_back(Json::array({e.first, e.second, integer_to_json(c)}));
  return out;
}

PolyQT poly_from_json(const Json& j) {
  if (!j.is_array()) throw ParseError("polynomial must be an array");
  PolyQT p;
  for (const Json& term : j) {
    if (!term.is_array() || term.size() != 3) throw ParseError("polynomial term must be [q_exp, t_exp, coeff]");
    p.add_term(term[0].get<int>(), term[1].get<int>(), integer_from_json(term[2]));
  }
  return p;
}

Json to_json(const RatFunc& f) { return Json{{"num", to_json(f.num())}, {"den", to_json(f.den())}}; }

RatFunc ratfunc_from_json(const Json& j) {
  if (!j.is_object() || !j.contains("num") || !j.contains("den")) throw ParseError("rational function needs num and den");
  return RatFunc(poly_from_json(j["num"]), poly_from_json(j["den"]));
}

Json to_json(const Partition& p) { return Json(p.parts()); }

}  // namespace qtsym
