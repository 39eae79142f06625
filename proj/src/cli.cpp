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
#include "qtsym/cli.hpp"

#include <map>

#include "qtsym/bibrick.hpp"
#include "qtsym/config.hpp"
#include "qtsym/errors.hpp"
#include "qtsym/macdonald.hpp"
#include "qtsym/parking.hpp"
#include "qtsym/transition.hpp"

namespace qtsym {

namespace {

template <class Body>
CommandReport run(std::string command, Body&& body) {
  CommandReport r;
  r.command = std::move(command);
  const auto start = std::chrono::steady_clock::now();
  try {
    body(r);
  } catch (const std::exception& e) {
    r.status = Status::error;
    r.result = Json::object();
    r.witness.reset();
    r.message = e.what();
  }
  r.elapsed = std::chrono::steady_clock::now() - start;
  return r;
}

template <class C>
void compare(CommandReport& r, const SymFunc<C>& lhs, const SymFunc<C>& rhs) {
  const SymFunc<C> diff = lhs - rhs;
  r.result["equal"] = diff.is_zero();
  if (!diff.is_zero()) {
    r.status = Status::mismatch;
    r.witness = Json{{"difference", to_json(diff)}};
  }
}

void compare(CommandReport& r, const IdentityResult& id) {
  r.result["equal"] = id.holds;
  if (!id.holds) {
    r.status = Status::mismatch;
    r.witness = Json{{"difference", to_json(id.difference)}};
  }
}

Json ints(const std::vector<int>& xs) {
  Json a = Json::array();
  for (int x : xs) a.push_back(x);
  return a;
}

Json mask_to_json(std::uint32_t mask, int n) {
  Json a = Json::array();
  for (int i = 1; i < n; ++i)
    if (mask & (1u << (i - 1))) a.push_back(i);
  return a;
}

int sign_of(const Partition& mu) { return (mu.size() - mu.length()) % 2 ? -1 : 1; }

bool is_hook_with_leg(const Partition& mu) { return mu.length() >= 2 && mu[0] >= 2 && mu[1] == 1; }

void require(bool ok, const std::string& what) {
  if (!ok) throw PreconditionError(what);
}

}  // namespace

const char* status_name(Status s) {
  switch (s) {
    case Status::ok: return "ok";
    case Status::mismatch: return "mismatch";
    case Status::error: return "error";
  }
  return "error";
}

int exit_code(Status s) {
  switch (s) {
    case Status::ok: return 0;
    case Status::mismatch: return 1;
    case Status::error: return 2;
  }
  return 2;
}

Json report_to_json(const CommandReport& r) {
  Json j{{"command", r.command}, {"status", status_name(r.status)}, {"result", r.result}};
  if (r.witness) j["witness"] = *r.witness;
  if (!r.message.empty()) j["message"] = r.message;
  return j;
}

Format parse_format(const std::string& text) {
  if (text == "json") return Format::json;
  if (text == "csv") return Format::csv;
  throw ParseError("format must be json or csv, got '" + text + "'");
}

CommandReport cmd_verify_hook(int n, int k) {
  return run("verify hook-theorem", [&](CommandReport& r) {
    require(n >= 2 && k >= 1, "verify hook-theorem requires n >= 2 and k >= 1");
    check_degree(n + k);
    r.result = Json{{"n", n}, {"k", k}};
    const QSF lhs = theorem_rhs(n, k);
    const QSF rhs = LaurentPoly(n % 2 ? 1 : -1) * convert(QSF::single(Basis::m, Partition::hook(n, k)), Basis::s);
    compare(r, lhs, rhs);
  });
}

CommandReport cmd_verify_corollary(int n, int k) {
  return run("verify corollary", [&](CommandReport& r) {
    require(n >= 2 && k >= 1, "verify corollary requires n >= 2 and k >= 1");
    check_degree(n + k);
    require(n + k <= 7, "verify corollary supports n + k <= 7");
    r.result = Json{{"n", n}, {"k", k}};
    const SymFunc<RatFunc> lhs = to_ratfunc(corollary_rhs(n, k));
    const SymFunc<RatFunc> rhs =
        RatFunc(n % 2 ? 1 : -1) *
        convert(nabla(SymFunc<Rational>::single(Basis::m, Partition::hook(n, k))), Basis::s);
    compare(r, lhs, rhs);
  });
}

CommandReport cmd_verify_shuffle(const Composition& alpha) {
  return run("verify shuffle", [&](CommandReport& r) {
    require(!alpha.empty(), "verify shuffle needs a nonempty composition");
    check_degree(alpha.size());
    require(alpha.size() <= 7, "verify shuffle supports |alpha| <= 7");
    r.result = Json{{"alpha", ints(alpha.parts())}};
    const SymFunc<RatFunc> lhs = convert(nabla(c_alpha_one(alpha)), Basis::m);
    const SymFunc<RatFunc> rhs = to_ratfunc(fqsym_to_sym(shuffle_sum(alpha)));
    compare(r, lhs, rhs);
  });
}

CommandReport cmd_verify_en(int n) {
  return run("verify en", [&](CommandReport& r) {
    require(n >= 1, "verify en requires n >= 1");
    check_degree(n);
    r.result = Json{{"n", n}};
    compare(r, en_identity(n));
  });
}

CommandReport cmd_verify_pn(int n, PnReading reading) {
  return run("verify pn", [&](CommandReport& r) {
    require(n >= 2, "verify pn requires n >= 2");
    check_degree(n);
    r.result = Json{{"n", n}, {"reading", pn_reading_name(reading)}};
    compare(r, pn_identity(n, reading));
  });
}

CommandReport cmd_nabla_m(const Partition& mu, Basis basis) {
  return run("compute nabla-m", [&](CommandReport& r) {
    require(!mu.empty(), "compute nabla-m needs a nonempty partition");
    check_degree(mu.size());
    require(mu.size() <= 7, "compute nabla-m supports |mu| <= 7");
    const SymFunc<RatFunc> f = nabla(SymFunc<Rational>::single(Basis::m, mu));
    const SymFunc<RatFunc> schur = convert(f, Basis::s);
    const RatFunc sign(sign_of(mu));
    Json bad = Json::array();
    for (const auto& [lambda, c] : schur.terms()) {
      const RatFunc signed_c = sign * c;
      bool positive = signed_c.is_polynomial();
      if (positive)
        for (const auto& [e, coeff] : signed_c.num().terms()) positive = positive && coeff > 0;
      if (!positive) bad.push_back(to_json(lambda));
    }
    r.result = Json{{"mu", to_json(mu)},
                    {"sign", sign_of(mu)},
                    {"schur_sign_uniform", bad.empty()},
                    {"value", to_json(basis == Basis::s ? schur : convert(f, basis))}};
    if (!bad.empty()) {
      r.status = Status::mismatch;
      r.witness = Json{{"partitions", bad}};
    }
  });
}

CommandReport cmd_c_alpha(const Composition& alpha, Basis basis) {
  return run("compute c-alpha", [&](CommandReport& r) {
    check_degree(alpha.size());
    r.result = Json{{"alpha", ints(alpha.parts())}, {"value", to_json(convert(c_alpha_one(alpha), basis))}};
  });
}

CommandReport cmd_macdonald(const Partition& mu, Basis basis) {
  return run("compute macdonald", [&](CommandReport& r) {
    require(!mu.empty(), "compute macdonald needs a nonempty partition");
    check_degree(mu.size());
    const SymFunc<PolyQT> h = macdonald(mu);
    r.result = Json{{"mu", to_json(mu)}, {"value", to_json(basis == Basis::m ? h : convert(h, basis))}};
  });
}

CommandReport cmd_pf_enumerate(int n, Format format, std::ostream& rows) {
  return run("pf enumerate", [&](CommandReport& r) {
    long count = 0;
    if (format == Format::csv) rows << pf_csv_header() << '\n';
    for_each_pf(n, [&](const ParkingFunction& pf) {
      const PFStatistics st = statistics(pf);
      if (format == Format::csv) {
        rows << pf_csv_row(pf, st) << '\n';
      } else {
        rows << Json{{"area_word", ints(pf.path.area_word())}, {"cars", ints(pf.cars)},      {"area", st.area},
                     {"dinv", st.dinv},                      {"sigma", ints(st.sigma)},     {"ides", mask_to_json(st.ides, n)},
                     {"comp", ints(st.comp.parts())}}
                    .dump()
             << '\n';
      }
      ++count;
    });
    r.result = Json{{"n", n}, {"count", count}};
  });
}

CommandReport cmd_pf_stats(const std::string& pf_text) {
  return run("pf stats", [&](CommandReport& r) {
    const ParkingFunction pf = ParkingFunction::parse(pf_text);
    const PFStatistics st = statistics(pf);
    r.result = Json{{"pf", pf.to_string()},
                    {"area", st.area},
                    {"dinv", st.dinv},
                    {"sigma", ints(st.sigma)},
                    {"ides", mask_to_json(st.ides, pf.path.size())},
                    {"comp", ints(st.comp.parts())}};
  });
}

CommandReport cmd_pf_stats(int n) {
  return run("pf stats", [&](CommandReport& r) {
    long count = 0;
    std::map<std::pair<int, int>, long> dist;
    for_each_pf(n, [&](const ParkingFunction& pf) {
      const PFStatistics st = statistics(pf);
      ++dist[{st.dinv, st.area}];
      ++count;
    });
    PolyQT hilbert;
    for (const auto& [e, c] : dist) hilbert.add_term(e.first, e.second, Integer(c));
    r.result = Json{{"n", n}, {"count", count}, {"dinv_area", to_json(hilbert)}};
  });
}

CommandReport cmd_bibrick(const Partition& mu, BibrickMode mode, const std::optional<Composition>& alpha_filter,
                          Format format, std::ostream& rows) {
  const char* name = mode == BibrickMode::enumerate ? "bibrick enumerate" : "bibrick verify-q1";
  return run(name, [&](CommandReport& r) {
    require(!mu.empty(), "bibrick needs a nonempty partition");
    const bool hook = mu.length() == 1 || mu[1] == 1;
    require(mu.size() <= (hook ? 8 : 7), "bibrick supports |mu| <= 7 (8 for hooks)");
    check_degree(mu.size());
    if (mode == BibrickMode::verify_q1) {
      const Q1Result q = verify_q1(mu);
      r.result = Json{{"mu", to_json(mu)}, {"count", q.count}, {"equal", q.holds}, {"expansion", to_json(q.lhs)}};
      if (!q.holds) {
        r.status = Status::mismatch;
        r.witness = Json{{"difference", to_json(q.difference)}};
      }
      return;
    }
    // Hook shapes get the constructed statistic alongside each permutation.
    std::map<std::string, int> stats;
    if (is_hook_with_leg(mu)) {
      const int n = mu[0], k = mu.length() - 1;
      for (const Composition& a : compositions_of(mu.size()))
        for (const HookTerm& t : hook_construct(n, k, a)) stats[t.pi.to_string()] = t.stat;
    }
    if (format == Format::csv) rows << bibrick_csv_header() << '\n';
    long count = 0;
    for_each_bibrick(mu, [&](const BiBrickPermutation& pi) {
      const Composition a = pi.alpha();
      if (alpha_filter && !(a == *alpha_filter)) return;
      std::optional<int> stat;
      if (auto it = stats.find(pi.to_string()); it != stats.end()) stat = it->second;
      if (format == Format::csv) {
        rows << bibrick_csv_row(mu, pi, stat) << '\n';
      } else {
        Json row{{"mu", to_json(mu)}, {"alpha", ints(a.parts())}, {"words", pi.cycles()}};
        if (stat) row["stat"] = *stat;
        rows << row.dump() << '\n';
      }
      ++count;
    });
    r.result = Json{{"mu", to_json(mu)}, {"count", count}};
    if (alpha_filter) r.result["alpha"] = ints(alpha_filter->parts());
  });
}

CommandReport cmd_hook_construct(int n, int k, const Composition& alpha, Format format, std::ostream& rows) {
  return run("bibrick hook-construct", [&](CommandReport& r) {
    const std::vector<HookTerm> terms = hook_construct(n, k, alpha);
    const Partition mu = Partition::hook(n, k);
    if (format == Format::csv) rows << bibrick_csv_header() << '\n';
    LaurentPoly poly;
    for (const HookTerm& t : terms) {
      if (format == Format::csv) {
        rows << bibrick_csv_row(mu, t.pi, t.stat) << '\n';
      } else {
        rows << Json{{"mu", to_json(mu)}, {"alpha", ints(t.pi.alpha().parts())}, {"words", t.pi.cycles()}, {"stat", t.stat}}
                    .dump()
             << '\n';
      }
      poly += LaurentPoly::q_power(t.stat);
    }
    const LaurentPoly expected = theorem_coeff(n, k, alpha).poly;
    r.result = Json{{"n", n},
                    {"k", k},
                    {"alpha", ints(alpha.parts())},
                    {"count", terms.size()},
                    {"stat_poly", to_json(poly)},
                    {"theorem_coeff", to_json(expected)},
                    {"equal", poly == expected}};
    if (!(poly == expected)) {
      r.status = Status::mismatch;
      r.witness = Json{{"stat_poly", to_json(poly)}, {"theorem_coeff", to_json(expected)}};
    }
  });
}

}  // namespace qtsym
