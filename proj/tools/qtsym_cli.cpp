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
// qtsym command-line driver. Exit codes: 0 ok, 1 mismatch, 2 error.
#include <algorithm>
#include <fstream>
#include <iostream>
#include <random>
#include <sstream>

#include "CLI11.hpp"
#include "qtsym/cli.hpp"
#include "qtsym/config.hpp"
#include "qtsym/errors.hpp"

using namespace qtsym;

namespace {

struct Options {
  int n = 0;
  int k = 0;
  std::string mu;
  std::string alpha;
  std::string format = "json";
  std::string out;
  int guard = 0;
  std::uint64_t seed = 1;
  int samples = 0;
  std::string reading = "first-part";
  std::string basis = "s";
  std::string macdonald_basis = "m";
  std::string pf;
};

class Output {
 public:
  explicit Output(const std::string& path) {
    if (!path.empty()) {
      file_.open(path);
      if (!file_) throw PreconditionError("cannot open output file " + path);
    }
  }
  std::ostream& stream() { return file_.is_open() ? file_ : std::cout; }

 private:
  std::ofstream file_;
};

// Several reports under one command: worst status wins, cases keep order.
CommandReport combine(const std::string& command, const std::vector<CommandReport>& parts) {
  CommandReport out;
  out.command = command;
  Json cases = Json::array();
  for (const CommandReport& p : parts) {
    if (exit_code(p.status) > exit_code(out.status)) out.status = p.status;
    out.elapsed += p.elapsed;
    cases.push_back(report_to_json(p));
  }
  out.result = Json{{"cases", std::move(cases)}};
  if (out.status == Status::mismatch) out.witness = Json{{"see", "cases"}};
  return out;
}

void summary(const CommandReport& r) {
  std::cerr << r.command << ": " << status_name(r.status) << " in " << r.elapsed.count() << "s\n";
  if (!r.message.empty()) std::cerr << r.message << '\n';
}

int finish(const CommandReport& r, const Options& o) {
  summary(r);
  Output out(o.out);
  out.stream() << report_to_json(r).dump(2) << '\n';
  return exit_code(r.status);
}

// Rows go to the output; the report follows as a last JSON line, or goes to
// stderr for CSV.
template <class Cmd>
int streamed(const Options& o, Cmd&& cmd) {
  const Format format = parse_format(o.format);
  Output out(o.out);
  const CommandReport r = cmd(format, out.stream());
  summary(r);
  (format == Format::json ? out.stream() : std::cerr) << report_to_json(r).dump() << '\n';
  return exit_code(r.status);
}

std::vector<Composition> sample(std::vector<Composition> all, const Options& o) {
  if (o.samples <= 0 || o.samples >= static_cast<int>(all.size())) return all;
  std::mt19937_64 rng(o.seed);
  std::shuffle(all.begin(), all.end(), rng);
  all.resize(static_cast<std::size_t>(o.samples));
  std::sort(all.begin(), all.end());
  return all;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"q,t symmetric function toolkit: hook C-expansions, nabla, parking functions, bi-brick permutations"};
  app.require_subcommand(1);
  Options o;
  int code = 0;

  auto common = [&](CLI::App* c) {
    c->add_option("--format", o.format, "json or csv")->check(CLI::IsMember({"json", "csv"}));
    c->add_option("--out", o.out, "write output to this file");
    c->add_option("--guard", o.guard, "degree guard override");
    c->add_option("--seed", o.seed, "seed for sampled runs");
  };

  CLI::App* verify = app.add_subcommand("verify", "check an identity exactly")->require_subcommand(1);
  CLI::App* v_hook = verify->add_subcommand("hook-theorem", "C-expansion of (-1)^{n-1} m_{(n,1^k)}");
  CLI::App* v_cor = verify->add_subcommand("corollary", "parking-function sum for (-1)^{n-1} nabla m_{(n,1^k)}");
  CLI::App* v_shuffle = verify->add_subcommand("shuffle", "nabla C_alpha 1 against the parking-function sum");
  CLI::App* v_en = verify->add_subcommand("en", "sum of C_alpha 1 over alpha |= n against e_n");
  CLI::App* v_pn = verify->add_subcommand("pn", "[alpha_*]_q weighted sum against (-1)^{n-1} p_n");
  for (CLI::App* c : {v_hook, v_cor}) {
    c->add_option("--n", o.n)->required();
    c->add_option("--k", o.k)->required();
  }
  v_shuffle->add_option("--alpha", o.alpha, "composition, e.g. 2,1");
  v_shuffle->add_option("--n", o.n, "all compositions of n");
  v_shuffle->add_option("--samples", o.samples, "random subset size with --n");
  v_en->add_option("--n", o.n)->required();
  v_pn->add_option("--n", o.n)->required();
  v_pn->add_option("--reading", o.reading, "first-part or last-part");

  CLI::App* compute = app.add_subcommand("compute", "emit a symmetric function as JSON")->require_subcommand(1);
  CLI::App* c_nabla = compute->add_subcommand("nabla-m", "nabla m_mu with a Schur sign report");
  CLI::App* c_calpha = compute->add_subcommand("c-alpha", "C_alpha 1");
  CLI::App* c_mac = compute->add_subcommand("macdonald", "modified Macdonald polynomial");
  for (CLI::App* c : {c_nabla, c_mac}) c->add_option("--mu", o.mu, "partition, e.g. 2,1")->required();
  c_calpha->add_option("--alpha", o.alpha)->required();
  c_nabla->add_option("--basis", o.basis, "target basis (default s)");
  c_calpha->add_option("--basis", o.basis, "target basis (default s)");
  c_mac->add_option("--basis", o.macdonald_basis, "target basis (default m)");

  CLI::App* pf = app.add_subcommand("pf", "parking functions")->require_subcommand(1);
  CLI::App* pf_enum = pf->add_subcommand("enumerate", "all parking functions of size n with statistics");
  CLI::App* pf_stats = pf->add_subcommand("stats", "statistics of one parking function, or totals for size n");
  pf_enum->add_option("--n", o.n)->required();
  pf_stats->add_option("--n", o.n);
  pf_stats->add_option("--pf", o.pf, "text form a=0,1,1;c=1,3,2");

  CLI::App* bb = app.add_subcommand("bibrick", "bi-brick permutations")->require_subcommand(1);
  CLI::App* bb_enum = bb->add_subcommand("enumerate", "all bi-brick permutations with inner lengths mu");
  CLI::App* bb_q1 = bb->add_subcommand("verify-q1", "signed h-expansion against (-1)^{|mu|-l(mu)} m_mu");
  CLI::App* bb_hook = bb->add_subcommand("hook-construct", "direct construction for mu = (n,1^k)");
  bb_enum->add_option("--mu", o.mu)->required();
  bb_enum->add_option("--alpha", o.alpha, "keep only permutations with this alpha");
  bb_q1->add_option("--mu", o.mu)->required();
  bb_hook->add_option("--n", o.n)->required();
  bb_hook->add_option("--k", o.k)->required();
  bb_hook->add_option("--alpha", o.alpha)->required();

  for (CLI::App* c : {v_hook, v_cor, v_shuffle, v_en, v_pn, c_nabla, c_calpha, c_mac, pf_enum, pf_stats, bb_enum,
                      bb_q1, bb_hook})
    common(c);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? 0 : 2;
  }

  try {
    std::optional<ScopedDegreeGuard> guard;
    if (o.guard > 0) guard.emplace(o.guard);

    if (v_hook->parsed()) return finish(cmd_verify_hook(o.n, o.k), o);
    if (v_cor->parsed()) return finish(cmd_verify_corollary(o.n, o.k), o);
    if (v_shuffle->parsed()) {
      if (!o.alpha.empty()) return finish(cmd_verify_shuffle(Composition::parse(o.alpha)), o);
      if (o.n < 1) throw PreconditionError("verify shuffle needs --alpha or --n");
      std::vector<CommandReport> parts;
      for (const Composition& a : sample(compositions_of(o.n), o)) parts.push_back(cmd_verify_shuffle(a));
      return finish(combine("verify shuffle", parts), o);
    }
    if (v_en->parsed()) return finish(cmd_verify_en(o.n), o);
    if (v_pn->parsed()) return finish(cmd_verify_pn(o.n, parse_pn_reading(o.reading)), o);
    if (c_nabla->parsed()) return finish(cmd_nabla_m(Partition::parse(o.mu), parse_basis(o.basis)), o);
    if (c_calpha->parsed()) return finish(cmd_c_alpha(Composition::parse(o.alpha), parse_basis(o.basis)), o);
    if (c_mac->parsed()) return finish(cmd_macdonald(Partition::parse(o.mu), parse_basis(o.macdonald_basis)), o);
    if (pf_enum->parsed())
      return streamed(o, [&](Format f, std::ostream& s) { return cmd_pf_enumerate(o.n, f, s); });
    if (pf_stats->parsed()) {
      if (!o.pf.empty()) return finish(cmd_pf_stats(o.pf), o);
      if (o.n < 1) throw PreconditionError("pf stats needs --pf or --n");
      return finish(cmd_pf_stats(o.n), o);
    }
    if (bb_enum->parsed()) {
      std::optional<Composition> filter;
      if (!o.alpha.empty()) filter = Composition::parse(o.alpha);
      return streamed(o, [&](Format f, std::ostream& s) {
        return cmd_bibrick(Partition::parse(o.mu), BibrickMode::enumerate, filter, f, s);
      });
    }
    if (bb_q1->parsed()) {
      std::ostringstream unused;
      return finish(cmd_bibrick(Partition::parse(o.mu), BibrickMode::verify_q1, {}, Format::json, unused), o);
    }
    if (bb_hook->parsed())
      return streamed(o, [&](Format f, std::ostream& s) {
        return cmd_hook_construct(o.n, o.k, Composition::parse(o.alpha), f, s);
      });
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    code = 2;
  }
  return code;
}
