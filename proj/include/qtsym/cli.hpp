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

#include <chrono>
#include <optional>
#include <ostream>
#include <string>

#include "qtsym/operators.hpp"
#include "qtsym/partition.hpp"
#include "qtsym/serialize.hpp"
#include "qtsym/symfunc.hpp"

namespace qtsym {

enum class Status { ok, mismatch, error };
const char* status_name(Status s);
/// 0 ok, 1 mismatch, 2 error.
int exit_code(Status s);

struct CommandReport {
  std::string command;
  Status status = Status::ok;
  Json result = Json::object();  // command-specific, deterministic
  std::optional<Json> witness;    // present whenever status is mismatch
  std::string message;            // error text
  std::chrono::duration<double> elapsed{};
};

/// {"command", "status", "result", ["witness"], ["message"]}; elapsed time is
/// deliberately left out so identical runs serialize identically.
Json report_to_json(const CommandReport& r);

enum class Format { json, csv };
Format parse_format(const std::string& text);

CommandReport cmd_verify_hook(int n, int k);
/// n + k <= 7.
CommandReport cmd_verify_corollary(int n, int k);
/// |alpha| <= 7.
CommandReport cmd_verify_shuffle(const Composition& alpha);
CommandReport cmd_verify_en(int n);
CommandReport cmd_verify_pn(int n, PnReading reading);

/// nabla m_mu in the requested basis, plus whether all Schur coefficients
/// share the sign (-1)^{|mu|-l(mu)}; a mixed sign is reported as mismatch.
CommandReport cmd_nabla_m(const Partition& mu, Basis basis);
CommandReport cmd_c_alpha(const Composition& alpha, Basis basis);
CommandReport cmd_macdonald(const Partition& mu, Basis basis);

/// Rows go to `rows` (CSV with header, or one JSON object per line); the
/// report carries the count.
CommandReport cmd_pf_enumerate(int n, Format format, std::ostream& rows);
/// Statistics of one parking function in text form.
CommandReport cmd_pf_stats(const std::string& pf_text);
/// count and sum of q^dinv t^area over PF_n.
CommandReport cmd_pf_stats(int n);

enum class BibrickMode { enumerate, verify_q1 };
CommandReport cmd_bibrick(const Partition& mu, BibrickMode mode, const std::optional<Composition>& alpha_filter,
                          Format format, std::ostream& rows);
CommandReport cmd_hook_construct(int n, int k, const Composition& alpha, Format format, std::ostream& rows);

}  // namespace qtsym
