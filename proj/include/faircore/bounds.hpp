// Copyright 2026 The faircore Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "faircore/exact.hpp"

namespace faircore::bounds {

using exact::EnumerationCaps;
using games::ExplicitGame;
using games::ISGame;
using info::OrderParameter;

/// One audited inequality. lhs/rhs are the two sides as the inequality is
/// usually written; slack is the margin by which it holds (nonnegative when
/// satisfied), and pass is slack >= -1e-9. Vacuous or skipped checks carry
/// an explanatory note and an infinite slack.
struct AuditLine {
  std::string inequality;
  std::string instance;
  double lambda = 1.0;
  double lhs = 0.0;
  double rhs = 0.0;
  double slack = 0.0;
  bool pass = false;
  std::string note;
};

struct AuditReport {
  std::string instance;
  double lambda = 1.0;
  std::vector<AuditLine> lines;

  bool all_pass() const;
  double worst_slack() const;
};

/// One JSON object per audited inequality, newline separated.
std::string to_json_lines(const AuditReport& report);

/// Additive guarantee of the reverse-greedy cover:
///   delta_l = 1/(l-1) * log2(beta * l)  for 0 < l < 1,
///   delta_l = 1/(l-1) * log2(alpha * l) for l > 1,
///   delta_1 = log2 e, valid only when alpha = 1 or beta = 1.
/// Nonnegative whenever beta <= 1 <= alpha.
double delta_bound(OrderParameter order, const Rational& alpha, const Rational& beta);

/// Checks the reverse-greedy entropy guarantee and its divergence form
/// against exact oracles, with packing constants computed over every
/// minimum-entropy cover. At lambda = 1 the log2(e) bound applies only when
/// one of the constants equals 1; otherwise the check is reported skipped.
AuditReport audit_reverse_greedy(const ExplicitGame& g, OrderParameter order,
                                 const EnumerationCaps& caps = {},
                                 const std::string& instance = "explicit");

/// Audits the induced-subgraph specializations: the reverse-greedy bound
/// with unit constants, the biased-orientation bound, and the divergence
/// guarantees against both the uniform and normalized-Shapley baselines.
AuditReport audit_is_game(const ISGame& g, OrderParameter order,
                          const EnumerationCaps& caps = {},
                          const std::string& instance = "is");

/// Randomized suites for the relative-entropy nonnegativity, the
/// divergence/entropy sandwich, and the strict entropy decrease under mass
/// transfer; reports the worst slack seen per lemma.
AuditReport audit_information_lemmas(std::uint64_t seed, int trials);

}  // namespace faircore::bounds
