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

#include "faircore/bounds.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <random>

#include <json.hpp>

namespace faircore::bounds {

namespace {

constexpr double kSlackTolerance = 1e-9;
constexpr double kLog2E = 1.4426950408889634;
constexpr double kInf = std::numeric_limits<double>::infinity();
// Positive slack beyond this marks a bound as loose rather than wrong.
constexpr double kLooseSlackBits = 8.0;

AuditLine make_line(std::string name, const std::string& instance, double lambda, double lhs,
                    double rhs, double slack, std::string note = {}) {
  AuditLine line;
  line.inequality = std::move(name);
  line.instance = instance;
  line.lambda = lambda;
  line.lhs = lhs;
  line.rhs = rhs;
  line.slack = slack;
  line.pass = slack >= -kSlackTolerance;
  if (note.empty() && std::isinf(lhs)) note = "vacuous: infinite divergence";
  if (note.empty() && slack > kLooseSlackBits) note = "loose bound";
  line.note = std::move(note);
  return line;
}

info::Distribution uniform_baseline(int n) {
  return info::normalize(std::vector<double>(n, 1.0));
}

double uniform_double(std::mt19937_64& rng) {
  return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

info::Distribution random_distribution(std::mt19937_64& rng, int dim) {
  std::vector<double> w(dim);
  for (double& x : w) x = 0.05 + uniform_double(rng);
  return info::normalize(w);
}

}  // namespace

bool AuditReport::all_pass() const {
  return std::all_of(lines.begin(), lines.end(), [](const AuditLine& l) { return l.pass; });
}

double AuditReport::worst_slack() const {
  double worst = kInf;
  for (const auto& l : lines) worst = std::min(worst, l.slack);
  return worst;
}

std::string to_json_lines(const AuditReport& report) {
  std::string out;
  for (const auto& l : report.lines) {
    nlohmann::ordered_json j;
    j["instance"] = l.instance;
    j["lambda"] = l.lambda;
    j["inequality"] = l.inequality;
    j["lhs"] = l.lhs;
    j["rhs"] = l.rhs;
    j["slack"] = l.slack;
    j["pass"] = l.pass;
    if (!l.note.empty()) j["note"] = l.note;
    out += j.dump();
    out += '\n';
  }
  return out;
}

double delta_bound(OrderParameter order, const Rational& alpha, const Rational& beta) {
  if (beta > Rational(1) || alpha < Rational(1)) {
    throw std::invalid_argument("delta_bound: requires beta <= 1 <= alpha");
  }
  const double lambda = order.value();
  if (order.is_unit()) {
    if (alpha == Rational(1) || beta == Rational(1)) return kLog2E;
    throw std::invalid_argument("delta_bound: lambda = 1 needs alpha = 1 or beta = 1");
  }
  const double constant = lambda < 1.0 ? beta.to_double() : alpha.to_double();
  return std::log2(constant * lambda) / (lambda - 1.0);
}

AuditReport audit_reverse_greedy(const ExplicitGame& g, OrderParameter order,
                                 const EnumerationCaps& caps, const std::string& instance) {
  AuditReport report;
  report.instance = instance;
  report.lambda = order.value();

  const auto covers = exact::enumerate_covers(g, caps);
  const auto rg = alg::reverse_greedy(g);
  const double h_rg = exact::cover_entropy(rg.cover, order);
  const auto opt = exact::min_entropy_over(covers, order);
  const auto uniform = uniform_baseline(g.player_count());
  const auto fair = exact::fairness_over(covers, uniform, order);
  const double d_rg = info::renyi_divergence(info::normalize(rg.cover), uniform, order);

  // Definition quantifies over minimum-entropy covers: alpha is the best
  // (smallest) constant any of them admits, beta the largest.
  Rational alpha = Rational(std::numeric_limits<long long>::max());
  Rational beta(0);
  for (const auto& x : opt.argmin) {
    const auto constants = exact::packing_constants(g, x, rg.trace);
    alpha = std::min(alpha, constants.alpha);
    beta = std::max(beta, constants.beta);
  }

  if (order.is_unit() && alpha != Rational(1) && beta != Rational(1)) {
    report.lines.push_back(make_line(
        "reverse-greedy-entropy-bound", instance, 1.0, -kInf, kInf, kInf,
        "skipped: lambda = 1 bound needs alpha = 1 or beta = 1 (alpha = " + alpha.str() +
            ", beta = " + beta.str() + ")"));
    return report;
  }
  const double delta = delta_bound(order, alpha, beta);
  report.lines.push_back(make_line("reverse-greedy-entropy-bound", instance, order.value(), h_rg,
                                   opt.entropy + delta, opt.entropy + delta - h_rg));
  report.lines.push_back(make_line("reverse-greedy-divergence-bound", instance, order.value(),
                                   d_rg, fair.value - delta, d_rg - (fair.value - delta)));
  return report;
}

AuditReport audit_is_game(const ISGame& g, OrderParameter order, const EnumerationCaps& caps,
                          const std::string& instance) {
  AuditReport report;
  report.instance = instance;
  report.lambda = order.value();
  const double lambda = order.value();

  const auto eg = games::to_explicit(g);
  const auto covers = exact::enumerate_covers(eg, caps);
  const auto opt = exact::min_entropy_over(covers, order);
  const auto rg = alg::reverse_greedy(eg);
  const auto bi = alg::cover_of_orientation(g, alg::biased_orientation(g));

  std::vector<double> shapley_weights(g.vertex_count());
  for (int i = 0; i < g.vertex_count(); ++i) {
    shapley_weights[i] = static_cast<double>(g.vertex_weight(i));
  }
  const auto sh = info::normalize(shapley_weights);
  const auto uniform = uniform_baseline(g.vertex_count());

  const double h_sh = info::renyi_entropy(sh, order);
  const double h_rg = exact::cover_entropy(rg.cover, order);
  const double h_bi = exact::cover_entropy(bi, order);
  const double nu_sh = info::nonuniformity(sh);
  const double d_rg_u = info::renyi_divergence(info::normalize(rg.cover), uniform, order);
  const double d_rg_sh = info::renyi_divergence(info::normalize(rg.cover), sh, order);
  const double d_bi_sh = info::renyi_divergence(info::normalize(bi), sh, order);
  const double fair_u = exact::fairness_over(covers, uniform, order).value;
  const double fair_sh = exact::fairness_over(covers, sh, order).value;

  // IS games admit unit packing constants, so the lambda = 1 limit applies.
  const double greedy_term = order.is_unit() ? kLog2E : std::log2(lambda) / (lambda - 1.0);

  report.lines.push_back(make_line("is-reverse-greedy-entropy-bound", instance, lambda,
                                   h_sh - opt.entropy, (h_sh - h_rg) + greedy_term,
                                   (h_sh - h_rg) + greedy_term - (h_sh - opt.entropy)));
  report.lines.push_back(make_line("is-biased-entropy-bound", instance, lambda,
                                   h_sh - opt.entropy, (h_sh - h_bi) / lambda + 1.0,
                                   (h_sh - h_bi) / lambda + 1.0 - (h_sh - opt.entropy)));
  report.lines.push_back(make_line("is-egalitarian-guarantee", instance, lambda, d_rg_u,
                                   fair_u - greedy_term, d_rg_u - (fair_u - greedy_term)));
  report.lines.push_back(make_line("is-marginalist-greedy-guarantee", instance, lambda, d_rg_sh,
                                   fair_sh - greedy_term - nu_sh,
                                   d_rg_sh - (fair_sh - greedy_term - nu_sh)));
  report.lines.push_back(make_line("is-marginalist-biased-guarantee", instance, lambda, d_bi_sh,
                                   lambda * fair_sh - (1.0 + lambda) * nu_sh - lambda,
                                   d_bi_sh - (lambda * fair_sh - (1.0 + lambda) * nu_sh - lambda)));
  return report;
}

AuditReport audit_information_lemmas(std::uint64_t seed, int trials) {
  if (trials < 1) throw std::invalid_argument("audit_information_lemmas: trials must be >= 1");
  AuditReport report;
  report.instance = "random(seed=" + std::to_string(seed) + ")";
  report.lambda = 0.0;
  std::mt19937_64 rng(seed);

  double gibbs_worst = kInf;
  for (int t = 0; t < trials; ++t) {
    const int dim = 2 + static_cast<int>(rng() % 9);
    const auto p = random_distribution(rng, dim);
    const auto q = random_distribution(rng, dim);
    for (double lambda : {0.5, 2.0, 3.0}) {
      gibbs_worst =
          std::min(gibbs_worst, info::relative_entropy_gibbs(p, q, OrderParameter(lambda)));
    }
  }
  report.lines.push_back(make_line("gibbs-nonnegativity", report.instance, 0.0, gibbs_worst, 0.0,
                                   gibbs_worst));

  double pqr_worst = kInf;
  for (int t = 0; t < trials; ++t) {
    const int dim = 2 + static_cast<int>(rng() % 9);
    const auto p = random_distribution(rng, dim);
    const auto q = random_distribution(rng, dim);
    const auto r = random_distribution(rng, dim);
    const double nu_r = info::nonuniformity(r);
    for (double lambda : {0.5, 1.0, 2.0, 3.0}) {
      const OrderParameter ord(lambda);
      const double gap = info::renyi_divergence(p, r, ord) - info::renyi_divergence(q, r, ord);
      const double center = info::renyi_entropy(q, ord) - info::renyi_entropy(p, ord);
      pqr_worst = std::min(pqr_worst, gap - (center - nu_r));
      pqr_worst = std::min(pqr_worst, (center + nu_r) - gap);
    }
  }
  report.lines.push_back(make_line("pqr-sandwich", report.instance, 0.0, pqr_worst, 0.0,
                                   pqr_worst));

  double transfer_worst = kInf;
  bool transfer_strict = true;
  for (int t = 0; t < trials; ++t) {
    const int dim = 2 + static_cast<int>(rng() % 9);
    std::vector<double> w(dim);
    for (double& x : w) x = 0.05 + uniform_double(rng);
    std::sort(w.begin(), w.end(), std::greater<>());
    auto p = info::normalize(w).probs();
    const int i = static_cast<int>(rng() % (dim - 1));
    const int j = i + 1 + static_cast<int>(rng() % (dim - 1 - i));
    // Every fourth trial hits the epsilon = p_j boundary exactly.
    const double eps = (t % 4 == 0) ? p[j] : p[j] * (0.25 + 0.75 * uniform_double(rng));
    auto q = p;
    q[i] += eps;
    q[j] -= eps;
    const auto pd = info::Distribution::from_probabilities(p);
    const auto qd = info::Distribution::from_probabilities(q);
    for (double lambda : {0.25, 0.5, 1.0, 2.0, 4.0}) {
      const OrderParameter ord(lambda);
      const double drop = info::renyi_entropy(pd, ord) - info::renyi_entropy(qd, ord);
      transfer_worst = std::min(transfer_worst, drop);
      if (!(drop > 0.0)) transfer_strict = false;
    }
  }
  AuditLine transfer = make_line("transfer-strict-decrease", report.instance, 0.0, transfer_worst,
                                 0.0, transfer_worst);
  transfer.pass = transfer_strict;  // the lemma is strict, not just nonnegative
  report.lines.push_back(std::move(transfer));
  return report;
}

}  // namespace faircore::bounds
