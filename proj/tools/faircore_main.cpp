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

#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "faircore/algorithms.hpp"
#include "faircore/bounds.hpp"
#include "faircore/exact.hpp"
#include "faircore/games.hpp"
#include "faircore/infomeasures.hpp"
#include "faircore/instance_io.hpp"

namespace {

using faircore::Rational;
using faircore::games::Cover;
using faircore::info::Distribution;
using faircore::info::OrderParameter;
using nlohmann::ordered_json;

constexpr int kExitOk = 0;
constexpr int kExitAuditFailure = 1;
constexpr int kExitInputError = 2;
constexpr int kExitCapsExceeded = 3;

std::string fixed6(double x) {
  if (std::isinf(x)) return x > 0 ? "inf" : "-inf";
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.6f", x);
  return buf;
}

std::string cover_str(const Cover& c) {
  std::string out = "(";
  for (std::size_t i = 0; i < c.size(); ++i) {
    if (i) out += ", ";
    out += std::to_string(c[i]);
  }
  return out + ")";
}

std::string rationals_str(const std::vector<Rational>& values) {
  std::string out = "(";
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (i) out += ", ";
    out += values[i].str();
  }
  return out + ")";
}

ordered_json cover_json(const Cover& c) { return ordered_json(c); }

struct BaselineChoice {
  std::string spec = "uniform";
  Distribution resolve(const faircore::io::Instance& inst) const {
    const int n = inst.player_count();
    if (spec == "uniform") {
      return faircore::info::normalize(std::vector<double>(n, 1.0));
    }
    if (spec == "shapley") {
      std::vector<double> weights(n);
      if (inst.is_induced()) {
        for (int i = 0; i < n; ++i) {
          weights[i] = static_cast<double>(inst.is_game->vertex_weight(i));
        }
      } else {
        const auto shapley = faircore::games::shapley_general(*inst.explicit_game);
        for (int i = 0; i < n; ++i) weights[i] = shapley[i].to_double();
      }
      return faircore::info::normalize(weights);
    }
    // Otherwise a path to a JSON array of nonnegative weights.
    std::ifstream in(spec);
    if (!in) throw std::runtime_error(spec + ": cannot open baseline file");
    std::stringstream buffer;
    buffer << in.rdbuf();
    const auto j = ordered_json::parse(buffer.str(), nullptr, false);
    if (j.is_discarded() || !j.is_array() || static_cast<int>(j.size()) != n) {
      throw std::runtime_error(spec + ": baseline must be a JSON array with one weight per player");
    }
    std::vector<double> weights;
    for (const auto& v : j) {
      if (!v.is_number()) throw std::runtime_error(spec + ": baseline weights must be numbers");
      weights.push_back(v.get<double>());
    }
    return faircore::info::normalize(weights);
  }
};

void warn_if_not_monotone(const faircore::io::Instance& inst) {
  if (!inst.is_induced() && !inst.explicit_game->is_monotone()) {
    std::cerr << "warning: " << inst.source << ": value table is not monotone\n";
  }
}

int run_analyze(const std::string& path, double lambda, const BaselineChoice& baseline,
                bool json) {
  const auto inst = faircore::io::load_instance(path);
  warn_if_not_monotone(inst);
  const OrderParameter order(lambda);
  const auto q = baseline.resolve(inst);

  // IS instances go through the orientation form of the greedy, which
  // needs no value table and therefore has no player cap.
  faircore::games::Money grand_value = 0;
  Cover rg_cover;
  faircore::alg::GreedyTrace trace;
  std::vector<faircore::Rational> shapley;
  if (inst.is_induced()) {
    grand_value = inst.is_game->total_weight();
    auto greedy = faircore::alg::greedy_orientation(*inst.is_game);
    rg_cover = faircore::alg::cover_of_orientation(*inst.is_game, greedy.orientation);
    trace = std::move(greedy.trace);
    shapley = faircore::games::shapley_is(*inst.is_game);
  } else {
    const auto& game = *inst.explicit_game;
    grand_value = game.grand_value();
    auto greedy = faircore::alg::reverse_greedy(game);
    rg_cover = std::move(greedy.cover);
    trace = std::move(greedy.trace);
    shapley = faircore::games::shapley_general(game);
  }
  const double h_rg = faircore::exact::cover_entropy(rg_cover, order);
  const double d_rg =
      faircore::info::renyi_divergence(faircore::info::normalize(rg_cover), q, order);

  std::string order_names;
  std::string delta_list;
  for (std::size_t r = 0; r < trace.order.size(); ++r) {
    if (r) {
      order_names += ", ";
      delta_list += ", ";
    }
    order_names += inst.players[trace.order[r]];
    delta_list += std::to_string(trace.deltas[r]);
  }

  ordered_json out;
  out["instance"] = inst.source;
  out["form"] = inst.is_induced() ? "is" : "explicit";
  out["players"] = inst.players;
  out["lambda"] = lambda;
  out["baseline"] = baseline.spec;
  out["grand_value"] = grand_value;
  {
    ordered_json sh = ordered_json::array();
    for (const auto& s : shapley) sh.push_back(s.str());
    out["shapley"] = std::move(sh);
  }
  out["reverse_greedy"]["cover"] = cover_json(rg_cover);
  out["reverse_greedy"]["order"] = trace.order;
  out["reverse_greedy"]["deltas"] = trace.deltas;
  out["reverse_greedy"]["entropy"] = h_rg;
  out["reverse_greedy"]["divergence_from_baseline"] = d_rg;

  if (!json) {
    std::cout << "instance: " << inst.source << " (" << inst.players.size() << " players, "
              << (inst.is_induced() ? "is" : "explicit") << ")\n";
    std::cout << "v(N) = " << grand_value << "\n";
    std::cout << "shapley = " << rationals_str(shapley) << "\n";
    std::cout << "reverse-greedy cover = " << cover_str(rg_cover) << "  [order: " << order_names
              << "; deltas: " << delta_list << "]\n";
    std::cout << "H_" << fixed6(lambda) << "(RG) = " << fixed6(h_rg) << "\n";
    std::cout << "D_" << fixed6(lambda) << "(RG || " << baseline.spec << ") = " << fixed6(d_rg)
              << "\n";
  }

  if (inst.is_induced()) {
    const auto bi = faircore::alg::cover_of_orientation(*inst.is_game,
                                                        faircore::alg::biased_orientation(*inst.is_game));
    const double h_bi = faircore::exact::cover_entropy(bi, order);
    const double d_bi =
        faircore::info::renyi_divergence(faircore::info::normalize(bi), q, order);
    out["biased"]["cover"] = cover_json(bi);
    out["biased"]["entropy"] = h_bi;
    out["biased"]["divergence_from_baseline"] = d_bi;
    if (!json) {
      std::cout << "biased cover = " << cover_str(bi) << "\n";
      std::cout << "H_" << fixed6(lambda) << "(BI) = " << fixed6(h_bi) << "\n";
      std::cout << "D_" << fixed6(lambda) << "(BI || " << baseline.spec << ") = " << fixed6(d_bi)
                << "\n";
    }
  }
  if (json) std::cout << out.dump() << "\n";
  return kExitOk;
}

int run_exact(const std::string& path, double lambda, const BaselineChoice& baseline,
              bool has_eta, double eta, bool json, int threads,
              const faircore::exact::EnumerationCaps& caps) {
  const auto inst = faircore::io::load_instance(path);
  warn_if_not_monotone(inst);
  const OrderParameter order(lambda);
  const auto game = inst.as_explicit();
  const auto q = baseline.resolve(inst);

  const auto covers = faircore::exact::enumerate_covers(game, caps, threads);
  const auto extremal = faircore::exact::extremal_covers(game, covers);
  const auto fair = faircore::exact::fairness_over(covers, q, order);

  ordered_json out;
  out["instance"] = inst.source;
  out["lambda"] = lambda;
  out["baseline"] = baseline.spec;
  out["covers"] = covers.size();
  out["extremal"] = extremal.size();
  out["fair"] = fair.value;
  {
    ordered_json arg = ordered_json::array();
    for (const auto& c : fair.argmax_covers) arg.push_back(cover_json(c));
    out["argmax"] = std::move(arg);
  }
  if (!json) {
    std::cout << "covers: " << covers.size() << "\n";
    std::cout << "extremal: " << extremal.size() << "\n";
    std::cout << "Fair_" << fixed6(lambda) << "(" << baseline.spec << ") = " << fixed6(fair.value)
              << "\n";
    std::cout << "argmax covers:";
    for (const auto& c : fair.argmax_covers) std::cout << " " << cover_str(c);
    std::cout << "\n";
  }
  if (has_eta) {
    const bool yes = fair.value >= eta - 1e-9;
    out["eta"] = eta;
    out["decision"] = yes;
    if (!json) {
      std::cout << "decision Fair >= " << fixed6(eta) << ": " << (yes ? "YES" : "NO") << "\n";
    }
  }
  if (json) std::cout << out.dump() << "\n";
  return kExitOk;
}

int run_verify(const std::string& path, bool random_mode, const faircore::io::GeneratorConfig& gen,
               int count, const std::vector<double>& grid, int trials, bool json,
               const faircore::exact::EnumerationCaps& caps) {
  std::vector<faircore::io::Instance> instances;
  if (random_mode) {
    // Oversized draws are reseeded deterministically so the verification
    // batch always fits the brute-force caps.
    for (int k = 0; k < count; ++k) {
      faircore::io::GeneratorConfig cfg = gen;
      cfg.seed = gen.seed + static_cast<std::uint64_t>(k) * 1000;
      bool found = false;
      for (int attempt = 0; attempt < 1000 && !found; ++attempt, ++cfg.seed) {
        auto inst = faircore::io::generated_instance(cfg);
        if (inst.is_game->total_weight() <= caps.max_total &&
            inst.is_game->vertex_count() <= caps.max_players) {
          instances.push_back(std::move(inst));
          found = true;
        }
      }
      if (!found) {
        throw std::runtime_error("verify: cannot generate instances within caps; lower --wmax");
      }
    }
  } else {
    instances.push_back(faircore::io::load_instance(path));
    warn_if_not_monotone(instances.back());
  }

  bool all_pass = true;
  auto consume = [&](const faircore::bounds::AuditReport& report) {
    all_pass = all_pass && report.all_pass();
    if (json) {
      std::cout << faircore::bounds::to_json_lines(report);
      return;
    }
    for (const auto& line : report.lines) {
      std::cout << (line.pass ? "PASS" : "FAIL") << "  " << line.inequality
                << "  instance=" << line.instance << "  lambda=" << fixed6(line.lambda)
                << "  slack=" << fixed6(line.slack);
      if (!line.note.empty()) std::cout << "  (" << line.note << ")";
      std::cout << "\n";
    }
  };

  for (const auto& inst : instances) {
    const auto game = inst.as_explicit();
    for (double lambda : grid) {
      const OrderParameter order(lambda);
      consume(faircore::bounds::audit_reverse_greedy(game, order, caps, inst.source));
      if (inst.is_induced()) {
        consume(faircore::bounds::audit_is_game(*inst.is_game, order, caps, inst.source));
      }
    }
  }
  consume(faircore::bounds::audit_information_lemmas(gen.seed, trials));

  if (!json) std::cout << (all_pass ? "all inequalities hold" : "AUDIT FAILURE") << "\n";
  return all_pass ? kExitOk : kExitAuditFailure;
}

int run_gen(const faircore::io::GeneratorConfig& cfg) {
  std::cout << faircore::io::serialize_instance(faircore::io::generated_instance(cfg));
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"worst-case fairness toolkit for TU-cooperative games"};
  app.require_subcommand(1);

  std::string path;
  double lambda = 1.0;
  BaselineChoice baseline;
  bool json = false;
  int threads = 1;
  faircore::exact::EnumerationCaps caps;
  faircore::io::GeneratorConfig gen_cfg;
  double eta = 0.0;
  int count = 20;
  int trials = 200;
  std::vector<double> grid{0.5, 1.0, 2.0};

  auto add_common = [&](CLI::App* cmd, bool with_caps) {
    cmd->add_option("--lambda", lambda, "entropy/divergence order (> 0)");
    cmd->add_option("--baseline", baseline.spec, "uniform | shapley | path to weight file");
    cmd->add_flag("--json", json, "emit machine-readable JSON lines");
    if (with_caps) {
      cmd->add_option("--max-players", caps.max_players, "enumeration player cap");
      cmd->add_option("--max-total", caps.max_total, "enumeration v(N) cap");
    }
  };

  auto* analyze = app.add_subcommand("analyze", "greedy/biased covers and their measures");
  analyze->add_option("path", path, "instance file")->required();
  add_common(analyze, false);

  auto* exact_cmd = app.add_subcommand("exact", "brute-force covers, extremal set, fairness");
  exact_cmd->add_option("path", path, "instance file")->required();
  add_common(exact_cmd, true);
  exact_cmd->add_option("--threads", threads, "parallel enumeration workers");
  auto* eta_opt = exact_cmd->add_option("--eta", eta, "decide Fair >= eta");

  auto* verify = app.add_subcommand("verify", "audit every proved inequality");
  verify->add_option("path", path, "instance file");
  auto* random_flag = verify->add_flag("--random", "audit generated instances instead of a file");
  verify->add_option("--n", gen_cfg.vertex_count, "generator: vertex count");
  verify->add_option("--p", gen_cfg.edge_prob, "generator: edge probability");
  verify->add_option("--wmax", gen_cfg.max_weight, "generator: maximum edge weight");
  verify->add_option("--seed", gen_cfg.seed, "generator: seed");
  verify->add_option("--count", count, "generator: number of instances");
  verify->add_option("--grid", grid, "lambda grid")->delimiter(',');
  verify->add_option("--trials", trials, "random trials for the information lemmas");
  add_common(verify, true);

  auto* gen = app.add_subcommand("gen", "emit a random instance on stdout");
  gen->add_option("--n", gen_cfg.vertex_count, "vertex count");
  gen->add_option("--p", gen_cfg.edge_prob, "edge probability");
  gen->add_option("--wmax", gen_cfg.max_weight, "maximum edge weight");
  gen->add_option("--seed", gen_cfg.seed, "seed");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitInputError;
  }

  try {
    if (app.got_subcommand(analyze)) return run_analyze(path, lambda, baseline, json);
    if (app.got_subcommand(exact_cmd)) {
      return run_exact(path, lambda, baseline, eta_opt->count() > 0, eta, json, threads, caps);
    }
    if (app.got_subcommand(verify)) {
      if (random_flag->count() == 0 && path.empty()) {
        std::cerr << "error: verify needs an instance file or --random\n";
        return kExitInputError;
      }
      if (random_flag->count() > 0 && !path.empty()) {
        std::cerr << "error: verify takes either an instance file or --random, not both\n";
        return kExitInputError;
      }
      return run_verify(path, random_flag->count() > 0, gen_cfg, count, grid, trials, json, caps);
    }
    if (app.got_subcommand(gen)) return run_gen(gen_cfg);
  } catch (const faircore::exact::CapsExceededError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitCapsExceeded;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInputError;
  }
  return kExitInputError;
}
