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

#include "faircore/exact.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <limits>
#include <string>
#include <thread>

#include "faircore/maxflow.hpp"

namespace faircore::exact {

namespace {

using games::Mask;
using games::mask_without;

constexpr double kTieTolerance = 1e-9;

/// Subset sums of the candidate vector, checked against the value table.
/// Scratch buffer avoids reallocation across the many leaf checks.
bool passes_core(const ExplicitGame& g, const Cover& x, std::vector<Money>& scratch) {
  const Mask all = g.grand_coalition();
  scratch[0] = 0;
  for (Mask s = 1; s <= all; ++s) {
    const Mask low = s & (~s + 1);
    scratch[s] = scratch[s ^ low] + x[std::countr_zero(low)];
    if (s == all) break;
  }
  if (scratch[all] != g.grand_value()) return false;
  for (Mask s = 1; s < all; ++s) {
    if (scratch[s] < g.value(s)) return false;
  }
  return true;
}

struct EnumerationContext {
  const ExplicitGame& game;
  std::vector<Money> utopia;
  std::vector<Money> suffix_utopia;  // suffix_utopia[j] = sum_{k >= j} utopia[k]
};

void enumerate_from(const EnumerationContext& ctx, int player, Money remaining,
                    std::vector<Money>& partial, std::vector<Money>& scratch,
                    std::vector<Cover>& out) {
  const int n = ctx.game.player_count();
  if (player == n) {
    if (remaining == 0 && passes_core(ctx.game, partial, scratch)) out.push_back(partial);
    return;
  }
  // Everything assigned so far is final, so the prefix coalition must
  // already cover its own value.
  const Mask prefix = games::full_mask(player);
  if (player > 0 && ctx.game.grand_value() - remaining < ctx.game.value(prefix)) return;
  const Money hi = std::min(ctx.utopia[player], remaining);
  const Money lo = std::max<Money>(0, remaining - ctx.suffix_utopia[player + 1]);
  for (Money v = lo; v <= hi; ++v) {
    partial[player] = v;
    enumerate_from(ctx, player + 1, remaining - v, partial, scratch, out);
  }
  partial[player] = 0;
}

EnumerationContext make_context(const ExplicitGame& g) {
  const int n = g.player_count();
  EnumerationContext ctx{g, std::vector<Money>(n), std::vector<Money>(n + 1, 0)};
  for (int j = 0; j < n; ++j) ctx.utopia[j] = games::utopia_payoff(g, j);
  for (int j = n - 1; j >= 0; --j) ctx.suffix_utopia[j] = ctx.suffix_utopia[j + 1] + ctx.utopia[j];
  return ctx;
}

}  // namespace

std::vector<Cover> enumerate_covers(const ExplicitGame& g, const EnumerationCaps& caps,
                                    int threads) {
  const int n = g.player_count();
  if (n > caps.max_players) {
    throw CapsExceededError("enumerate_covers: " + std::to_string(n) + " players exceeds cap " +
                            std::to_string(caps.max_players) + " (raise --max-players)");
  }
  if (g.grand_value() > caps.max_total) {
    throw CapsExceededError("enumerate_covers: v(N) = " + std::to_string(g.grand_value()) +
                            " exceeds cap " + std::to_string(caps.max_total) +
                            " (raise --max-total)");
  }
  const EnumerationContext ctx = make_context(g);
  const Money total = g.grand_value();
  const Money hi0 = std::min(ctx.utopia[0], total);
  const Money lo0 = std::max<Money>(0, total - ctx.suffix_utopia[1]);

  auto run_chunk = [&](Money from, Money to, std::vector<Cover>& out) {
    std::vector<Money> partial(n, 0);
    std::vector<Money> scratch(std::size_t{1} << n, 0);
    for (Money v = from; v <= to; ++v) {
      partial[0] = v;
      enumerate_from(ctx, 1, total - v, partial, scratch, out);
    }
  };

  if (threads <= 1 || hi0 < lo0 || n == 1) {
    std::vector<Cover> covers;
    if (n == 1) {
      std::vector<Money> scratch(2, 0);
      Cover only{total};
      if (passes_core(g, only, scratch)) covers.push_back(only);
      return covers;
    }
    run_chunk(lo0, hi0, covers);
    return covers;
  }

  // Partition the first player's range; chunk order keeps the merged
  // output identical to the sequential enumeration.
  const Money span = hi0 - lo0 + 1;
  const int workers = static_cast<int>(std::min<Money>(threads, span));
  std::vector<std::vector<Cover>> results(workers);
  std::vector<std::thread> pool;
  pool.reserve(workers);
  for (int w = 0; w < workers; ++w) {
    const Money from = lo0 + span * w / workers;
    const Money to = lo0 + span * (w + 1) / workers - 1;
    pool.emplace_back(run_chunk, from, to, std::ref(results[w]));
  }
  for (auto& t : pool) t.join();
  std::vector<Cover> covers;
  for (auto& part : results) {
    covers.insert(covers.end(), part.begin(), part.end());
  }
  return covers;
}

namespace {

/// Rank of an integer matrix by fraction-free elimination.
int integer_rank(std::vector<std::vector<long long>> rows, int cols) {
  int rank = 0;
  for (int col = 0; col < cols && rank < static_cast<int>(rows.size()); ++col) {
    int pivot = -1;
    for (int r = rank; r < static_cast<int>(rows.size()); ++r) {
      if (rows[r][col] != 0) {
        pivot = r;
        break;
      }
    }
    if (pivot < 0) continue;
    std::swap(rows[rank], rows[pivot]);
    for (int r = rank + 1; r < static_cast<int>(rows.size()); ++r) {
      if (rows[r][col] == 0) continue;
      const long long a = rows[rank][col];
      const long long b = rows[r][col];
      for (int c = col; c < cols; ++c) {
        rows[r][c] = rows[r][c] * a - rows[rank][c] * b;
      }
    }
    ++rank;
  }
  return rank;
}

}  // namespace

std::vector<Cover> extremal_covers(const ExplicitGame& g, const std::vector<Cover>& covers) {
  const int n = g.player_count();
  const Mask all = g.grand_coalition();
  std::vector<Cover> extremal;
  std::vector<Money> subset_sum(std::size_t{1} << n, 0);
  for (const Cover& x : covers) {
    for (Mask s = 1; s <= all; ++s) {
      const Mask low = s & (~s + 1);
      subset_sum[s] = subset_sum[s ^ low] + x[std::countr_zero(low)];
      if (s == all) break;
    }
    std::vector<std::vector<long long>> tight;
    tight.push_back(std::vector<long long>(n, 1));  // grand-coalition equality
    for (Mask s = 1; s < all; ++s) {
      if (subset_sum[s] != g.value(s)) continue;
      std::vector<long long> row(n, 0);
      for (int i = 0; i < n; ++i) row[i] = games::mask_contains(s, i) ? 1 : 0;
      tight.push_back(std::move(row));
    }
    if (integer_rank(std::move(tight), n) == n) extremal.push_back(x);
  }
  return extremal;
}

double cover_entropy(const Cover& c, OrderParameter order) {
  return info::renyi_entropy(info::normalize(c), order);
}

MinEntropyCovers min_entropy_over(const std::vector<Cover>& covers, OrderParameter order) {
  if (covers.empty()) throw std::invalid_argument("min_entropy_over: no covers");
  MinEntropyCovers result;
  std::vector<double> entropies(covers.size());
  double best = std::numeric_limits<double>::infinity();
  for (std::size_t i = 0; i < covers.size(); ++i) {
    entropies[i] = cover_entropy(covers[i], order);
    best = std::min(best, entropies[i]);
  }
  result.entropy = best;
  for (std::size_t i = 0; i < covers.size(); ++i) {
    if (entropies[i] <= best + kTieTolerance) result.argmin.push_back(covers[i]);
  }
  return result;
}

MinEntropyCovers min_entropy_cover(const ExplicitGame& g, OrderParameter order,
                                   const EnumerationCaps& caps, int threads) {
  return min_entropy_over(enumerate_covers(g, caps, threads), order);
}

MinEntropyOrientations min_entropy_orientation(const ISGame& g, OrderParameter order) {
  const auto& edges = g.edges();
  const int m = static_cast<int>(edges.size());
  if (m > 20) {
    throw CapsExceededError("min_entropy_orientation: more than 20 edges (2^|E| search)");
  }
  MinEntropyOrientations result;
  result.entropy = std::numeric_limits<double>::infinity();
  Cover cover(g.vertex_count(), 0);
  auto induced_entropy = [&](std::uint32_t bits) {
    std::fill(cover.begin(), cover.end(), 0);
    for (int e = 0; e < m; ++e) {
      cover[(bits >> e) & 1u ? edges[e].v : edges[e].u] += edges[e].weight;
    }
    return cover_entropy(cover, order);
  };
  const std::uint32_t count = std::uint32_t{1} << m;
  for (std::uint32_t bits = 0; bits < count; ++bits) {
    result.entropy = std::min(result.entropy, induced_entropy(bits));
  }
  for (std::uint32_t bits = 0; bits < count; ++bits) {
    if (induced_entropy(bits) > result.entropy + kTieTolerance) continue;
    alg::Orientation o;
    o.head.resize(m);
    for (int e = 0; e < m; ++e) o.head[e] = (bits >> e) & 1u ? edges[e].v : edges[e].u;
    result.argmin.push_back(std::move(o));
  }
  return result;
}

FairnessResult fairness_over(const std::vector<Cover>& covers, const Distribution& baseline,
                             OrderParameter order) {
  if (covers.empty()) throw std::invalid_argument("fairness_over: no covers");
  std::vector<double> divergences(covers.size());
  double best = -std::numeric_limits<double>::infinity();
  for (std::size_t i = 0; i < covers.size(); ++i) {
    divergences[i] = info::renyi_divergence(info::normalize(covers[i]), baseline, order);
    best = std::max(best, divergences[i]);
  }
  FairnessResult result{best, {}, order.value(), baseline};
  for (std::size_t i = 0; i < covers.size(); ++i) {
    if (divergences[i] >= best - kTieTolerance) result.argmax_covers.push_back(covers[i]);
  }
  return result;
}

FairnessResult worst_case_fairness(const ExplicitGame& g, const Distribution& baseline,
                                   OrderParameter order, const EnumerationCaps& caps,
                                   int threads) {
  if (static_cast<int>(baseline.size()) != g.player_count()) {
    throw std::invalid_argument("worst_case_fairness: baseline dimension mismatch");
  }
  if (!baseline.full_support()) {
    throw std::invalid_argument("worst_case_fairness: baseline must have full support");
  }
  return fairness_over(enumerate_covers(g, caps, threads), baseline, order);
}

bool decide_fairness(const ExplicitGame& g, const Distribution& baseline, OrderParameter order,
                     double eta, const EnumerationCaps& caps) {
  return worst_case_fairness(g, baseline, order, caps).value >= eta - 1e-9;
}

namespace {

struct TransportProblem {
  const alg::ImpactMatrix& impact;
  const Cover& target;  // column sums X_j
  const std::vector<Money>& deltas;
};

/// Stage totals capped (alpha side) or floored (beta side) by c * delta_r,
/// column sums fixed to X_j, cells capped by a_r^j. Returns the split when
/// one exists.
std::optional<std::vector<Money>> solve_transport(const TransportProblem& p,
                                                  const Rational& ratio, bool cap_stages) {
  const int l = p.impact.stages;
  const int n = p.impact.players;
  const int source = 0;
  const int sink = 1 + l + n;
  std::vector<flow::BoundedArc> arcs;
  std::vector<int> cell_arc(static_cast<std::size_t>(l) * n, -1);
  for (int r = 0; r < l; ++r) {
    // floor/ceil of ratio * delta_r in exact integer arithmetic
    const __int128 scaled = static_cast<__int128>(ratio.num()) * p.deltas[r];
    Money stage_bound;
    Money row_cap = 0;
    for (int j = 0; j < n; ++j) row_cap += p.impact.at(r, j);
    if (cap_stages) {
      stage_bound = static_cast<Money>(scaled / ratio.den());
      arcs.push_back({source, 1 + r, 0, stage_bound});
    } else {
      stage_bound = static_cast<Money>((scaled + ratio.den() - 1) / ratio.den());
      if (stage_bound > row_cap) return std::nullopt;
      arcs.push_back({source, 1 + r, stage_bound, row_cap});
    }
    for (int j = 0; j < n; ++j) {
      const Money cap = p.impact.at(r, j);
      if (cap == 0) continue;
      cell_arc[static_cast<std::size_t>(r) * n + j] = static_cast<int>(arcs.size());
      arcs.push_back({1 + r, 1 + l + j, 0, cap});
    }
  }
  for (int j = 0; j < n; ++j) {
    arcs.push_back({1 + l + j, sink, p.target[j], p.target[j]});
  }
  auto flows = flow::feasible_flow(sink + 1, source, sink, arcs);
  if (!flows) return std::nullopt;
  std::vector<Money> z(static_cast<std::size_t>(l) * n, 0);
  for (int r = 0; r < l; ++r) {
    for (int j = 0; j < n; ++j) {
      const int id = cell_arc[static_cast<std::size_t>(r) * n + j];
      if (id >= 0) z[static_cast<std::size_t>(r) * n + j] = (*flows)[id];
    }
  }
  return z;
}

alg::ZDecomposition make_witness(const alg::ImpactMatrix& impact, const Cover& x,
                                 std::vector<Money> entries) {
  alg::ZDecomposition z;
  z.stages = impact.stages;
  z.players = impact.players;
  z.entries = std::move(entries);
  z.cover = x;
  return z;
}

}  // namespace

PackingConstants packing_constants(const ExplicitGame& g, const Cover& x,
                                   const alg::GreedyTrace& trace) {
  if (!games::check_cover(g, x).valid) {
    throw std::invalid_argument("packing_constants: x is not a cover");
  }
  alg::validate_trace(g, trace);
  const alg::ImpactMatrix impact = alg::impact_matrix(g, trace);
  const TransportProblem problem{impact, x, trace.deltas};

  std::vector<Rational> candidates;
  for (Money delta : trace.deltas) {
    for (Money k = 0; k <= g.grand_value(); ++k) candidates.emplace_back(k, delta);
  }
  std::sort(candidates.begin(), candidates.end());
  candidates.erase(std::unique(candidates.begin(), candidates.end()), candidates.end());

  // alpha: smallest candidate whose stage caps still admit a split.
  int lo = 0;
  int hi = static_cast<int>(candidates.size()) - 1;
  if (!solve_transport(problem, candidates[hi], /*cap_stages=*/true)) {
    throw std::logic_error("packing_constants: infeasible at the maximal cap");
  }
  while (lo < hi) {
    const int mid = lo + (hi - lo) / 2;
    if (solve_transport(problem, candidates[mid], true)) {
      hi = mid;
    } else {
      lo = mid + 1;
    }
  }
  PackingConstants result;
  result.alpha = candidates[lo];
  result.alpha_witness = make_witness(impact, x, *solve_transport(problem, candidates[lo], true));

  // beta: largest candidate whose stage floors still admit a split.
  lo = 0;
  hi = static_cast<int>(candidates.size()) - 1;
  while (lo < hi) {
    const int mid = lo + (hi - lo + 1) / 2;
    if (solve_transport(problem, candidates[mid], false)) {
      lo = mid;
    } else {
      hi = mid - 1;
    }
  }
  result.beta = candidates[lo];
  result.beta_witness = make_witness(impact, x, *solve_transport(problem, candidates[lo], false));
  return result;
}

}  // namespace faircore::exact
