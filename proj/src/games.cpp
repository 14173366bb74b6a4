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

#include "faircore/games.hpp"

#include <algorithm>
#include <array>
#include <stdexcept>
#include <utility>

namespace faircore::games {

namespace {

bool table_is_monotone(int n, const std::vector<Money>& values) {
  const Mask all = full_mask(n);
  for (Mask s = 0; s <= all; ++s) {
    for (int i = 0; i < n; ++i) {
      if (!mask_contains(s, i)) continue;
      if (values[mask_without(s, i)] > values[s]) return false;
    }
    if (s == all) break;
  }
  return true;
}

}  // namespace

ExplicitGame::ExplicitGame(int player_count, std::vector<Money> values)
    : n_(player_count), values_(std::move(values)) {
  if (n_ < 1 || n_ > kMaxExplicitPlayers) {
    throw std::invalid_argument("ExplicitGame: player count must be in [1, 16]");
  }
  if (values_.size() != (std::size_t{1} << n_)) {
    throw std::invalid_argument("ExplicitGame: value table must have 2^n entries");
  }
  if (values_[0] != 0) throw std::invalid_argument("ExplicitGame: v(empty) must be 0");
  for (Money v : values_) {
    if (v < 0) throw std::invalid_argument("ExplicitGame: values must be nonnegative");
  }
  monotone_ = table_is_monotone(n_, values_);
}

ISGame::ISGame(int vertex_count, std::vector<WeightedEdge> edges)
    : n_(vertex_count), edges_(std::move(edges)), vertex_weight_(vertex_count, 0), total_weight_(0) {
  if (n_ < 1) throw std::invalid_argument("ISGame: vertex count must be positive");
  std::vector<std::pair<int, int>> seen;
  for (auto& e : edges_) {
    if (e.u < 0 || e.u >= n_ || e.v < 0 || e.v >= n_) {
      throw std::invalid_argument("ISGame: edge endpoint out of range");
    }
    if (e.u == e.v) throw std::invalid_argument("ISGame: loops are not allowed");
    if (e.weight < 0) throw std::invalid_argument("ISGame: edge weights must be nonnegative");
    const std::pair<int, int> key{std::min(e.u, e.v), std::max(e.u, e.v)};
    if (std::find(seen.begin(), seen.end(), key) != seen.end()) {
      throw std::invalid_argument("ISGame: duplicate edge");
    }
    seen.push_back(key);
    vertex_weight_[e.u] += e.weight;
    vertex_weight_[e.v] += e.weight;
    total_weight_ += e.weight;
  }
  for (int i = 0; i < n_; ++i) {
    if (vertex_weight_[i] <= 0) {
      throw std::invalid_argument("ISGame: every vertex needs a positive adjacent weight sum");
    }
  }
}

Money ISGame::coalition_value(Mask s) const {
  Money total = 0;
  for (const auto& e : edges_) {
    if (mask_contains(s, e.u) && mask_contains(s, e.v)) total += e.weight;
  }
  return total;
}

ExplicitGame to_explicit(const ISGame& g) {
  const int n = g.vertex_count();
  if (n > kMaxExplicitPlayers) {
    throw std::invalid_argument("to_explicit: more than 16 players");
  }
  std::vector<Money> values(std::size_t{1} << n, 0);
  for (const auto& e : g.edges()) {
    const Mask pair = mask_with(mask_with(0, e.u), e.v);
    for (Mask s = 0; s < values.size(); ++s) {
      if ((s & pair) == pair) values[s] += e.weight;
    }
  }
  return ExplicitGame(n, std::move(values));
}

ExplicitGame dual_game(const ExplicitGame& g) {
  const Mask all = g.grand_coalition();
  const Money grand = g.grand_value();
  std::vector<Money> values(std::size_t{1} << g.player_count());
  for (Mask s = 0; s <= all; ++s) {
    values[s] = grand - g.value(all & ~s);
    if (s == all) break;
  }
  return ExplicitGame(g.player_count(), std::move(values));
}

SupermodularityCheck check_supermodular(const ExplicitGame& g) {
  // v is supermodular iff the marginal of each player is nondecreasing in
  // the coalition, which reduces to checks over pairs (i, j) and sets S
  // avoiding both. A local violation yields the witness (S+i, S+j).
  const int n = g.player_count();
  const Mask all = full_mask(n);
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      const Mask ij = mask_with(mask_with(0, i), j);
      for (Mask s = 0; s <= all; ++s) {
        if (s & ij) continue;
        const Money lhs = g.value(s | ij) + g.value(s);
        const Money rhs = g.value(mask_with(s, i)) + g.value(mask_with(s, j));
        if (lhs < rhs) {
          return {false, mask_with(s, i), mask_with(s, j)};
        }
        if (s == all) break;
      }
    }
  }
  return {};
}

CoverCheck check_cover(const ExplicitGame& g, const Cover& c) {
  const int n = g.player_count();
  if (static_cast<int>(c.size()) != n) {
    throw std::invalid_argument("check_cover: one entry per player required");
  }
  const Mask all = full_mask(n);
  std::vector<Money> subset_sum(std::size_t{1} << n, 0);
  for (Mask s = 1; s <= all; ++s) {
    const Mask low = s & (~s + 1);
    subset_sum[s] = subset_sum[s ^ low] + c[std::countr_zero(low)];
    if (s == all) break;
  }
  CoverCheck result;
  result.sum_matches = subset_sum[all] == g.grand_value();
  for (Mask s = 1; s < all; ++s) {
    if (subset_sum[s] < g.value(s)) result.violated.push_back(s);
  }
  result.valid = result.sum_matches && result.violated.empty();
  return result;
}

Money utopia_payoff(const ExplicitGame& g, int j) {
  const Mask all = g.grand_coalition();
  return g.grand_value() - g.value(mask_without(all, j));
}

std::vector<Rational> shapley_general(const ExplicitGame& g) {
  const int n = g.player_count();
  if (n > kMaxShapleyPlayers) {
    throw std::invalid_argument("shapley_general: more than 12 players");
  }
  std::array<long long, kMaxShapleyPlayers + 1> factorial{};
  factorial[0] = 1;
  for (int k = 1; k <= n; ++k) factorial[k] = factorial[k - 1] * k;

  const Mask all = full_mask(n);
  std::vector<Rational> shapley(n);
  for (int j = 0; j < n; ++j) {
    // Group marginal contributions by |S| so each weight multiplies once.
    std::array<long long, kMaxShapleyPlayers> by_size{};
    for (Mask s = 0; s <= all; ++s) {
      if (!mask_contains(s, j)) {
        by_size[mask_size(s)] += g.value(mask_with(s, j)) - g.value(s);
      }
      if (s == all) break;
    }
    __int128 numerator = 0;
    for (int k = 0; k < n; ++k) {
      numerator += static_cast<__int128>(factorial[k]) * factorial[n - 1 - k] * by_size[k];
    }
    shapley[j] = Rational::from128(numerator, factorial[n]);
  }
  return shapley;
}

std::vector<Rational> shapley_is(const ISGame& g) {
  std::vector<Rational> shapley(g.vertex_count());
  for (int i = 0; i < g.vertex_count(); ++i) {
    shapley[i] = Rational(g.vertex_weight(i), 2);
  }
  return shapley;
}

}  // namespace faircore::games
