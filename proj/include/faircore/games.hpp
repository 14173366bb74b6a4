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

#include <bit>
#include <cstdint>
#include <vector>

#include "faircore/rational.hpp"

namespace faircore::games {

/// Coalition as a bitmask; player i is bit i. Explicit tables support up
/// to 16 players.
using Mask = std::uint32_t;
using Money = long long;

/// Integer allocation vector, one entry per player.
using Cover = std::vector<Money>;

inline constexpr int kMaxExplicitPlayers = 16;
inline constexpr int kMaxShapleyPlayers = 12;

constexpr Mask full_mask(int n) { return (Mask{1} << n) - 1; }
constexpr bool mask_contains(Mask s, int i) { return (s >> i) & 1u; }
constexpr Mask mask_with(Mask s, int i) { return s | (Mask{1} << i); }
constexpr Mask mask_without(Mask s, int i) { return s & ~(Mask{1} << i); }
inline int mask_size(Mask s) { return std::popcount(s); }

/// TU game given by its full value table, indexed by coalition mask.
/// Values are nonnegative integers with v(empty) = 0. Monotonicity is
/// checked at construction but a violation only clears is_monotone().
class ExplicitGame {
 public:
  ExplicitGame(int player_count, std::vector<Money> values);

  int player_count() const { return n_; }
  Mask grand_coalition() const { return full_mask(n_); }
  Money value(Mask s) const { return values_[s]; }
  Money grand_value() const { return values_[grand_coalition()]; }
  const std::vector<Money>& values() const { return values_; }
  bool is_monotone() const { return monotone_; }

  friend bool operator==(const ExplicitGame& a, const ExplicitGame& b) {
    return a.n_ == b.n_ && a.values_ == b.values_;
  }

 private:
  int n_;
  std::vector<Money> values_;
  bool monotone_;
};

struct WeightedEdge {
  int u = 0;
  int v = 0;
  Money weight = 0;

  friend bool operator==(const WeightedEdge&, const WeightedEdge&) = default;
};

/// Induced-subgraph game: players are vertices, a coalition is worth the
/// total weight of edges with both endpoints inside it. The graph must be
/// loopless without duplicate edges, weights nonnegative, and every vertex
/// must have a strictly positive adjacent weight sum.
class ISGame {
 public:
  ISGame(int vertex_count, std::vector<WeightedEdge> edges);

  int vertex_count() const { return n_; }
  const std::vector<WeightedEdge>& edges() const { return edges_; }
  /// v(i): weight sum over edges adjacent to vertex i.
  Money vertex_weight(int i) const { return vertex_weight_[i]; }
  /// W: total edge weight; equals the grand coalition value.
  Money total_weight() const { return total_weight_; }
  Money coalition_value(Mask s) const;

  friend bool operator==(const ISGame& a, const ISGame& b) {
    return a.n_ == b.n_ && a.edges_ == b.edges_;
  }

 private:
  int n_;
  std::vector<WeightedEdge> edges_;
  std::vector<Money> vertex_weight_;
  Money total_weight_;
};

inline Money coalition_value(const ExplicitGame& g, Mask s) { return g.value(s); }
inline Money coalition_value(const ISGame& g, Mask s) { return g.coalition_value(s); }

/// Expands an IS game into its full value table (vertex count <= 16).
ExplicitGame to_explicit(const ISGame& g);

/// Dual game v*(S) = v(N) - v(N \ S). An involution; the dual of a
/// supermodular game is submodular and both share the same core.
ExplicitGame dual_game(const ExplicitGame& g);

struct SupermodularityCheck {
  bool supermodular = true;
  Mask witness_s = 0;  // violating pair, valid when !supermodular
  Mask witness_t = 0;
};

/// Tests v(S u T) + v(S n T) >= v(S) + v(T) for all pairs, via the
/// equivalent pairwise marginal condition. Returns one violating pair.
SupermodularityCheck check_supermodular(const ExplicitGame& g);

struct CoverCheck {
  bool valid = false;
  bool sum_matches = false;        // sum of entries == v(N)
  std::vector<Mask> violated;      // proper coalitions S with x(S) < v(S)
};

/// A cover allocates exactly v(N) and gives every proper coalition at
/// least its own value.
CoverCheck check_cover(const ExplicitGame& g, const Cover& c);

/// v(N) - v(N \ {j}): the largest payoff player j can receive in the core.
Money utopia_payoff(const ExplicitGame& g, int j);

/// Exact Shapley values via the subset-sum formula (player count <= 12).
std::vector<Rational> shapley_general(const ExplicitGame& g);

/// Shapley value of an IS game: half of each vertex's adjacent weight sum.
std::vector<Rational> shapley_is(const ISGame& g);

}  // namespace faircore::games
