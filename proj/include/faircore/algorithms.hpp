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

#include <vector>

#include "faircore/games.hpp"

namespace faircore::alg {

using games::Cover;
using games::ExplicitGame;
using games::ISGame;
using games::Mask;
using games::Money;

/// Assignment of every edge (by index into ISGame::edges()) to one of its
/// endpoints.
struct Orientation {
  std::vector<int> head;
};

/// Ordered record of one greedy run: chosen players i_1..i_l, their
/// positive increments, and the shrinking coalition chain
/// A_0 = N, A_r = A_{r-1} \ {i_r}.
struct GreedyTrace {
  std::vector<int> order;
  std::vector<Money> deltas;
  std::vector<Mask> sets;  // length stages() + 1, sets[0] = N

  int stages() const { return static_cast<int>(order.size()); }
};

/// Impact coefficients a_r^j, an l x n table of nonnegative integers with
/// a_r^{i_r} = delta_r.
struct ImpactMatrix {
  int stages = 0;
  int players = 0;
  std::vector<Money> entries;  // row-major

  Money at(int r, int j) const { return entries[static_cast<std::size_t>(r) * players + j]; }
};

/// Stage-by-player split Z_r^j of a cover X: column sums recover X and
/// every entry is capped by the matching impact coefficient.
struct ZDecomposition {
  int stages = 0;
  int players = 0;
  std::vector<Money> entries;  // row-major
  Cover cover;

  Money at(int r, int j) const { return entries[static_cast<std::size_t>(r) * players + j]; }
  Money stage_total(int r) const;
};

struct ReverseGreedyResult {
  Cover cover;
  GreedyTrace trace;
};

/// Repeatedly grants the player with the largest marginal contribution to
/// the remaining coalition that amount, then removes the player; stops when
/// no marginal is positive. Ties break to the lowest player index; players
/// never selected receive 0.
ReverseGreedyResult reverse_greedy(const ExplicitGame& g);

struct GreedyOrientationResult {
  Orientation orientation;
  GreedyTrace trace;
};

/// Repeatedly orients all remaining edges toward the vertex with the
/// largest remaining adjacent weight (lowest index on ties) and deletes it.
/// Produces the same cover and trace as reverse_greedy on the explicit form.
GreedyOrientationResult greedy_orientation(const ISGame& g);

/// Orients each edge toward the endpoint with the larger adjacent weight
/// sum; ties go to the lower-index endpoint.
Orientation biased_orientation(const ISGame& g);

/// Pays each vertex the total weight of edges oriented toward it.
Cover cover_of_orientation(const ISGame& g, const Orientation& o);

/// a_r^j = [f(A_{r-1}) - f(A_r)] - [f(A_{r-1} \ j) - f(A_r \ j)].
/// The trace must come from reverse_greedy on the same game.
ImpactMatrix impact_matrix(const ExplicitGame& g, const GreedyTrace& t);

/// Replays the greedy stages against a reference orientation: an edge the
/// greedy orients toward i_r books its weight on Z_r^{i_r} when the
/// reference agrees and on Z_r^j otherwise. Stage totals equal delta_r.
ZDecomposition z_decomposition(const ISGame& g, const Orientation& reference,
                               const GreedyOrientationResult& rg);

/// Throws unless the trace is a valid reverse-greedy record for g
/// (consistent chain, positive increments that match the value table).
void validate_trace(const ExplicitGame& g, const GreedyTrace& t);

}  // namespace faircore::alg
