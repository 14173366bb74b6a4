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

#include "faircore/algorithms.hpp"

#include <cassert>
#include <stdexcept>

namespace faircore::alg {

Money ZDecomposition::stage_total(int r) const {
  Money total = 0;
  for (int j = 0; j < players; ++j) total += at(r, j);
  return total;
}

ReverseGreedyResult reverse_greedy(const ExplicitGame& g) {
  assert(games::check_supermodular(g).supermodular);
  const int n = g.player_count();
  ReverseGreedyResult result;
  result.cover.assign(n, 0);
  Mask remaining = g.grand_coalition();
  result.trace.sets.push_back(remaining);
  while (true) {
    int best = -1;
    Money best_gain = 0;
    for (int i = 0; i < n; ++i) {
      if (!games::mask_contains(remaining, i)) continue;
      const Money gain = g.value(remaining) - g.value(games::mask_without(remaining, i));
      if (gain > best_gain) {
        best_gain = gain;
        best = i;
      }
    }
    if (best < 0) break;
    result.cover[best] = best_gain;
    remaining = games::mask_without(remaining, best);
    result.trace.order.push_back(best);
    result.trace.deltas.push_back(best_gain);
    result.trace.sets.push_back(remaining);
  }
  return result;
}

GreedyOrientationResult greedy_orientation(const ISGame& g) {
  const int n = g.vertex_count();
  const auto& edges = g.edges();
  GreedyOrientationResult result;
  result.orientation.head.assign(edges.size(), -1);
  std::vector<Money> remaining_weight(n);
  for (int i = 0; i < n; ++i) remaining_weight[i] = g.vertex_weight(i);
  Mask remaining = games::full_mask(n);
  result.trace.sets.push_back(remaining);
  while (true) {
    int best = -1;
    Money best_weight = 0;
    for (int i = 0; i < n; ++i) {
      if (!games::mask_contains(remaining, i)) continue;
      if (remaining_weight[i] > best_weight) {
        best_weight = remaining_weight[i];
        best = i;
      }
    }
    if (best < 0) break;
    for (std::size_t e = 0; e < edges.size(); ++e) {
      if (result.orientation.head[e] >= 0) continue;
      if (edges[e].u == best || edges[e].v == best) {
        result.orientation.head[e] = best;
        const int other = edges[e].u == best ? edges[e].v : edges[e].u;
        remaining_weight[other] -= edges[e].weight;
      }
    }
    remaining = games::mask_without(remaining, best);
    result.trace.order.push_back(best);
    result.trace.deltas.push_back(best_weight);
    result.trace.sets.push_back(remaining);
  }
  // Only zero-weight edges between never-selected vertices can remain;
  // assign them to the lower endpoint, which leaves the cover unchanged.
  for (std::size_t e = 0; e < edges.size(); ++e) {
    if (result.orientation.head[e] < 0) {
      result.orientation.head[e] = std::min(edges[e].u, edges[e].v);
    }
  }
  return result;
}

Orientation biased_orientation(const ISGame& g) {
  const auto& edges = g.edges();
  Orientation o;
  o.head.resize(edges.size());
  for (std::size_t e = 0; e < edges.size(); ++e) {
    const int u = edges[e].u;
    const int v = edges[e].v;
    if (g.vertex_weight(u) > g.vertex_weight(v)) {
      o.head[e] = u;
    } else if (g.vertex_weight(v) > g.vertex_weight(u)) {
      o.head[e] = v;
    } else {
      o.head[e] = std::min(u, v);
    }
  }
  return o;
}

Cover cover_of_orientation(const ISGame& g, const Orientation& o) {
  const auto& edges = g.edges();
  if (o.head.size() != edges.size()) {
    throw std::invalid_argument("cover_of_orientation: orientation does not match edge list");
  }
  Cover cover(g.vertex_count(), 0);
  for (std::size_t e = 0; e < edges.size(); ++e) {
    if (o.head[e] != edges[e].u && o.head[e] != edges[e].v) {
      throw std::invalid_argument("cover_of_orientation: head is not an endpoint of its edge");
    }
    cover[o.head[e]] += edges[e].weight;
  }
  return cover;
}

void validate_trace(const ExplicitGame& g, const GreedyTrace& t) {
  if (t.sets.size() != t.order.size() + 1 || t.deltas.size() != t.order.size()) {
    throw std::invalid_argument("trace: inconsistent lengths");
  }
  if (t.sets.empty() || t.sets.front() != g.grand_coalition()) {
    throw std::invalid_argument("trace: chain must start at the grand coalition");
  }
  for (int r = 0; r < t.stages(); ++r) {
    const Mask before = t.sets[r];
    const Mask after = t.sets[r + 1];
    const int chosen = t.order[r];
    if (!games::mask_contains(before, chosen) || after != games::mask_without(before, chosen)) {
      throw std::invalid_argument("trace: chain does not remove the chosen player");
    }
    if (t.deltas[r] <= 0 || t.deltas[r] != g.value(before) - g.value(after)) {
      throw std::invalid_argument("trace: increment does not match the value table");
    }
  }
}

ImpactMatrix impact_matrix(const ExplicitGame& g, const GreedyTrace& t) {
  validate_trace(g, t);
  const int n = g.player_count();
  ImpactMatrix m;
  m.stages = t.stages();
  m.players = n;
  m.entries.assign(static_cast<std::size_t>(m.stages) * n, 0);
  for (int r = 0; r < m.stages; ++r) {
    const Mask before = t.sets[r];
    const Mask after = t.sets[r + 1];
    for (int j = 0; j < n; ++j) {
      const Money a = (g.value(before) - g.value(after)) -
                      (g.value(games::mask_without(before, j)) -
                       g.value(games::mask_without(after, j)));
      if (a < 0) {
        throw std::invalid_argument("impact_matrix: negative impact; game is not supermodular");
      }
      m.entries[static_cast<std::size_t>(r) * n + j] = a;
    }
  }
  return m;
}

ZDecomposition z_decomposition(const ISGame& g, const Orientation& reference,
                               const GreedyOrientationResult& rg) {
  const auto& edges = g.edges();
  if (reference.head.size() != edges.size() || rg.orientation.head.size() != edges.size()) {
    throw std::invalid_argument("z_decomposition: orientations do not match the graph");
  }
  const int n = g.vertex_count();
  ZDecomposition z;
  z.stages = rg.trace.stages();
  z.players = n;
  z.entries.assign(static_cast<std::size_t>(z.stages) * n, 0);
  z.cover = cover_of_orientation(g, reference);
  for (int r = 0; r < z.stages; ++r) {
    const int chosen = rg.trace.order[r];
    for (std::size_t e = 0; e < edges.size(); ++e) {
      if (rg.orientation.head[e] != chosen) continue;
      const int other = edges[e].u == chosen ? edges[e].v : edges[e].u;
      if (reference.head[e] == chosen) {
        z.entries[static_cast<std::size_t>(r) * n + chosen] += edges[e].weight;
      } else {
        z.entries[static_cast<std::size_t>(r) * n + other] += edges[e].weight;
      }
    }
  }
  return z;
}

}  // namespace faircore::alg
