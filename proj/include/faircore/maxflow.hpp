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

#include <optional>
#include <vector>

namespace faircore::flow {

/// Integer max-flow on a small network, BFS augmenting paths. Sized for the
/// desk-scale transportation instances the packing constants need.
class MaxFlowNetwork {
 public:
  explicit MaxFlowNetwork(int node_count);

  /// Adds a directed arc and its zero-capacity reverse; returns the arc id.
  int add_edge(int from, int to, long long capacity);

  long long max_flow(int source, int sink);

  /// Flow currently routed through the arc with the given id.
  long long flow_on(int edge_id) const;

 private:
  struct Arc {
    int to;
    long long capacity;
  };

  std::vector<Arc> arcs_;
  std::vector<std::vector<int>> adjacency_;
  std::vector<long long> original_capacity_;
};

struct BoundedArc {
  int from = 0;
  int to = 0;
  long long lower = 0;
  long long upper = 0;
};

/// Finds an integer source->sink flow respecting per-arc [lower, upper]
/// bounds, via the standard circulation transformation. Returns the flow on
/// each arc (in input order) or nullopt when infeasible.
std::optional<std::vector<long long>> feasible_flow(int node_count, int source, int sink,
                                                    const std::vector<BoundedArc>& arcs);

}  // namespace faircore::flow
