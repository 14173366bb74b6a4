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

#include "faircore/maxflow.hpp"

#include <algorithm>
#include <limits>
#include <queue>
#include <stdexcept>

namespace faircore::flow {

MaxFlowNetwork::MaxFlowNetwork(int node_count) : adjacency_(node_count) {}

int MaxFlowNetwork::add_edge(int from, int to, long long capacity) {
  if (capacity < 0) throw std::invalid_argument("add_edge: negative capacity");
  const int id = static_cast<int>(arcs_.size());
  arcs_.push_back({to, capacity});
  arcs_.push_back({from, 0});
  adjacency_[from].push_back(id);
  adjacency_[to].push_back(id + 1);
  original_capacity_.push_back(capacity);
  return id;
}

long long MaxFlowNetwork::max_flow(int source, int sink) {
  long long total = 0;
  const int n = static_cast<int>(adjacency_.size());
  std::vector<int> parent_arc(n);
  while (true) {
    std::fill(parent_arc.begin(), parent_arc.end(), -1);
    parent_arc[source] = -2;
    std::queue<int> frontier;
    frontier.push(source);
    while (!frontier.empty() && parent_arc[sink] == -1) {
      const int u = frontier.front();
      frontier.pop();
      for (int id : adjacency_[u]) {
        if (arcs_[id].capacity > 0 && parent_arc[arcs_[id].to] == -1) {
          parent_arc[arcs_[id].to] = id;
          frontier.push(arcs_[id].to);
        }
      }
    }
    if (parent_arc[sink] == -1) break;
    long long push = std::numeric_limits<long long>::max();
    for (int v = sink; v != source;) {
      const int id = parent_arc[v];
      push = std::min(push, arcs_[id].capacity);
      v = arcs_[id ^ 1].to;
    }
    for (int v = sink; v != source;) {
      const int id = parent_arc[v];
      arcs_[id].capacity -= push;
      arcs_[id ^ 1].capacity += push;
      v = arcs_[id ^ 1].to;
    }
    total += push;
  }
  return total;
}

long long MaxFlowNetwork::flow_on(int edge_id) const {
  return original_capacity_[edge_id / 2] - arcs_[edge_id].capacity;
}

std::optional<std::vector<long long>> feasible_flow(int node_count, int source, int sink,
                                                    const std::vector<BoundedArc>& arcs) {
  // Circulation reduction: close the flow with a sink->source arc, shift
  // lower bounds into node excesses, and saturate them from a super pair.
  const int super_source = node_count;
  const int super_sink = node_count + 1;
  MaxFlowNetwork net(node_count + 2);
  std::vector<long long> excess(node_count, 0);
  std::vector<int> arc_ids(arcs.size());
  long long upper_total = 0;
  for (std::size_t i = 0; i < arcs.size(); ++i) {
    const auto& a = arcs[i];
    if (a.lower < 0 || a.lower > a.upper) {
      throw std::invalid_argument("feasible_flow: bad bounds");
    }
    arc_ids[i] = net.add_edge(a.from, a.to, a.upper - a.lower);
    excess[a.to] += a.lower;
    excess[a.from] -= a.lower;
    upper_total += a.upper;
  }
  net.add_edge(sink, source, upper_total);
  long long required = 0;
  for (int v = 0; v < node_count; ++v) {
    if (excess[v] > 0) {
      net.add_edge(super_source, v, excess[v]);
      required += excess[v];
    } else if (excess[v] < 0) {
      net.add_edge(v, super_sink, -excess[v]);
    }
  }
  if (net.max_flow(super_source, super_sink) != required) return std::nullopt;
  std::vector<long long> result(arcs.size());
  for (std::size_t i = 0; i < arcs.size(); ++i) {
    result[i] = arcs[i].lower + net.flow_on(arc_ids[i]);
  }
  return result;
}

}  // namespace faircore::flow
