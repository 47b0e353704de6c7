// Copyright 2026 The wsnlife Authors.
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

#include "wsnlife/min_cost_flow.h"

#include <algorithm>
#include <functional>
#include <queue>
#include <stdexcept>
#include <utility>

namespace wsnlife {

MinCostFlow::MinCostFlow(int node_count) : adjacency_(node_count) {}

int MinCostFlow::AddArc(int from, int to, std::int64_t capacity,
                        std::int64_t cost) {
  if (cost < 0) throw std::invalid_argument("arc costs must be non-negative");
  const int id = static_cast<int>(arcs_.size());
  arcs_.push_back({to, capacity, 0, cost});
  arcs_.push_back({from, 0, 0, -cost});
  adjacency_[from].push_back(id);
  adjacency_[to].push_back(id + 1);
  return id / 2;
}

MinCostFlow::Result MinCostFlow::Solve(int source, int sink,
                                       std::int64_t limit) {
  constexpr std::int64_t kUnreached = std::numeric_limits<std::int64_t>::max();
  const int n = node_count();
  std::vector<std::int64_t> potential(n, 0);
  std::vector<std::int64_t> dist(n);
  std::vector<int> via(n);
  Result result;
  using Entry = std::pair<std::int64_t, int>;
  while (result.flow < limit) {
    std::fill(dist.begin(), dist.end(), kUnreached);
    std::fill(via.begin(), via.end(), -1);
    std::priority_queue<Entry, std::vector<Entry>, std::greater<>> heap;
    dist[source] = 0;
    heap.push({0, source});
    while (!heap.empty()) {
      const auto [d, v] = heap.top();
      heap.pop();
      if (d != dist[v]) continue;
      for (int id : adjacency_[v]) {
        const Arc& arc = arcs_[id];
        if (arc.capacity - arc.flow <= 0) continue;
        const std::int64_t reduced = arc.cost + potential[v] - potential[arc.to];
        if (d + reduced < dist[arc.to]) {
          dist[arc.to] = d + reduced;
          via[arc.to] = id;
          heap.push({dist[arc.to], arc.to});
        }
      }
    }
    if (dist[sink] == kUnreached) break;
    for (int v = 0; v < n; ++v) {
      if (dist[v] != kUnreached) potential[v] += dist[v];
    }
    std::int64_t push = limit - result.flow;
    for (int v = sink; v != source; v = arcs_[via[v] ^ 1].to) {
      const Arc& arc = arcs_[via[v]];
      push = std::min(push, arc.capacity - arc.flow);
    }
    for (int v = sink; v != source; v = arcs_[via[v] ^ 1].to) {
      arcs_[via[v]].flow += push;
      arcs_[via[v] ^ 1].flow -= push;
      result.cost += push * arcs_[via[v]].cost;
    }
    result.flow += push;
  }
  return result;
}

}  // namespace wsnlife
