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

// Successive-shortest-path minimum cost flow with Johnson potentials.
// Integral capacities and non-negative integral arc costs.

#ifndef WSNLIFE_MIN_COST_FLOW_H_
#define WSNLIFE_MIN_COST_FLOW_H_

#include <cstdint>
#include <limits>
#include <vector>

namespace wsnlife {

class MinCostFlow {
 public:
  static constexpr std::int64_t kInfiniteCapacity =
      std::numeric_limits<std::int64_t>::max() / 4;

  explicit MinCostFlow(int node_count);

  // Returns the arc id used by flow().
  int AddArc(int from, int to, std::int64_t capacity, std::int64_t cost);

  struct Result {
    std::int64_t flow = 0;
    std::int64_t cost = 0;
  };

  // Sends up to `limit` units from source to sink at minimum cost. Arc costs
  // must be non-negative.
  Result Solve(int source, int sink,
               std::int64_t limit = kInfiniteCapacity);

  std::int64_t flow(int arc) const { return arcs_[2 * arc].flow; }
  int node_count() const { return static_cast<int>(adjacency_.size()); }

 private:
  struct Arc {
    int to;
    std::int64_t capacity;
    std::int64_t flow;
    std::int64_t cost;
  };

  std::vector<Arc> arcs_;  // arc 2i is forward, 2i + 1 its residual twin
  std::vector<std::vector<int>> adjacency_;
};

}  // namespace wsnlife

#endif  // WSNLIFE_MIN_COST_FLOW_H_
