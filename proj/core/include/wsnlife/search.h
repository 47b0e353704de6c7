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

#ifndef WSNLIFE_SEARCH_H_
#define WSNLIFE_SEARCH_H_

#include <cstdint>
#include <functional>
#include <iosfwd>
#include <span>
#include <vector>

#include "wsnlife/construction.h"
#include "wsnlife/instance.h"
#include "wsnlife/solution.h"

namespace wsnlife {

// Sink-location search on top of a fixed-sink construction engine.
struct SearchConfig {
  int iteration_limit = 100;
  int no_improvement_limit = 20;
  int tabu_tenure = 10;
  // Percentage of the s-swap neighbourhood sampled per iteration, indexed by
  // s - 1. Swap sizes beyond the list reuse the last entry.
  std::vector<double> scan_percent = {20.0, 40.0, 40.0};
  double time_limit_seconds = 3600.0;
  Engine engine = Engine::kDH;
  std::uint64_t seed = 1;
  ConstructionOptions construction;
};

SearchConfig LocalSearchDefaults();
SearchConfig TabuSearchDefaults();

// Throws std::invalid_argument when a field is out of range.
void CheckSearchConfig(const SearchConfig& config);

struct SinkVector {
  std::vector<NodeId> nodes;  // sorted ascending
  double cost = 0.0;

  friend bool operator==(const SinkVector& a, const SinkVector& b) {
    return a.nodes == b.nodes;
  }
};

SinkVector MakeSinkVector(const Instance& instance, std::vector<NodeId> nodes);

// The S cheapest sink positions, ties broken by node index.
SinkVector CheapestSinks(const Instance& instance);

// p(j) = sum_{i != j} c_i / ((N - 1) sum_i c_i). Throws for fewer than two
// nodes or a non-positive total.
std::vector<double> SinkSamplingDistribution(std::span<const double> costs);

// C(N - S, s) * C(S, s).
std::int64_t NeighborhoodSize(int nodes, int sinks, int swap_size);

// max(1, ceil(size * percent / 100)).
std::int64_t TrialCount(std::int64_t neighborhood_size, double percent);

struct SearchLogEntry {
  int iteration = 0;  // 0 for the starting vector
  int swap_size = 0;
  std::vector<NodeId> candidate;
  int lifetime = 0;
  bool accepted = false;
};

struct SearchResult {
  Solution solution;
  SinkVector sinks;
  int iterations = 0;
  int evaluations = 0;  // construction runs, cache hits excluded
  bool time_limit_reached = false;
  std::vector<SearchLogEntry> log;
};

SearchResult LocalSearch(const Instance& instance, const SearchConfig& config);
SearchResult TabuSearch(const Instance& instance, const SearchConfig& config);

void WriteSearchLogCsv(std::ostream& out,
                       std::span<const SearchLogEntry> entries);

}  // namespace wsnlife

#endif  // WSNLIFE_SEARCH_H_
