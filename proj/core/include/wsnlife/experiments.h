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

#ifndef WSNLIFE_EXPERIMENTS_H_
#define WSNLIFE_EXPERIMENTS_H_

#include <cstdint>
#include <iosfwd>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "wsnlife/instance.h"
#include "wsnlife/search.h"
#include "wsnlife/solution.h"

namespace wsnlife {

enum class Algorithm { kCH, kDH, kLS, kTS };

std::string_view AlgorithmName(Algorithm algorithm);  // "CH", "DH", ...
Algorithm ParseAlgorithm(std::string_view name);      // case-insensitive

struct BenchmarkGrid {
  std::vector<Algorithm> algorithms = {Algorithm::kCH, Algorithm::kDH};
  std::vector<int> sink_counts = {2, 3};
  std::vector<Level> budgets = {Level::kLow, Level::kMedium, Level::kHigh};
  std::vector<Level> energies = {Level::kLow, Level::kMedium, Level::kHigh};
  std::vector<int> node_counts = {16, 25, 36, 49};
  std::vector<std::uint64_t> seeds = {1, 2, 3, 4, 5, 6, 7, 8, 9, 10};
  GeneratorConfig base;  // nodes, sinks and levels are overridden per cell
  SearchConfig local_search = LocalSearchDefaults();
  SearchConfig tabu_search = TabuSearchDefaults();
  ConstructionOptions construction;
  // When false the cpu_seconds column is left empty so reports are
  // byte-identical across runs.
  bool record_timing = true;
  // 0 picks std::thread::hardware_concurrency().
  int workers = 0;
};

struct SeedRun {
  std::uint64_t seed = 0;
  int lifetime = 0;
  double cpu_seconds = 0.0;
};

struct BenchmarkCell {
  Algorithm algorithm = Algorithm::kDH;
  int sinks = 2;
  Level budget = Level::kLow;
  Level energy = Level::kLow;
  int nodes = 16;
  std::vector<SeedRun> runs;
  double mean_lifetime = 0.0;
  double mean_cpu_seconds = 0.0;
  // Non-empty when a run failed validation; the cell has no means then.
  std::string error;

  bool ok() const { return error.empty(); }
};

// Deterministic sink placement used by CH and DH cells.
std::vector<NodeId> RandomSinks(const Instance& instance, std::uint64_t seed);

// Runs one algorithm on one instance. CH and DH use RandomSinks; LS and TS
// take their configuration from the grid with the seed substituted.
Solution RunAlgorithm(Algorithm algorithm, const Instance& instance,
                      std::uint64_t seed, const BenchmarkGrid& grid);

// Cells in canonical order: algorithm, S, budget, energy, N.
std::vector<BenchmarkCell> RunBenchmark(const BenchmarkGrid& grid);

// Long format, one row per seed followed by a "mean" row per cell.
void WriteBenchmarkCsv(std::ostream& out,
                       std::span<const BenchmarkCell> cells,
                       bool record_timing);

// Random instance on a 2x2 grid with three periods and batteries
// lasting one to three periods, small enough for the exhaustive oracle.
Instance BuildTinyInstance(std::uint64_t seed);

}  // namespace wsnlife

#endif  // WSNLIFE_EXPERIMENTS_H_
