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

#include <cstdint>
#include <vector>

#include "benchmark/benchmark.h"
#include "wsnlife/construction.h"
#include "wsnlife/experiments.h"
#include "wsnlife/instance.h"
#include "wsnlife/milp_export.h"
#include "wsnlife/routing.h"
#include "wsnlife/search.h"
#include "wsnlife/solution.h"

namespace wsnlife {
namespace {

Instance MakeInstance(int nodes, Level energy) {
  GeneratorConfig config;
  config.nodes = nodes;
  config.energy = energy;
  return BuildInstance(config, 1);
}

void BM_ConstructCH(benchmark::State& state) {
  const Instance instance =
      MakeInstance(static_cast<int>(state.range(0)), Level::kLow);
  const std::vector<NodeId> sinks = RandomSinks(instance, 1);
  for (auto _ : state) {
    benchmark::DoNotOptimize(ConstructCH(instance, sinks));
  }
}
BENCHMARK(BM_ConstructCH)->Arg(16)->Arg(49)->Unit(benchmark::kMillisecond);

void BM_ConstructDH(benchmark::State& state) {
  const Instance instance =
      MakeInstance(static_cast<int>(state.range(0)), Level::kLow);
  const std::vector<NodeId> sinks = RandomSinks(instance, 1);
  for (auto _ : state) {
    benchmark::DoNotOptimize(ConstructDH(instance, sinks));
  }
}
BENCHMARK(BM_ConstructDH)->Arg(16)->Arg(49)->Arg(100)->Unit(benchmark::kMillisecond);

// One routing subproblem taken from the first period of a DH schedule.
void BM_SolveRoutingProblem(benchmark::State& state) {
  const Instance instance =
      MakeInstance(static_cast<int>(state.range(0)), Level::kHigh);
  const Solution solution = ConstructDH(instance, RandomSinks(instance, 1));
  const EnergyLedger ledger(instance);
  const PeriodState period = MakePeriodState(instance, solution, 1, ledger.row(1));
  for (auto _ : state) {
    benchmark::DoNotOptimize(SolveRoutingProblem(instance, period));
  }
  state.counters["active"] = static_cast<double>(period.active.size());
}
BENCHMARK(BM_SolveRoutingProblem)->Arg(16)->Arg(49)->Arg(100);

void BM_LocalSearchIteration(benchmark::State& state) {
  const Instance instance = MakeInstance(16, Level::kLow);
  SearchConfig config = LocalSearchDefaults();
  config.iteration_limit = 1;
  for (auto _ : state) {
    benchmark::DoNotOptimize(LocalSearch(instance, config));
  }
}
BENCHMARK(BM_LocalSearchIteration)->Unit(benchmark::kMillisecond);

void BM_ExportModel(benchmark::State& state) {
  const Instance instance = BuildTinyInstance(1);
  for (auto _ : state) {
    benchmark::DoNotOptimize(ExportModel(instance));
  }
}
BENCHMARK(BM_ExportModel)->Unit(benchmark::kMicrosecond);

}  // namespace
}  // namespace wsnlife

BENCHMARK_MAIN();
