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

#include "wsnlife/experiments.h"

#include <time.h>

#include <algorithm>
#include <atomic>
#include <cctype>
#include <charconv>
#include <numeric>
#include <ostream>
#include <random>
#include <stdexcept>
#include <string>
#include <thread>

#include "wsnlife/construction.h"
#include "wsnlife/validator.h"

namespace wsnlife {
namespace {

double ThreadCpuSeconds() {
  timespec ts;
  clock_gettime(CLOCK_THREAD_CPUTIME_ID, &ts);
  return static_cast<double>(ts.tv_sec) + 1e-9 * static_cast<double>(ts.tv_nsec);
}

std::string Shortest(double value) {
  char buffer[64];
  auto [end, ec] = std::to_chars(buffer, buffer + sizeof(buffer), value);
  return ec == std::errc() ? std::string(buffer, end) : std::to_string(value);
}

std::string Fixed(double value) {
  char buffer[64];
  auto [end, ec] = std::to_chars(buffer, buffer + sizeof(buffer), value,
                                 std::chars_format::fixed, 4);
  return ec == std::errc() ? std::string(buffer, end) : std::to_string(value);
}

void RunCell(const BenchmarkGrid& grid, BenchmarkCell& cell) {
  GeneratorConfig config = grid.base;
  config.nodes = cell.nodes;
  config.sink_count = cell.sinks;
  config.budget = cell.budget;
  config.energy = cell.energy;
  for (std::uint64_t seed : grid.seeds) {
    const Instance instance = BuildInstance(config, seed);
    const double start = ThreadCpuSeconds();
    const Solution solution =
        RunAlgorithm(cell.algorithm, instance, seed, grid);
    const double cpu = ThreadCpuSeconds() - start;
    const ValidationReport report = Validate(instance, solution);
    if (!report.feasible()) {
      const Violation& v = report.violations.front();
      cell.error = "seed " + std::to_string(seed) + ": " +
                   std::to_string(report.violations.size()) +
                   " violations, first " + v.family + ": " + v.detail;
      cell.runs.clear();
      return;
    }
    cell.runs.push_back({seed, solution.lifetime(), cpu});
  }
  if (cell.runs.empty()) return;
  double lifetime = 0.0;
  double cpu = 0.0;
  for (const SeedRun& run : cell.runs) {
    lifetime += run.lifetime;
    cpu += run.cpu_seconds;
  }
  cell.mean_lifetime = lifetime / cell.runs.size();
  cell.mean_cpu_seconds = cpu / cell.runs.size();
}

}  // namespace

std::string_view AlgorithmName(Algorithm algorithm) {
  switch (algorithm) {
    case Algorithm::kCH:
      return "CH";
    case Algorithm::kDH:
      return "DH";
    case Algorithm::kLS:
      return "LS";
    case Algorithm::kTS:
      return "TS";
  }
  return "?";
}

Algorithm ParseAlgorithm(std::string_view name) {
  std::string upper(name);
  for (char& c : upper) c = static_cast<char>(std::toupper(c));
  for (Algorithm a :
       {Algorithm::kCH, Algorithm::kDH, Algorithm::kLS, Algorithm::kTS}) {
    if (upper == AlgorithmName(a)) return a;
  }
  throw std::invalid_argument("unknown algorithm '" + std::string(name) + "'");
}

std::vector<NodeId> RandomSinks(const Instance& instance, std::uint64_t seed) {
  std::vector<NodeId> nodes(instance.node_count());
  std::iota(nodes.begin(), nodes.end(), 1);
  std::mt19937_64 rng(seed * 7919);
  std::shuffle(nodes.begin(), nodes.end(), rng);
  nodes.resize(std::min<std::size_t>(nodes.size(), instance.sink_count()));
  std::sort(nodes.begin(), nodes.end());
  return nodes;
}

Solution RunAlgorithm(Algorithm algorithm, const Instance& instance,
                      std::uint64_t seed, const BenchmarkGrid& grid) {
  switch (algorithm) {
    case Algorithm::kCH:
      return ConstructCH(instance, RandomSinks(instance, seed),
                         grid.construction);
    case Algorithm::kDH:
      return ConstructDH(instance, RandomSinks(instance, seed),
                         grid.construction);
    case Algorithm::kLS: {
      SearchConfig config = grid.local_search;
      config.seed = seed;
      return LocalSearch(instance, config).solution;
    }
    case Algorithm::kTS: {
      SearchConfig config = grid.tabu_search;
      config.seed = seed;
      return TabuSearch(instance, config).solution;
    }
  }
  throw std::logic_error("unhandled algorithm");
}

std::vector<BenchmarkCell> RunBenchmark(const BenchmarkGrid& grid) {
  std::vector<BenchmarkCell> cells;
  for (Algorithm algorithm : grid.algorithms) {
    for (int sinks : grid.sink_counts) {
      for (Level budget : grid.budgets) {
        for (Level energy : grid.energies) {
          for (int nodes : grid.node_counts) {
            BenchmarkCell cell;
            cell.algorithm = algorithm;
            cell.sinks = sinks;
            cell.budget = budget;
            cell.energy = energy;
            cell.nodes = nodes;
            cells.push_back(cell);
          }
        }
      }
    }
  }
  int workers = grid.workers > 0
                    ? grid.workers
                    : static_cast<int>(std::thread::hardware_concurrency());
  workers = std::clamp(workers, 1, std::max(1, static_cast<int>(cells.size())));

  std::atomic<std::size_t> next{0};
  auto work = [&] {
    for (std::size_t i = next++; i < cells.size(); i = next++) {
      try {
        RunCell(grid, cells[i]);
      } catch (const std::exception& e) {
        cells[i].runs.clear();
        cells[i].error = e.what();
      }
    }
  };
  if (workers == 1) {
    work();
  } else {
    std::vector<std::thread> threads;
    for (int w = 0; w < workers; ++w) threads.emplace_back(work);
    for (std::thread& t : threads) t.join();
  }
  return cells;
}

void WriteBenchmarkCsv(std::ostream& out,
                       std::span<const BenchmarkCell> cells,
                       bool record_timing) {
  out << "algorithm,S,budget_level,energy_level,N,seed,L,cpu_seconds\n";
  for (const BenchmarkCell& cell : cells) {
    const std::string prefix =
        std::string(AlgorithmName(cell.algorithm)) + ',' +
        std::to_string(cell.sinks) + ',' + std::string(LevelName(cell.budget)) +
        ',' + std::string(LevelName(cell.energy)) + ',' +
        std::to_string(cell.nodes) + ',';
    if (!cell.ok()) {
      out << prefix << "error,,\n";
      continue;
    }
    for (const SeedRun& run : cell.runs) {
      out << prefix << run.seed << ',' << run.lifetime << ','
          << (record_timing ? Fixed(run.cpu_seconds) : "") << '\n';
    }
    if (cell.runs.empty()) continue;
    out << prefix << "mean," << Shortest(cell.mean_lifetime) << ','
        << (record_timing ? Fixed(cell.mean_cpu_seconds) : "") << '\n';
  }
}

Instance BuildTinyInstance(std::uint64_t seed) {
  std::mt19937_64 rng(seed ^ 0x9e3779b97f4a7c15ULL);
  auto uniform = [&](double lo, double hi) {
    return std::uniform_real_distribution<double>(lo, hi)(rng);
  };
  GeneratorConfig config;
  config.nodes = 4;
  config.horizon = 3;
  config.sink_count = 1 + static_cast<int>(rng() % 2);
  config.coverage_requirement = 1 + static_cast<int>(rng() % 2);
  config.energy = Level::kHigh;
  for (std::size_t k = 1; k < config.types.size(); ++k) {
    SensorType& type = config.types[k];
    type.initial_energy = type.sense_energy * uniform(1.05, 2.4);
  }
  Instance base = BuildInstance(config, seed);
  // Every sink placement is affordable; sensors get a random share of their
  // total cost so some deployments are out of reach.
  std::vector<double> sink_costs;
  for (NodeId j = 1; j <= base.node_count(); ++j) {
    sink_costs.push_back(base.cost(j, kSinkKind));
  }
  std::sort(sink_costs.rbegin(), sink_costs.rend());
  double budget = std::accumulate(
      sink_costs.begin(), sink_costs.begin() + base.sink_count(), 0.0);
  double sensors = 0.0;
  for (int s = 0; s < base.sensor_count(); ++s) sensors += base.sensor_cost(s);
  budget += sensors * uniform(0.15, 0.6);
  return base.WithBudget(budget);
}

}  // namespace wsnlife
