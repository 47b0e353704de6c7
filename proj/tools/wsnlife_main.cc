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

// Command-line front end: instance generation, solving, validation, model
// export, benchmarks and the exhaustive oracle.

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "wsnlife/construction.h"
#include "wsnlife/exhaustive_oracle.h"
#include "wsnlife/experiments.h"
#include "wsnlife/instance.h"
#include "wsnlife/milp_export.h"
#include "wsnlife/routing.h"
#include "wsnlife/search.h"
#include "wsnlife/serialization.h"
#include "wsnlife/validator.h"

namespace {

using namespace wsnlife;

// Writes to the file, or to stdout when the path is empty or "-".
void Emit(const std::string& path, const std::string& contents) {
  if (path.empty() || path == "-") {
    std::cout << contents;
  } else {
    WriteTextFile(path, contents);
  }
}

struct GenerateArgs {
  int nodes = 16;
  int sinks = 2;
  int horizon = 400;
  int alpha = 1;
  int coverage = 2;
  std::string energy = "low";
  std::string budget = "low";
  std::string sensing_metric = "euclidean";
  std::string comm_metric = "euclidean";
  std::uint64_t seed = 1;
  bool tiny = false;
  std::string out;
};

int RunGenerate(const GenerateArgs& a) {
  if (a.tiny) {
    Emit(a.out, InstanceToJson(BuildTinyInstance(a.seed)));
    return 0;
  }
  GeneratorConfig config;
  config.nodes = a.nodes;
  config.sink_count = a.sinks;
  config.horizon = a.horizon;
  config.alpha = a.alpha;
  config.coverage_requirement = a.coverage;
  config.energy = ParseLevel(a.energy);
  config.budget = ParseLevel(a.budget);
  config.sensing_metric = ParseMetric(a.sensing_metric);
  config.comm_metric = ParseMetric(a.comm_metric);
  Emit(a.out, InstanceToJson(BuildInstance(config, a.seed)));
  return 0;
}

struct SolveArgs {
  std::string instance;
  std::string algo = "dh";
  std::vector<int> sinks;
  std::uint64_t seed = 1;
  std::string engine = "dh";
  int iteration_limit = 100;
  int no_improvement = 20;
  int tabu_tenure = 10;
  std::vector<double> scan;
  double time_limit = 3600.0;
  bool carry_over = false;
  std::string trace;
  std::string search_log;
  std::string flows;
  std::string out;
};

int RunSolve(const SolveArgs& a) {
  const Instance instance = InstanceFromJson(ReadTextFile(a.instance));
  const Algorithm algorithm = ParseAlgorithm(a.algo);
  ConstructionOptions construction;
  construction.carry_over_activity = a.carry_over;
  std::ofstream trace_file;
  if (!a.trace.empty()) {
    trace_file.open(a.trace);
    if (!trace_file) throw std::runtime_error("cannot open " + a.trace);
    construction.trace = JsonLinesTrace(trace_file);
  }

  Solution solution;
  if (algorithm == Algorithm::kCH || algorithm == Algorithm::kDH) {
    const std::vector<NodeId> sinks =
        a.sinks.empty() ? RandomSinks(instance, a.seed) : a.sinks;
    solution = Construct(algorithm == Algorithm::kCH ? Engine::kCH : Engine::kDH,
                         instance, sinks, construction);
  } else {
    SearchConfig config = algorithm == Algorithm::kLS ? LocalSearchDefaults()
                                                      : TabuSearchDefaults();
    config.iteration_limit = a.iteration_limit;
    config.no_improvement_limit = a.no_improvement;
    config.tabu_tenure = a.tabu_tenure;
    if (!a.scan.empty()) config.scan_percent = a.scan;
    config.time_limit_seconds = a.time_limit;
    config.engine = ParseEngine(a.engine);
    config.seed = a.seed;
    config.construction = construction;
    SearchResult result = algorithm == Algorithm::kLS
                              ? LocalSearch(instance, config)
                              : TabuSearch(instance, config);
    if (!a.search_log.empty()) {
      std::ostringstream log;
      WriteSearchLogCsv(log, result.log);
      WriteTextFile(a.search_log, log.str());
    }
    solution = std::move(result.solution);
  }

  const ValidationReport report = Validate(instance, solution);
  if (!a.flows.empty()) {
    std::ostringstream flows;
    EnergyLedger ledger(instance);
    for (int t = 1; t <= solution.lifetime(); ++t) {
      PeriodState state = MakePeriodState(instance, solution, t, ledger.row(t));
      RoutingResult routing = SolveRoutingProblem(instance, state);
      WriteFlowGraphs(flows, instance, state, routing);
      UpdateEnergy(ledger, t, routing);
    }
    WriteTextFile(a.flows, flows.str());
  }
  Emit(a.out, SolutionToJson(solution));
  std::cerr << AlgorithmName(algorithm) << " L=" << solution.lifetime()
            << (report.feasible() ? " feasible\n" : " INFEASIBLE\n");
  if (!report.feasible()) std::cerr << report.Summary();
  return report.feasible() ? 0 : 1;
}

int RunValidate(const std::string& instance_path,
                const std::string& solution_path, bool json) {
  const Instance instance = InstanceFromJson(ReadTextFile(instance_path));
  const Solution solution = SolutionFromJson(ReadTextFile(solution_path));
  const ValidationReport report = Validate(instance, solution);
  if (json) {
    std::cout << ReportToJson(report) << '\n';
  } else if (report.feasible()) {
    std::cout << "feasible, L = " << solution.lifetime() << '\n';
  } else {
    std::cout << report.Summary();
  }
  return report.feasible() ? 0 : 1;
}

struct ExportArgs {
  std::string instance;
  std::vector<int> fix_sinks;
  std::int64_t row_cap = 200000;
  bool no_alpha_cut = false;
  std::string values_from;
  std::string out;
};

int RunExport(const ExportArgs& a) {
  const Instance instance = InstanceFromJson(ReadTextFile(a.instance));
  ExportOptions options;
  if (!a.fix_sinks.empty()) options.fixed_sinks = a.fix_sinks;
  options.row_cap = a.row_cap;
  options.alpha_outflow_cut = !a.no_alpha_cut;
  if (!a.values_from.empty()) {
    const MilpModel model = BuildMilpModel(instance, options);
    const Solution solution = SolutionFromJson(ReadTextFile(a.values_from));
    Emit(a.out, WriteSolutionValues(model,
                                    SolutionValues(model, instance, solution)));
    return 0;
  }
  const std::string path = a.out.empty() ? LpFileName(instance) : a.out;
  Emit(path, ExportModel(instance, options));
  if (path != "-") std::cerr << "wrote " << path << '\n';
  return 0;
}

int RunImport(const std::string& instance_path, const std::string& values,
              const std::string& out) {
  const Instance instance = InstanceFromJson(ReadTextFile(instance_path));
  const Solution solution = ImportSolution(ReadTextFile(values), instance);
  const ValidationReport report = Validate(instance, solution);
  Emit(out, SolutionToJson(solution));
  std::cerr << "imported L=" << solution.lifetime()
            << (report.feasible() ? " feasible\n" : " INFEASIBLE\n");
  if (!report.feasible()) std::cerr << report.Summary();
  return report.feasible() ? 0 : 1;
}

struct BenchArgs {
  std::vector<std::string> algos = {"ch", "dh"};
  std::vector<int> sinks = {2, 3};
  std::vector<std::string> budgets = {"low", "medium", "high"};
  std::vector<std::string> energies = {"low", "medium", "high"};
  std::vector<int> nodes = {16, 25, 36, 49};
  bool include_large = false;
  int seeds = 10;
  int first_seed = 1;
  int iteration_limit = 100;
  double time_limit = 3600.0;
  bool no_timing = false;
  int workers = 0;
  std::string out;
};

int RunBench(const BenchArgs& a) {
  BenchmarkGrid grid;
  grid.algorithms.clear();
  for (const std::string& s : a.algos) grid.algorithms.push_back(ParseAlgorithm(s));
  grid.sink_counts = a.sinks;
  grid.budgets.clear();
  for (const std::string& s : a.budgets) grid.budgets.push_back(ParseLevel(s));
  grid.energies.clear();
  for (const std::string& s : a.energies) grid.energies.push_back(ParseLevel(s));
  grid.node_counts = a.nodes;
  if (a.include_large) {
    for (int n : {64, 81, 100, 225}) grid.node_counts.push_back(n);
  }
  grid.seeds.clear();
  for (int i = 0; i < a.seeds; ++i) grid.seeds.push_back(a.first_seed + i);
  for (SearchConfig* c : {&grid.local_search, &grid.tabu_search}) {
    c->iteration_limit = a.iteration_limit;
    c->time_limit_seconds = a.time_limit;
  }
  grid.record_timing = !a.no_timing;
  grid.workers = a.workers;
  const std::vector<BenchmarkCell> cells = RunBenchmark(grid);
  std::ostringstream csv;
  WriteBenchmarkCsv(csv, cells, grid.record_timing);
  Emit(a.out, csv.str());
  int failed = 0;
  for (const BenchmarkCell& cell : cells) {
    if (cell.ok()) continue;
    ++failed;
    std::cerr << AlgorithmName(cell.algorithm) << " S=" << cell.sinks
              << " budget=" << LevelName(cell.budget)
              << " energy=" << LevelName(cell.energy) << " N=" << cell.nodes
              << ": " << cell.error << '\n';
  }
  return failed == 0 ? 0 : 1;
}

int RunOracle(const std::string& instance_path, const std::string& out) {
  const Instance instance = InstanceFromJson(ReadTextFile(instance_path));
  const OracleResult result = ExhaustiveOracle(instance);
  std::cerr << "optimal L=" << result.lifetime << " after "
            << result.routing_calls << " routing calls\n";
  if (result.witness) {
    Emit(out, SolutionToJson(*result.witness));
  } else {
    std::cerr << "no sink placement fits the budget\n";
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Lifetime maximization for heterogeneous wireless sensor networks"};
  app.require_subcommand(1);

  GenerateArgs gen;
  CLI::App* generate = app.add_subcommand("generate", "Generate a random instance");
  generate->add_option("--nodes,-n", gen.nodes, "Grid nodes (a perfect square)");
  generate->add_option("--sinks,-S", gen.sinks, "Number of sinks");
  generate->add_option("--horizon,-T", gen.horizon, "Number of periods");
  generate->add_option("--alpha", gen.alpha, "Connectivity requirement");
  generate->add_option("--coverage,-f", gen.coverage, "Coverage requirement per node");
  generate->add_option("--energy", gen.energy, "low, medium or high");
  generate->add_option("--budget", gen.budget, "low, medium or high");
  generate->add_option("--sensing-metric", gen.sensing_metric, "euclidean or chebyshev");
  generate->add_option("--comm-metric", gen.comm_metric, "euclidean or chebyshev");
  generate->add_option("--seed", gen.seed, "Random seed");
  generate->add_flag("--tiny", gen.tiny, "Oracle-sized instance (2x2 grid, T = 3)");
  generate->add_option("--out,-o", gen.out, "Output file (default stdout)");

  SolveArgs solve;
  CLI::App* solve_cmd = app.add_subcommand("solve", "Run CH, DH, LS or TS");
  solve_cmd->add_option("--instance,-i", solve.instance, "Instance JSON")->required();
  solve_cmd->add_option("--algo,-a", solve.algo, "ch, dh, ls or ts")
      ->check(CLI::IsMember({"ch", "dh", "ls", "ts", "CH", "DH", "LS", "TS"}));
  solve_cmd->add_option("--sinks", solve.sinks, "Fixed sink nodes for ch/dh (default: random from --seed)")
      ->delimiter(',');
  solve_cmd->add_option("--seed", solve.seed, "Random seed");
  solve_cmd->add_option("--engine", solve.engine, "Construction engine inside ls/ts: ch or dh");
  solve_cmd->add_option("--iter-limit", solve.iteration_limit, "Search iterations");
  solve_cmd->add_option("--no-improve", solve.no_improvement, "Consecutive non-improving iterations before stopping");
  solve_cmd->add_option("--tabu-tenure", solve.tabu_tenure, "Tabu list length");
  solve_cmd->add_option("--scan", solve.scan, "Scan percentage per swap size")
      ->delimiter(',');
  solve_cmd->add_option("--time-limit", solve.time_limit, "Wall-clock seconds for ls/ts");
  solve_cmd->add_flag("--carry-over", solve.carry_over, "Start each period from the previous activity");
  solve_cmd->add_option("--trace", solve.trace, "JSON-lines construction trace");
  solve_cmd->add_option("--search-log", solve.search_log, "CSV iteration log for ls/ts");
  solve_cmd->add_option("--flows", solve.flows, "Per-period flow graphs");
  solve_cmd->add_option("--out,-o", solve.out, "Solution JSON (default stdout)");

  std::string v_instance, v_solution;
  bool v_json = false;
  CLI::App* validate = app.add_subcommand("validate", "Check a solution; exit 0 iff feasible");
  validate->add_option("--instance,-i", v_instance, "Instance JSON")->required();
  validate->add_option("--solution,-s", v_solution, "Solution JSON")->required();
  validate->add_flag("--json", v_json, "Print the report as JSON");

  ExportArgs exp;
  CLI::App* export_cmd = app.add_subcommand("export-milp", "Write the mixed-integer model in LP format");
  export_cmd->add_option("--instance,-i", exp.instance, "Instance JSON")->required();
  export_cmd->add_option("--fix-sinks", exp.fix_sinks, "Pin the sink locations")
      ->delimiter(',');
  export_cmd->add_option("--row-cap", exp.row_cap, "Refuse models with more rows");
  export_cmd->add_flag("--no-alpha-cut", exp.no_alpha_cut, "Omit the outflow-path cut");
  export_cmd->add_option("--values-from", exp.values_from, "Write variable values of this solution instead of the model");
  export_cmd->add_option("--out,-o", exp.out, "Output path (default spsrc_N{n}_K{k}_T{t}.lp)");

  std::string i_instance, i_values, i_out;
  CLI::App* import_cmd = app.add_subcommand("import-milp", "Turn solver variable values into a solution");
  import_cmd->add_option("--instance,-i", i_instance, "Instance JSON")->required();
  import_cmd->add_option("--values", i_values, "Lines of 'name value'")->required();
  import_cmd->add_option("--out,-o", i_out, "Solution JSON (default stdout)");

  BenchArgs bench;
  CLI::App* bench_cmd = app.add_subcommand("bench", "Run the benchmark grid and print CSV");
  bench_cmd->add_option("--algos", bench.algos, "Subset of ch dh ls ts")
      ->delimiter(',');
  bench_cmd->add_option("--sinks", bench.sinks, "Sink counts")
      ->delimiter(',');
  bench_cmd->add_option("--budgets", bench.budgets, "Budget levels")
      ->delimiter(',');
  bench_cmd->add_option("--energies", bench.energies, "Energy levels")
      ->delimiter(',');
  bench_cmd->add_option("--nodes", bench.nodes, "Grid sizes")
      ->delimiter(',');
  bench_cmd->add_flag("--include-large", bench.include_large, "Add N = 64, 81, 100 and 225");
  bench_cmd->add_option("--seeds", bench.seeds, "Seeds per cell");
  bench_cmd->add_option("--first-seed", bench.first_seed, "First seed");
  bench_cmd->add_option("--iter-limit", bench.iteration_limit, "Search iterations for ls/ts");
  bench_cmd->add_option("--time-limit", bench.time_limit, "Wall-clock seconds per search run");
  bench_cmd->add_flag("--no-timing", bench.no_timing, "Leave cpu_seconds empty for reproducible output");
  bench_cmd->add_option("--workers", bench.workers, "Concurrent cells (0 = all cores)");
  bench_cmd->add_option("--out,-o", bench.out, "CSV file (default stdout)");

  std::string o_instance, o_out;
  CLI::App* oracle = app.add_subcommand("oracle", "Exact lifetime of a tiny instance");
  oracle->add_option("--instance,-i", o_instance, "Instance JSON")->required();
  oracle->add_option("--out,-o", o_out, "Witness solution JSON (default stdout)");

  CLI11_PARSE(app, argc, argv);

  try {
    if (generate->parsed()) return RunGenerate(gen);
    if (solve_cmd->parsed()) return RunSolve(solve);
    if (validate->parsed()) return RunValidate(v_instance, v_solution, v_json);
    if (export_cmd->parsed()) return RunExport(exp);
    if (import_cmd->parsed()) return RunImport(i_instance, i_values, i_out);
    if (bench_cmd->parsed()) return RunBench(bench);
    if (oracle->parsed()) return RunOracle(o_instance, o_out);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  }
  return 0;
}
