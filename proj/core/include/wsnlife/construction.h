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

// Lifetime construction for fixed sink locations.
//
// ConstructCH plans sensor coverage for the whole horizon first, then fixes
// connectivity and sink assignments period by period, then routes. ConstructDH
// completes each period (coverage, budget, connectivity, pruning, routing)
// before moving to the next one. Both stop at the first period they cannot
// make feasible, so the returned lifetime may be anything from 0 to T.

#ifndef WSNLIFE_CONSTRUCTION_H_
#define WSNLIFE_CONSTRUCTION_H_

#include <functional>
#include <iosfwd>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "wsnlife/instance.h"
#include "wsnlife/solution.h"

namespace wsnlife {

enum class Engine { kCH, kDH };

std::string_view EngineName(Engine engine);
Engine ParseEngine(std::string_view name);

struct ConstructionOptions {
  // When set, period t starts from the activity of period t - 1 (after the
  // energy screening) instead of from an empty schedule.
  bool carry_over_activity = false;
  // Receives one JSON object per line describing every activation,
  // deployment, deletion, deactivation and truncation.
  std::function<void(const std::string&)> trace;
};

// Writes trace records to a stream, one per line.
std::function<void(const std::string&)> JsonLinesTrace(std::ostream& out);

// Solution under construction plus the bookkeeping the repair steps need:
// the unspent budget and, per sensor, how many scheduled periods use it.
class PartialSolution {
 public:
  // Deploys the given sinks and charges their cost. Throws
  // std::invalid_argument on duplicate or out-of-range nodes.
  PartialSolution(const Instance& instance, std::span<const NodeId> sinks);

  const Instance& instance() const { return *instance_; }
  const Solution& solution() const { return solution_; }
  Solution&& Release() && { return std::move(solution_); }

  double budget_left() const { return budget_left_; }
  int lifetime() const { return solution_.lifetime(); }
  const std::vector<NodeId>& sinks() const { return sinks_; }

  bool deployed(int sensor) const;
  bool active(int sensor, int t) const;
  // True when the sensor is not active in any period of the schedule.
  bool idle(int sensor) const { return active_periods_[sensor] == 0; }

  void Deploy(int sensor);  // charges c_{jk}
  void Remove(int sensor);  // refunds c_{jk}; sensor must be idle
  void SetActive(int sensor, int t, bool on);
  void SetAssignments(int t, std::vector<Assignment> assignments);
  void SetFlows(int t, std::vector<SensorFlow> sensor_flows,
                std::vector<SinkFlow> sink_flows);

  // L = t - 1: switches off periods t..T and clears their activity,
  // assignments and flows.
  void Truncate(int t);

 private:
  const Instance* instance_;
  Solution solution_;
  std::vector<NodeId> sinks_;
  double budget_left_ = 0.0;
  std::vector<int> active_periods_;
};

struct GreedyScores {
  std::vector<int> undercoverage;       // U_i, indexed [i - 1]
  std::vector<int> underconnectivity;   // UC_il, by sensor index
  std::vector<char> unlabeled;          // active but no route to any sink
  std::vector<double> cep;
  std::vector<double> ccr;
  std::vector<double> coep;
  std::vector<double> cocr;
};

// Scores of period t. `remaining` is E^rem_t by sensor index. Energy
// sufficiency is not applied here; the repair loops filter on it.
GreedyScores ComputeGreedyScores(const Instance& instance,
                                 const PartialSolution& partial, int t,
                                 std::span<const double> remaining);

// E^rem >= e^s + zeta (e^r + e^c) for a period with `active_count` active
// sensors, i.e. the sensor can relay the largest possible throughput.
bool HasEnergyReserve(const Instance& instance, int sensor, double remaining,
                      int active_count);

// Coverage and budget repair of every period 1..L against a planning ledger
// that charges each active sensor its full reserve per period. Returns the
// resulting lifetime; `planned` receives the unreserved energy left over.
int RepairCoverageBudget(const Instance& instance, PartialSolution& partial,
                         std::vector<double>& planned,
                         const ConstructionOptions& options = {});

// Connectivity and sink assignment for period t. Returns false (after
// truncating to L = t - 1) when the period cannot be connected.
bool RepairConnectivityAssignment(const Instance& instance, int t,
                                  PartialSolution& partial,
                                  std::span<const double> remaining,
                                  const ConstructionOptions& options = {});

// Deactivates active sensors of period t, most expensive first, whenever
// coverage, alpha-connectivity and a route to some sink survive without
// them. Assignments are recomputed. Returns the number deactivated.
int DeactivateUnnecessary(const Instance& instance, int t,
                          PartialSolution& partial,
                          const ConstructionOptions& options = {});

Solution ConstructCH(const Instance& instance, std::span<const NodeId> sinks,
                     const ConstructionOptions& options = {});
Solution ConstructDH(const Instance& instance, std::span<const NodeId> sinks,
                     const ConstructionOptions& options = {});
Solution Construct(Engine engine, const Instance& instance,
                   std::span<const NodeId> sinks,
                   const ConstructionOptions& options = {});

}  // namespace wsnlife

#endif  // WSNLIFE_CONSTRUCTION_H_
