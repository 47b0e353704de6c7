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

// Per-period routing subproblem: given the active sensors, their sink
// assignments and remaining batteries, find data flows of minimum total
// energy from every active sensor to its assigned sink.

#ifndef WSNLIFE_ROUTING_H_
#define WSNLIFE_ROUTING_H_

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "wsnlife/instance.h"
#include "wsnlife/solution.h"

namespace wsnlife {

struct PeriodState {
  int period = 1;
  std::vector<int> active;            // sensor indices
  std::vector<NodeId> assigned_sink;  // parallel to `active`
  std::vector<NodeId> sinks;
  std::vector<double> remaining_energy;  // E^rem, indexed by sensor index
};

// Slices period t of a solution. Throws std::invalid_argument when an active
// sensor has no (or more than one) assignment.
PeriodState MakePeriodState(const Instance& instance, const Solution& solution,
                            int t, const std::vector<double>& remaining);

struct RoutingResult {
  bool feasible = true;
  SensorId stranded;       // set when !feasible
  std::string diagnostic;  // set when !feasible
  std::vector<SensorFlow> sensor_flows;
  std::vector<SinkFlow> sink_flows;
  std::vector<double> consumption;  // epsilon_{jk}, indexed by sensor index
  double objective = 0.0;           // sum of consumption
};

// Solves each sink's commodity separately. A shortest-path tree towards the
// sink is optimal whenever it respects the relay capacities
// floor((E^rem - e^s - e^c h) / (e^r + e^c)); otherwise a min-cost flow on
// the node-split graph is solved.
RoutingResult SolveRoutingProblem(const Instance& instance,
                                  const PeriodState& state);

// E^rem_{t+1} = E^rem_t - epsilon^t. Throws std::logic_error when an entry
// would go negative.
void UpdateEnergy(EnergyLedger& ledger, int t, const RoutingResult& result);

// zeta_t = active_count * max h.
std::int64_t MaxOutflowBound(int active_count, const Instance& instance);

// Debug dump: one block per sink commodity, one "from -> to packets" line per
// positive flow.
void WriteFlowGraphs(std::ostream& out, const Instance& instance,
                     const PeriodState& state, const RoutingResult& result);

}  // namespace wsnlife

#endif  // WSNLIFE_ROUTING_H_
