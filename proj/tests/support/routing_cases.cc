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

#include "routing_cases.h"

#include <algorithm>
#include <cmath>
#include <map>
#include <numeric>
#include <random>
#include <utility>
#include <vector>

#include "dense_lp.h"

namespace wsnlife::testing {
namespace {

bool Routable(const Instance& in, const PeriodState& state) {
  for (NodeId sink : state.sinks) {
    std::vector<int> group;
    for (std::size_t i = 0; i < state.active.size(); ++i) {
      if (state.assigned_sink[i] == sink) group.push_back(state.active[i]);
    }
    std::vector<char> done(group.size(), 0);
    for (bool grew = true; grew;) {
      grew = false;
      for (std::size_t a = 0; a < group.size(); ++a) {
        if (done[a]) continue;
        const SensorId id = in.sensor_at(group[a]);
        bool ok = in.reaches(id.node, id.kind, sink);
        for (std::size_t b = 0; b < group.size() && !ok; ++b) {
          ok = done[b] && in.reaches(id.node, id.kind,
                                     in.sensor_at(group[b]).node);
        }
        if (ok) done[a] = grew = true;
      }
    }
    if (std::count(done.begin(), done.end(), 0) > 0) return false;
  }
  return true;
}

}  // namespace

RoutingCase MakeRoutingCase(std::uint64_t seed, int max_active) {
  std::mt19937_64 rng(seed);
  GeneratorConfig config;
  config.nodes = seed % 2 == 0 ? 9 : 16;
  config.sink_count = 1 + static_cast<int>(rng() % 2);
  config.energy = Level::kHigh;
  Instance instance = BuildInstance(config, seed);

  std::vector<NodeId> nodes(instance.node_count());
  std::iota(nodes.begin(), nodes.end(), 1);
  std::shuffle(nodes.begin(), nodes.end(), rng);
  PeriodState state;
  state.sinks.assign(nodes.begin(), nodes.begin() + config.sink_count);
  std::sort(state.sinks.begin(), state.sinks.end());

  std::vector<int> sensors(instance.sensor_count());
  std::iota(sensors.begin(), sensors.end(), 0);
  while (true) {
    std::shuffle(sensors.begin(), sensors.end(), rng);
    const int count = 1 + static_cast<int>(rng() % max_active);
    state.active.assign(sensors.begin(), sensors.begin() + count);
    std::sort(state.active.begin(), state.active.end());
    state.assigned_sink.clear();
    for (int i = 0; i < count; ++i) {
      state.assigned_sink.push_back(state.sinks[rng() % state.sinks.size()]);
    }
    if (Routable(instance, state)) break;
  }

  state.remaining_energy.assign(instance.sensor_count(), 0.0);
  for (int s = 0; s < instance.sensor_count(); ++s) {
    const SensorType& type = instance.sensor_type(s);
    if (rng() % 2 == 0) {
      state.remaining_energy[s] = type.initial_energy;
    } else {
      // Integral relay headroom of 0..3h packets.
      const int packets =
          static_cast<int>(rng() % (3 * type.packets_per_period + 1));
      state.remaining_energy[s] =
          type.sense_energy + type.transmit_energy * type.packets_per_period +
          packets * (type.receive_energy + type.transmit_energy);
    }
  }
  return {std::move(instance), std::move(state)};
}

RoutingOracle SolveRoutingByLp(const Instance& in, const PeriodState& state) {
  const int m = static_cast<int>(state.active.size());
  // Arc list: (from, to) with to == -1 meaning the sender's sink.
  std::vector<std::pair<int, int>> arcs;
  for (int a = 0; a < m; ++a) {
    const SensorId ia = in.sensor_at(state.active[a]);
    for (int b = 0; b < m; ++b) {
      if (a == b || state.assigned_sink[a] != state.assigned_sink[b]) continue;
      if (in.reaches(ia.node, ia.kind, in.sensor_at(state.active[b]).node)) {
        arcs.push_back({a, b});
      }
    }
    if (in.reaches(ia.node, ia.kind, state.assigned_sink[a])) {
      arcs.push_back({a, -1});
    }
  }
  DenseLp lp;
  lp.variables = static_cast<int>(arcs.size());
  lp.cost.assign(lp.variables, 0.0);
  double sensing = 0.0;
  std::vector<DenseLp::Row> balance(m), energy(m);
  for (int a = 0; a < m; ++a) {
    const SensorType& type = in.sensor_type(state.active[a]);
    sensing += type.sense_energy;
    balance[a].coefficients.assign(lp.variables, 0.0);
    balance[a].sense = DenseLp::Sense::kEqual;
    balance[a].rhs = -type.packets_per_period;
    energy[a].coefficients.assign(lp.variables, 0.0);
    energy[a].sense = DenseLp::Sense::kLessEqual;
    energy[a].rhs = state.remaining_energy[state.active[a]] - type.sense_energy;
  }
  for (int v = 0; v < lp.variables; ++v) {
    const auto [a, b] = arcs[v];
    const SensorType& ta = in.sensor_type(state.active[a]);
    lp.cost[v] += ta.transmit_energy;
    balance[a].coefficients[v] -= 1.0;
    energy[a].coefficients[v] += ta.transmit_energy;
    if (b >= 0) {
      const SensorType& tb = in.sensor_type(state.active[b]);
      lp.cost[v] += tb.receive_energy;
      balance[b].coefficients[v] += 1.0;
      energy[b].coefficients[v] += tb.receive_energy;
    }
  }
  for (int a = 0; a < m; ++a) {
    lp.rows.push_back(balance[a]);
    lp.rows.push_back(energy[a]);
  }
  const DenseLpResult solved = SolveDenseLp(lp);
  RoutingOracle oracle;
  oracle.feasible = solved.status == DenseLpResult::Status::kOptimal;
  oracle.objective = solved.objective + sensing;
  return oracle;
}

std::string CheckRoutingIdentities(const Instance& in, const PeriodState& state,
                                   const RoutingResult& result) {
  std::map<int, NodeId> sink_of;
  for (std::size_t i = 0; i < state.active.size(); ++i) {
    sink_of[state.active[i]] = state.assigned_sink[i];
  }
  std::vector<double> inflow(in.sensor_count(), 0.0);
  std::vector<double> outflow(in.sensor_count(), 0.0);
  std::map<NodeId, double> sink_inflow;
  for (const SensorFlow& f : result.sensor_flows) {
    const int a = in.sensor_index(f.from);
    const int b = in.sensor_index(f.to);
    if (!sink_of.count(a) || !sink_of.count(b)) return "flow touches idle sensor";
    if (sink_of[a] != sink_of[b]) return "flow crosses assignments";
    if (a == b) return "self flow";
    if (!in.reaches(f.from.node, f.from.kind, f.to.node)) return "flow out of range";
    if (f.packets <= 0.0) return "non-positive flow";
    outflow[a] += f.packets;
    inflow[b] += f.packets;
  }
  for (const SinkFlow& f : result.sink_flows) {
    const int a = in.sensor_index(f.from);
    if (!sink_of.count(a)) return "sink flow from idle sensor";
    if (sink_of[a] != f.sink) return "sink flow to foreign sink";
    if (!in.reaches(f.from.node, f.from.kind, f.sink)) return "sink flow out of range";
    outflow[a] += f.packets;
    sink_inflow[f.sink] += f.packets;
  }
  std::map<NodeId, double> expected;
  double objective = 0.0;
  for (const auto& [s, sink] : sink_of) {
    const SensorType& type = in.sensor_type(s);
    if (inflow[s] + type.packets_per_period != outflow[s]) return "flow balance";
    expected[sink] += type.packets_per_period;
    const double eps = type.sense_energy + type.receive_energy * inflow[s] +
                       type.transmit_energy * outflow[s];
    if (std::abs(eps - result.consumption[s]) > 1e-9) return "consumption formula";
    if (result.consumption[s] > state.remaining_energy[s] + 1e-9) return "energy bound";
    objective += eps;
  }
  for (NodeId v : state.sinks) {
    if (sink_inflow[v] != expected[v]) return "sink inflow";
  }
  if (std::abs(objective - result.objective) > 1e-6) return "objective sum";
  return {};
}

}  // namespace wsnlife::testing
