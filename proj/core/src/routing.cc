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

#include "wsnlife/routing.h"

#include <algorithm>
#include <cmath>
#include <functional>
#include <limits>
#include <map>
#include <ostream>
#include <queue>
#include <stdexcept>
#include <tuple>
#include <utility>

#include "wsnlife/min_cost_flow.h"

namespace wsnlife {
namespace {

// Energies are turned into exact integers so equal-cost paths tie exactly.
constexpr double kCostScale = 1e9;

std::int64_t ScaledCost(double energy) {
  return static_cast<std::int64_t>(std::llround(energy * kCostScale));
}

struct Member {
  int sensor;
  double remaining;
  std::int64_t relay_capacity;
};

class CommodityRouter {
 public:
  CommodityRouter(const Instance& instance, NodeId sink,
                  std::vector<Member> members)
      : instance_(instance), sink_(sink), members_(std::move(members)) {}

  // Returns false (and fills `result` diagnostics) when infeasible.
  bool Route(RoutingResult& result) {
    if (members_.empty()) return true;
    if (!TreeRoute(result)) return false;
    if (CapacitiesRespected()) {
      EmitTreeFlows(result);
      return true;
    }
    return FlowRoute(result);
  }

 private:
  std::int64_t ArcCost(int from, int to) const {
    return ScaledCost(instance_.sensor_type(members_[from].sensor)
                          .transmit_energy +
                      instance_.sensor_type(members_[to].sensor)
                          .receive_energy);
  }
  bool ReachesSink(int m) const {
    const SensorId id = instance_.sensor_at(members_[m].sensor);
    return instance_.reaches(id.node, id.kind, sink_);
  }
  bool ReachesMember(int from, int to) const {
    const SensorId a = instance_.sensor_at(members_[from].sensor);
    const SensorId b = instance_.sensor_at(members_[to].sensor);
    return instance_.reaches(a.node, a.kind, b.node);
  }

  // Dijkstra towards the sink on the reversed graph. Member index `n` is the
  // sink itself.
  bool TreeRoute(RoutingResult& result) {
    const int n = static_cast<int>(members_.size());
    constexpr std::int64_t kUnreached = std::numeric_limits<std::int64_t>::max();
    dist_.assign(n + 1, kUnreached);
    successor_.assign(n, -1);
    order_.clear();
    std::vector<char> settled(n + 1, 0);
    using Entry = std::pair<std::int64_t, int>;
    std::priority_queue<Entry, std::vector<Entry>, std::greater<>> heap;
    dist_[n] = 0;
    heap.push({0, n});
    while (!heap.empty()) {
      const auto [d, u] = heap.top();
      heap.pop();
      if (settled[u]) continue;
      settled[u] = 1;
      if (u < n) order_.push_back(u);
      for (int i = 0; i < n; ++i) {
        if (i == u || settled[i]) continue;
        std::int64_t cost;
        if (u == n) {
          if (!ReachesSink(i)) continue;
          cost = ScaledCost(
              instance_.sensor_type(members_[i].sensor).transmit_energy);
        } else {
          if (!ReachesMember(i, u)) continue;
          cost = ArcCost(i, u);
        }
        if (d + cost < dist_[i]) {
          dist_[i] = d + cost;
          successor_[i] = u;
          heap.push({dist_[i], i});
        }
      }
    }
    for (int i = 0; i < n; ++i) {
      if (dist_[i] == kUnreached) {
        result.feasible = false;
        result.stranded = instance_.sensor_at(members_[i].sensor);
        result.diagnostic = "sensor " + ToString(result.stranded) +
                            " has no route to its sink " +
                            std::to_string(sink_) +
                            " through same-assignment sensors";
        return false;
      }
    }
    // Settle order is non-decreasing in distance, so walking it backwards
    // pushes every subtree's packets before its parent is processed.
    inflow_.assign(n, 0);
    for (auto it = order_.rbegin(); it != order_.rend(); ++it) {
      const int m = *it;
      const int next = successor_[m];
      if (next < n) {
        inflow_[next] += inflow_[m] + Packets(m);
      }
    }
    return true;
  }

  std::int64_t Packets(int m) const {
    return instance_.sensor_type(members_[m].sensor).packets_per_period;
  }

  bool CapacitiesRespected() const {
    for (std::size_t m = 0; m < members_.size(); ++m) {
      if (inflow_[m] > members_[m].relay_capacity) return false;
    }
    return true;
  }

  void EmitTreeFlows(RoutingResult& result) const {
    const int n = static_cast<int>(members_.size());
    for (int m = 0; m < n; ++m) {
      const double through = static_cast<double>(inflow_[m] + Packets(m));
      const SensorId from = instance_.sensor_at(members_[m].sensor);
      if (successor_[m] == n) {
        result.sink_flows.push_back({from, sink_, through});
      } else {
        result.sensor_flows.push_back(
            {from, instance_.sensor_at(members_[successor_[m]].sensor),
             through});
      }
    }
  }

  bool FlowRoute(RoutingResult& result) {
    const int n = static_cast<int>(members_.size());
    const int source = 0;
    const int target = 1;
    auto in_node = [](int m) { return 2 + 2 * m; };
    auto out_node = [](int m) { return 3 + 2 * m; };
    MinCostFlow graph(2 + 2 * n);
    std::vector<int> supply_arc(n);
    std::vector<std::pair<int, std::pair<int, int>>> transfer_arcs;
    std::vector<std::pair<int, int>> sink_arcs;
    std::int64_t demand = 0;
    for (int m = 0; m < n; ++m) {
      supply_arc[m] = graph.AddArc(source, out_node(m), Packets(m), 0);
      demand += Packets(m);
      graph.AddArc(in_node(m), out_node(m), members_[m].relay_capacity, 0);
    }
    for (int m = 0; m < n; ++m) {
      if (ReachesSink(m)) {
        const std::int64_t cost = ScaledCost(
            instance_.sensor_type(members_[m].sensor).transmit_energy);
        sink_arcs.push_back(
            {graph.AddArc(out_node(m), target, MinCostFlow::kInfiniteCapacity,
                          cost),
             m});
      }
      for (int o = 0; o < n; ++o) {
        if (o == m || !ReachesMember(m, o)) continue;
        transfer_arcs.push_back(
            {graph.AddArc(out_node(m), in_node(o),
                          MinCostFlow::kInfiniteCapacity, ArcCost(m, o)),
             {m, o}});
      }
    }
    const MinCostFlow::Result solved = graph.Solve(source, target, demand);
    if (solved.flow < demand) {
      result.feasible = false;
      for (int m = 0; m < n; ++m) {
        if (graph.flow(supply_arc[m]) < Packets(m)) {
          result.stranded = instance_.sensor_at(members_[m].sensor);
          break;
        }
      }
      result.diagnostic = "relay energy exhausted: sensor " +
                          ToString(result.stranded) +
                          " cannot deliver its packets to sink " +
                          std::to_string(sink_);
      return false;
    }
    for (const auto& [arc, pair] : transfer_arcs) {
      const std::int64_t f = graph.flow(arc);
      if (f > 0) {
        result.sensor_flows.push_back(
            {instance_.sensor_at(members_[pair.first].sensor),
             instance_.sensor_at(members_[pair.second].sensor),
             static_cast<double>(f)});
      }
    }
    for (const auto& [arc, m] : sink_arcs) {
      const std::int64_t f = graph.flow(arc);
      if (f > 0) {
        result.sink_flows.push_back(
            {instance_.sensor_at(members_[m].sensor), sink_,
             static_cast<double>(f)});
      }
    }
    return true;
  }

  const Instance& instance_;
  NodeId sink_;
  std::vector<Member> members_;
  std::vector<std::int64_t> dist_;
  std::vector<int> successor_;
  std::vector<int> order_;
  std::vector<std::int64_t> inflow_;
};

}  // namespace

PeriodState MakePeriodState(const Instance& instance, const Solution& solution,
                            int t, const std::vector<double>& remaining) {
  PeriodState state;
  state.period = t;
  state.sinks = solution.sinks();
  state.remaining_energy = remaining;
  std::map<int, std::vector<NodeId>> by_sensor;
  for (const Assignment& a : solution.assignments(t)) {
    by_sensor[instance.sensor_index(a.sensor)].push_back(a.sink);
  }
  for (int s = 0; s < instance.sensor_count(); ++s) {
    const SensorId id = instance.sensor_at(s);
    if (!solution.active(id.node, id.kind, t)) continue;
    auto it = by_sensor.find(s);
    if (it == by_sensor.end() || it->second.size() != 1) {
      throw std::invalid_argument("active sensor " + ToString(id) +
                                  " needs exactly one sink assignment");
    }
    state.active.push_back(s);
    state.assigned_sink.push_back(it->second.front());
  }
  return state;
}

RoutingResult SolveRoutingProblem(const Instance& instance,
                                  const PeriodState& state) {
  RoutingResult result;
  result.consumption.assign(instance.sensor_count(), 0.0);
  if (state.active.size() != state.assigned_sink.size()) {
    throw std::invalid_argument("active and assigned_sink sizes differ");
  }
  std::map<NodeId, std::vector<Member>> commodities;
  for (NodeId v : state.sinks) commodities[v];
  for (std::size_t i = 0; i < state.active.size(); ++i) {
    const int s = state.active[i];
    const SensorType& type = instance.sensor_type(s);
    const SensorId id = instance.sensor_at(s);
    const double remaining = state.remaining_energy[s];
    const double headroom = remaining - type.sense_energy -
                            type.transmit_energy * type.packets_per_period;
    auto it = commodities.find(state.assigned_sink[i]);
    if (it == commodities.end()) {
      result.feasible = false;
      result.stranded = id;
      result.diagnostic = "sensor " + ToString(id) +
                          " is assigned to node " +
                          std::to_string(state.assigned_sink[i]) +
                          " which holds no sink";
      return result;
    }
    if (headroom < -1e-9) {
      result.feasible = false;
      result.stranded = id;
      result.diagnostic = "sensor " + ToString(id) +
                          " lacks the energy to sense and send its own packets";
      return result;
    }
    const double per_packet = type.receive_energy + type.transmit_energy;
    std::int64_t capacity = MinCostFlow::kInfiniteCapacity;
    if (per_packet > 0.0) {
      const double c = std::floor(std::max(headroom, 0.0) / per_packet + 1e-9);
      capacity = c >= static_cast<double>(MinCostFlow::kInfiniteCapacity)
                     ? MinCostFlow::kInfiniteCapacity
                     : static_cast<std::int64_t>(c);
    }
    it->second.push_back({s, remaining, capacity});
  }
  for (auto& [sink, members] : commodities) {
    CommodityRouter router(instance, sink, std::move(members));
    if (!router.Route(result)) return result;
  }

  std::vector<double> in(instance.sensor_count(), 0.0);
  std::vector<double> out(instance.sensor_count(), 0.0);
  for (const SensorFlow& f : result.sensor_flows) {
    out[instance.sensor_index(f.from)] += f.packets;
    in[instance.sensor_index(f.to)] += f.packets;
  }
  for (const SinkFlow& f : result.sink_flows) {
    out[instance.sensor_index(f.from)] += f.packets;
  }
  result.objective = 0.0;
  for (int s : state.active) {
    const SensorType& type = instance.sensor_type(s);
    result.consumption[s] = type.sense_energy + type.receive_energy * in[s] +
                            type.transmit_energy * out[s];
    result.objective += result.consumption[s];
  }
  std::sort(result.sensor_flows.begin(), result.sensor_flows.end(),
            [](const SensorFlow& a, const SensorFlow& b) {
              return std::tie(a.from, a.to) < std::tie(b.from, b.to);
            });
  std::sort(result.sink_flows.begin(), result.sink_flows.end(),
            [](const SinkFlow& a, const SinkFlow& b) {
              return std::tie(a.from, a.sink) < std::tie(b.from, b.sink);
            });
  return result;
}

void UpdateEnergy(EnergyLedger& ledger, int t, const RoutingResult& result) {
  ledger.Advance(t, result.consumption);
}

std::int64_t MaxOutflowBound(int active_count, const Instance& instance) {
  return static_cast<std::int64_t>(active_count) * instance.max_packets();
}

void WriteFlowGraphs(std::ostream& out, const Instance& instance,
                     const PeriodState& state, const RoutingResult& result) {
  std::map<SensorId, NodeId> sink_of;
  for (std::size_t i = 0; i < state.active.size(); ++i) {
    sink_of[instance.sensor_at(state.active[i])] = state.assigned_sink[i];
  }
  std::vector<NodeId> sinks = state.sinks;
  std::sort(sinks.begin(), sinks.end());
  for (NodeId v : sinks) {
    out << "# period " << state.period << " sink " << v << "\n";
    for (const SensorFlow& f : result.sensor_flows) {
      if (sink_of[f.from] != v) continue;
      out << ToString(f.from) << " -> " << ToString(f.to) << " " << f.packets
          << "\n";
    }
    for (const SinkFlow& f : result.sink_flows) {
      if (f.sink != v) continue;
      out << ToString(f.from) << " -> sink " << v << " " << f.packets << "\n";
    }
  }
}

}  // namespace wsnlife
