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

#include "wsnlife/exhaustive_oracle.h"

#include <algorithm>
#include <bit>
#include <cmath>
#include <limits>
#include <string>
#include <utility>
#include <vector>

#include "wsnlife/routing.h"

namespace wsnlife {
namespace {

constexpr double kMoneySlack = 1e-9;

struct PeriodChoice {
  std::vector<int> active;
  std::vector<NodeId> assigned;
  RoutingResult routing;
};

class Enumerator {
 public:
  explicit Enumerator(const Instance& instance)
      : in_(instance), sensors_(instance.sensor_count()) {}

  OracleResult Run() {
    std::vector<NodeId> sinks;
    ChooseSinks(1, sinks);
    OracleResult result;
    result.routing_calls = routing_calls_;
    if (best_ < 0) return result;
    result.lifetime = best_;
    result.witness = BuildWitness();
    return result;
  }

 private:
  bool Done() const { return best_ == in_.horizon(); }

  void ChooseSinks(NodeId next, std::vector<NodeId>& sinks) {
    if (Done()) return;
    if (static_cast<int>(sinks.size()) == in_.sink_count()) {
      double cost = 0.0;
      for (NodeId j : sinks) cost += in_.cost(j, kSinkKind);
      if (cost <= in_.budget() + kMoneySlack) {
        sinks_ = sinks;
        ExploreDeployments(in_.budget() - cost);
      }
      return;
    }
    for (NodeId j = next; j <= in_.node_count(); ++j) {
      sinks.push_back(j);
      ChooseSinks(j + 1, sinks);
      sinks.pop_back();
    }
  }

  // Adding a sensor never invalidates a schedule, so only inclusion-maximal
  // affordable deployments are explored.
  void ExploreDeployments(double money) {
    const std::uint32_t full = (1u << sensors_) - 1;
    for (std::uint32_t mask = 0; mask <= full && !Done(); ++mask) {
      const double cost = MaskCost(mask);
      if (cost > money + kMoneySlack) continue;
      bool maximal = true;
      for (int s = 0; s < sensors_ && maximal; ++s) {
        if (!(mask >> s & 1) &&
            cost + in_.sensor_cost(s) <= money + kMoneySlack) {
          maximal = false;
        }
      }
      if (!maximal) continue;
      deployment_ = mask;
      subsets_.clear();
      for (std::uint32_t a = mask;; a = (a - 1) & mask) {
        subsets_.push_back(a);
        if (a == 0) break;
      }
      std::stable_sort(subsets_.begin(), subsets_.end(),
                       [](std::uint32_t a, std::uint32_t b) {
                         return std::popcount(a) < std::popcount(b);
                       });
      visited_.assign(in_.horizon() + 2, {});
      std::vector<double> energy(sensors_);
      for (int s = 0; s < sensors_; ++s) {
        energy[s] = in_.sensor_type(s).initial_energy;
      }
      Explore(1, energy);
      if (mask == full) break;
    }
  }

  double MaskCost(std::uint32_t mask) const {
    double cost = 0.0;
    for (int s = 0; s < sensors_; ++s) {
      if (mask >> s & 1) cost += in_.sensor_cost(s);
    }
    return cost;
  }

  // Periods the deployed sensors could still cover if routing were free.
  int CoverageBound(const std::vector<double>& energy) const {
    int bound = std::numeric_limits<int>::max();
    for (NodeId i = 1; i <= in_.node_count(); ++i) {
      const int f = in_.coverage_requirement(i);
      if (f <= 0) continue;
      long long slots = 0;
      for (int s : in_.coverers(i)) {
        if (!(deployment_ >> s & 1)) continue;
        const double es = in_.sensor_type(s).sense_energy;
        if (es <= 0.0) return bound;
        slots += static_cast<long long>(std::floor(energy[s] / es + 1e-9));
      }
      bound = std::min<long long>(bound, slots / f);
    }
    return bound;
  }

  bool Dominated(int t, const std::vector<double>& energy) {
    for (const auto& seen : visited_[t]) {
      bool covers = true;
      for (int s = 0; s < sensors_ && covers; ++s) {
        if ((deployment_ >> s & 1) && seen[s] < energy[s] - 1e-12) {
          covers = false;
        }
      }
      if (covers) return true;
    }
    visited_[t].push_back(energy);
    return false;
  }

  void Explore(int t, const std::vector<double>& energy) {
    const int lived = t - 1;
    if (lived > best_) {
      best_ = lived;
      best_sinks_ = sinks_;
      best_deployment_ = deployment_;
      best_path_ = path_;
    }
    if (Done()) return;
    const int remaining_periods = in_.horizon() - lived;
    if (lived + std::min(remaining_periods, CoverageBound(energy)) <= best_) {
      return;
    }
    if (Dominated(t, energy)) return;
    for (std::uint32_t subset : subsets_) {
      if (!Admissible(subset, energy)) continue;
      std::vector<int> active;
      for (int s = 0; s < sensors_; ++s) {
        if (subset >> s & 1) active.push_back(s);
      }
      std::vector<NodeId> assigned(active.size(), 0);
      Assign(t, energy, active, assigned, 0);
      if (Done()) return;
    }
  }

  bool Admissible(std::uint32_t subset, const std::vector<double>& energy) const {
    for (int s = 0; s < sensors_; ++s) {
      if (!(subset >> s & 1)) continue;
      const SensorType& type = in_.sensor_type(s);
      if (energy[s] + 1e-9 <
          type.sense_energy + type.transmit_energy * type.packets_per_period) {
        return false;
      }
      int neighbours = 0;
      for (int o : in_.out_neighbors(s)) neighbours += subset >> o & 1;
      if (neighbours < in_.alpha()) return false;
    }
    for (NodeId i = 1; i <= in_.node_count(); ++i) {
      int count = 0;
      for (int s : in_.coverers(i)) count += subset >> s & 1;
      if (count < in_.coverage_requirement(i)) return false;
    }
    return true;
  }

  void Assign(int t, const std::vector<double>& energy,
              const std::vector<int>& active, std::vector<NodeId>& assigned,
              std::size_t next) {
    if (Done()) return;
    if (next == active.size()) {
      if (!Routable(active, assigned)) return;
      PeriodState state;
      state.period = t;
      state.active = active;
      state.assigned_sink = assigned;
      state.sinks = sinks_;
      state.remaining_energy = energy;
      ++routing_calls_;
      RoutingResult routing = SolveRoutingProblem(in_, state);
      if (!routing.feasible) return;
      std::vector<double> after = energy;
      for (int s : active) after[s] -= routing.consumption[s];
      path_.push_back({active, assigned, std::move(routing)});
      Explore(t + 1, after);
      path_.pop_back();
      return;
    }
    for (NodeId sink : sinks_) {
      assigned[next] = sink;
      Assign(t, energy, active, assigned, next + 1);
      if (Done()) return;
    }
  }

  // Every active sensor must reach its sink through sensors sharing it.
  bool Routable(const std::vector<int>& active,
                const std::vector<NodeId>& assigned) const {
    for (NodeId sink : sinks_) {
      std::vector<int> group;
      for (std::size_t i = 0; i < active.size(); ++i) {
        if (assigned[i] == sink) group.push_back(active[i]);
      }
      std::vector<char> reached(group.size(), 0);
      bool grew = true;
      while (grew) {
        grew = false;
        for (std::size_t a = 0; a < group.size(); ++a) {
          if (reached[a]) continue;
          const SensorId id = in_.sensor_at(group[a]);
          bool ok = in_.reaches(id.node, id.kind, sink);
          for (std::size_t b = 0; b < group.size() && !ok; ++b) {
            if (reached[b] && in_.reaches(id.node, id.kind,
                                          in_.sensor_at(group[b]).node)) {
              ok = true;
            }
          }
          if (ok) {
            reached[a] = 1;
            grew = true;
          }
        }
      }
      if (std::count(reached.begin(), reached.end(), 0) > 0) return false;
    }
    return true;
  }

  Solution BuildWitness() const {
    Solution solution(in_.node_count(), in_.sensor_kinds(), in_.horizon());
    for (NodeId j : best_sinks_) solution.set_deployed(j, kSinkKind, true);
    for (int s = 0; s < sensors_; ++s) {
      if (best_deployment_ >> s & 1) {
        const SensorId id = in_.sensor_at(s);
        solution.set_deployed(id.node, id.kind, true);
      }
    }
    solution.set_lifetime(best_);
    for (int t = 1; t <= best_; ++t) {
      solution.set_period_on(t, true);
      const PeriodChoice& choice = best_path_[t - 1];
      for (std::size_t i = 0; i < choice.active.size(); ++i) {
        const SensorId id = in_.sensor_at(choice.active[i]);
        solution.set_active(id.node, id.kind, t, true);
        solution.assignments(t).push_back({choice.assigned[i], id});
      }
      solution.sensor_flows(t) = choice.routing.sensor_flows;
      solution.sink_flows(t) = choice.routing.sink_flows;
    }
    solution.Canonicalize();
    return solution;
  }

  const Instance& in_;
  const int sensors_;
  std::vector<NodeId> sinks_;
  std::uint32_t deployment_ = 0;
  std::vector<std::uint32_t> subsets_;
  std::vector<std::vector<std::vector<double>>> visited_;
  std::vector<PeriodChoice> path_;
  std::int64_t routing_calls_ = 0;

  int best_ = -1;
  std::vector<NodeId> best_sinks_;
  std::uint32_t best_deployment_ = 0;
  std::vector<PeriodChoice> best_path_;
};

}  // namespace

OracleResult ExhaustiveOracle(const Instance& instance,
                              const OracleCaps& caps) {
  auto refuse = [](const std::string& what, int value, int cap) {
    throw OracleRefused(what + " " + std::to_string(value) +
                        " exceeds the oracle cap of " + std::to_string(cap));
  };
  if (instance.node_count() > caps.max_nodes) {
    refuse("node count", instance.node_count(), caps.max_nodes);
  }
  if (instance.sensor_kinds() > caps.max_kinds) {
    refuse("sensor kind count", instance.sensor_kinds(), caps.max_kinds);
  }
  if (instance.horizon() > caps.max_horizon) {
    refuse("horizon", instance.horizon(), caps.max_horizon);
  }
  if (instance.sink_count() > caps.max_sinks) {
    refuse("sink count", instance.sink_count(), caps.max_sinks);
  }
  if (instance.sensor_count() > 20) {
    refuse("sensor count", instance.sensor_count(), 20);
  }
  return Enumerator(instance).Run();
}

}  // namespace wsnlife
