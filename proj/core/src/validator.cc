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

#include "wsnlife/validator.h"

#include <algorithm>
#include <cmath>
#include <map>
#include <sstream>
#include <utility>

namespace wsnlife {
namespace {

constexpr double kTol = kFeasibilityTolerance;

class Checker {
 public:
  Checker(const Instance& instance, const Solution& solution)
      : in_(instance),
        sol_(solution),
        n_(instance.node_count()),
        k_(instance.sensor_kinds()),
        m1_(SensorFlowBound(instance)),
        m2_(SinkFlowBound(instance)) {}

  ValidationReport Run() {
    if (!sol_.DimensionsMatch(in_)) {
      std::ostringstream os;
      os << "solution is " << sol_.nodes() << "x" << sol_.kinds() << "x"
         << sol_.horizon() << " but instance is " << n_ << "x" << k_ << "x"
         << in_.horizon();
      Add(family::kDimension, {}, 1.0, os.str());
      return std::move(report_);
    }
    CheckLifetime();
    CheckBudgetAndSinks();
    energy_.assign(in_.sensor_count(), 0.0);
    for (int t = 1; t <= in_.horizon(); ++t) CheckPeriod(t);
    for (int s = 0; s < in_.sensor_count(); ++s) {
      const double cap = in_.sensor_type(s).initial_energy;
      if (energy_[s] > cap + kTol) {
        const SensorId id = in_.sensor_at(s);
        Add(family::kEnergy, {id.node, id.kind}, energy_[s] - cap,
            "sensor " + ToString(id) + " consumes more than its battery");
      }
    }
    return std::move(report_);
  }

  std::vector<double> Audit() {
    energy_.assign(in_.sensor_count(), 0.0);
    for (int t = 1; t <= in_.horizon(); ++t) {
      if (!Aggregate(t)) continue;
      AccumulateEnergy(t);
    }
    return energy_;
  }

 private:
  void Add(std::string_view fam, std::vector<int> loc, double magnitude,
           std::string detail) {
    report_.violations.push_back(
        {std::string(fam), std::move(loc), magnitude, std::move(detail)});
  }

  bool ValidSensor(const SensorId& s) const {
    return s.node >= 1 && s.node <= n_ && s.kind >= 1 && s.kind <= k_;
  }
  bool ValidNode(NodeId v) const { return v >= 1 && v <= n_; }
  bool Active(int s, int t) const {
    const SensorId id = in_.sensor_at(s);
    return sol_.active(id.node, id.kind, t);
  }

  void CheckLifetime() {
    const int l = sol_.lifetime();
    if (l < 0 || l > in_.horizon()) {
      Add(family::kLifetime, {l}, l < 0 ? -l : l - in_.horizon(),
          "lifetime outside [0, T]");
    }
    for (int t = 1; t <= in_.horizon(); ++t) {
      const bool expected = t <= l;
      if (sol_.period_on(t) != expected) {
        Add(family::kLifetime, {t}, 1.0,
            expected ? "period inside the lifetime is switched off"
                     : "period after the lifetime is switched on");
      }
    }
  }

  void CheckBudgetAndSinks() {
    const double cost = sol_.deployment_cost(in_);
    if (cost > in_.budget() + kTol) {
      Add(family::kBudget, {}, cost - in_.budget(),
          "deployment cost exceeds the budget");
    }
    const int sinks = static_cast<int>(sol_.sinks().size());
    if (sinks != in_.sink_count()) {
      Add(family::kSinkCount, {sinks}, std::abs(sinks - in_.sink_count()),
          "expected " + std::to_string(in_.sink_count()) + " sinks, found " +
              std::to_string(sinks));
    }
  }

  // Sums duplicate sparse entries and drops references to non-existent
  // devices (reported as dimension violations). Returns false if nothing
  // usable remains for period t.
  bool Aggregate(int t) {
    y_.clear();
    g_.clear();
    assigned_.assign(in_.sensor_count(), {});
    for (const SensorFlow& f : sol_.sensor_flows(t)) {
      if (!ValidSensor(f.from) || !ValidSensor(f.to)) {
        Add(family::kDimension, {t}, 1.0,
            "flow references unknown sensor " + ToString(f.from) + " -> " +
                ToString(f.to));
        continue;
      }
      y_[{in_.sensor_index(f.from), in_.sensor_index(f.to)}] += f.packets;
    }
    for (const SinkFlow& f : sol_.sink_flows(t)) {
      if (!ValidSensor(f.from) || !ValidNode(f.sink)) {
        Add(family::kDimension, {t}, 1.0,
            "sink flow references unknown device " + ToString(f.from) +
                " -> " + std::to_string(f.sink));
        continue;
      }
      g_[{in_.sensor_index(f.from), f.sink}] += f.packets;
    }
    for (const Assignment& a : sol_.assignments(t)) {
      if (!ValidSensor(a.sensor) || !ValidNode(a.sink)) {
        Add(family::kDimension, {t}, 1.0,
            "assignment references unknown device " + ToString(a.sensor) +
                " -> " + std::to_string(a.sink));
        continue;
      }
      assigned_[in_.sensor_index(a.sensor)].push_back(a.sink);
    }
    in_y_.assign(in_.sensor_count(), 0.0);
    out_y_.assign(in_.sensor_count(), 0.0);
    out_g_.assign(in_.sensor_count(), 0.0);
    for (const auto& [key, f] : y_) {
      out_y_[key.first] += f;
      in_y_[key.second] += f;
    }
    for (const auto& [key, f] : g_) out_g_[key.first] += f;
    return true;
  }

  void AccumulateEnergy(int t) {
    for (int s = 0; s < in_.sensor_count(); ++s) {
      const SensorType& type = in_.sensor_type(s);
      energy_[s] += type.sense_energy * (Active(s, t) ? 1.0 : 0.0) +
                    type.receive_energy * in_y_[s] +
                    type.transmit_energy * (out_y_[s] + out_g_[s]);
    }
  }

  void CheckPeriod(int t) {
    Aggregate(t);
    AccumulateEnergy(t);
    const bool on = sol_.period_on(t);

    for (NodeId i = 1; i <= n_; ++i) {
      int covered = 0;
      for (int s : in_.coverers(i)) covered += Active(s, t) ? 1 : 0;
      const int need = on ? in_.coverage_requirement(i) : 0;
      if (covered < need) {
        Add(family::kCoverage, {t, i}, need - covered,
            "node " + std::to_string(i) + " covered by " +
                std::to_string(covered) + " of " + std::to_string(need));
      }
    }

    for (int s = 0; s < in_.sensor_count(); ++s) {
      const SensorId id = in_.sensor_at(s);
      const bool z = Active(s, t);
      if (z && !sol_.deployed(id.node, id.kind)) {
        Add(family::kActivityLinking, {t, id.node, id.kind}, 1.0,
            "sensor " + ToString(id) + " active but not deployed");
      }
      if (z && !on) {
        Add(family::kActivityLinking, {t, id.node, id.kind}, 1.0,
            "sensor " + ToString(id) + " active outside the lifetime");
      }
      if (z) {
        int neighbours = 0;
        for (int o : in_.out_neighbors(s)) neighbours += Active(o, t) ? 1 : 0;
        if (neighbours < in_.alpha()) {
          Add(family::kAlphaConnectivity, {t, id.node, id.kind},
              in_.alpha() - neighbours,
              "sensor " + ToString(id) + " reaches " +
                  std::to_string(neighbours) + " active sensors");
        }
      }

      const auto& sinks = assigned_[s];
      for (NodeId v : sinks) {
        if (!sol_.deployed(v, kSinkKind)) {
          Add(family::kSinkAssignment, {t, v, id.node, id.kind}, 1.0,
              "sensor " + ToString(id) + " assigned to node " +
                  std::to_string(v) + " without a sink");
        }
      }
      const int count = static_cast<int>(sinks.size());
      const int want = z ? 1 : 0;
      if (count != want) {
        Add(family::kSinkAssignment, {t, id.node, id.kind},
            std::abs(count - want),
            "sensor " + ToString(id) + " has " + std::to_string(count) +
                " sink assignments, expected " + std::to_string(want));
      }

      if (out_y_[s] > m1_ * (z ? 1 : 0) + kTol) {
        Add(family::kFlowCapacity, {t, id.node, id.kind},
            out_y_[s] - m1_ * (z ? 1 : 0),
            "sensor-to-sensor outflow of " + ToString(id) + " exceeds bound");
      }
      if (in_y_[s] > m1_ * (z ? 1 : 0) + kTol) {
        Add(family::kFlowCapacity, {t, id.node, id.kind},
            in_y_[s] - m1_ * (z ? 1 : 0),
            "sensor-to-sensor inflow of " + ToString(id) + " exceeds bound");
      }
      const double h = in_.sensor_type(s).packets_per_period;
      const double balance =
          in_y_[s] + h * (z ? 1 : 0) - out_y_[s] - out_g_[s];
      if (std::abs(balance) > kTol) {
        Add(family::kFlowBalance, {t, id.node, id.kind}, std::abs(balance),
            "flow imbalance at " + ToString(id));
      }
    }

    std::vector<double> sink_in(n_ + 1, 0.0);
    std::vector<double> sink_demand(n_ + 1, 0.0);
    for (const auto& [key, f] : y_) {
      const auto [from, to] = key;
      const SensorId a = in_.sensor_at(from);
      const SensorId b = in_.sensor_at(to);
      if (f < -kTol) {
        Add(family::kFlowCapacity, {t, a.node, a.kind, b.node, b.kind}, -f,
            "negative flow");
      }
      if (from == to) {
        if (std::abs(f) > kTol) {
          Add(family::kSelfFlow, {t, a.node, a.kind}, std::abs(f),
              "self flow at " + ToString(a));
        }
        continue;
      }
      const double cap = in_.reaches(a.node, a.kind, b.node) ? m1_ : 0.0;
      if (f > cap + kTol) {
        Add(family::kFlowCapacity, {t, a.node, a.kind, b.node, b.kind},
            f - cap,
            "flow " + ToString(a) + " -> " + ToString(b) +
                (cap == 0.0 ? " outside communication range" : " above bound"));
      }
      if (f > kTol) {
        for (NodeId v : assigned_[from]) {
          const auto& other = assigned_[to];
          if (std::find(other.begin(), other.end(), v) == other.end()) {
            Add(family::kRouteConsistency,
                {t, v, a.node, a.kind, b.node, b.kind}, 1.0,
                "flow " + ToString(a) + " -> " + ToString(b) +
                    " crosses sink assignments");
          }
        }
      }
    }
    for (const auto& [key, f] : g_) {
      const auto [from, v] = key;
      const SensorId a = in_.sensor_at(from);
      if (f < -kTol) {
        Add(family::kFlowCapacity, {t, a.node, a.kind, v}, -f,
            "negative sink flow");
      }
      const double cap = in_.reaches(a.node, a.kind, v) ? m2_ : 0.0;
      if (f > cap + kTol) {
        Add(family::kFlowCapacity, {t, a.node, a.kind, v}, f - cap,
            "sink flow " + ToString(a) + " -> " + std::to_string(v) +
                (cap == 0.0 ? " outside communication range" : " above bound"));
      }
      sink_in[v] += f;
      if (f > kTol) {
        for (NodeId w : assigned_[from]) {
          if (w != v || !sol_.deployed(v, kSinkKind)) {
            Add(family::kRouteConsistency, {t, w, a.node, a.kind, v}, 1.0,
                "sink flow " + ToString(a) + " -> " + std::to_string(v) +
                    " does not reach the assigned sink " + std::to_string(w));
          }
        }
      }
    }
    for (int s = 0; s < in_.sensor_count(); ++s) {
      const double h = in_.sensor_type(s).packets_per_period;
      for (NodeId v : assigned_[s]) sink_demand[v] += h;
    }
    for (NodeId v = 1; v <= n_; ++v) {
      const double cap = sol_.deployed(v, kSinkKind) ? m2_ : 0.0;
      if (sink_in[v] > cap + kTol) {
        Add(family::kFlowCapacity, {t, v}, sink_in[v] - cap,
            "inflow into node " + std::to_string(v) + " exceeds sink bound");
      }
      if (std::abs(sink_in[v] - sink_demand[v]) > kTol) {
        Add(family::kSinkInflow, {t, v}, std::abs(sink_in[v] - sink_demand[v]),
            "sink " + std::to_string(v) + " receives " +
                std::to_string(sink_in[v]) + " packets, assigned sensors send " +
                std::to_string(sink_demand[v]));
      }
    }
  }

  const Instance& in_;
  const Solution& sol_;
  const int n_;
  const int k_;
  const double m1_;
  const double m2_;
  ValidationReport report_;
  std::map<std::pair<int, int>, double> y_;
  std::map<std::pair<int, NodeId>, double> g_;
  std::vector<std::vector<NodeId>> assigned_;
  std::vector<double> in_y_;
  std::vector<double> out_y_;
  std::vector<double> out_g_;
  std::vector<double> energy_;
};

}  // namespace

int ValidationReport::Count(std::string_view family_id) const {
  return static_cast<int>(
      std::count_if(violations.begin(), violations.end(),
                    [&](const Violation& v) { return v.family == family_id; }));
}

std::string ValidationReport::Summary() const {
  std::ostringstream os;
  for (const Violation& v : violations) {
    os << v.family << " [";
    for (std::size_t i = 0; i < v.location.size(); ++i) {
      os << (i ? "," : "") << v.location[i];
    }
    os << "] " << v.magnitude << ": " << v.detail << "\n";
  }
  return os.str();
}

double SensorFlowBound(const Instance& instance) {
  return static_cast<double>(instance.max_packets()) *
         (instance.sensor_count() - 1);
}

double SinkFlowBound(const Instance& instance) {
  return static_cast<double>(instance.max_packets()) * instance.sensor_count();
}

ValidationReport Validate(const Instance& instance, const Solution& solution) {
  return Checker(instance, solution).Run();
}

std::vector<double> LifetimeEnergyAudit(const Instance& instance,
                                        const Solution& solution) {
  if (!solution.DimensionsMatch(instance)) {
    return std::vector<double>(instance.sensor_count(), 0.0);
  }
  return Checker(instance, solution).Audit();
}

}  // namespace wsnlife
