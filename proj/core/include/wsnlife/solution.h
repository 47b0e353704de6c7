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

#ifndef WSNLIFE_SOLUTION_H_
#define WSNLIFE_SOLUTION_H_

#include <cstdint>
#include <vector>

#include "wsnlife/instance.h"

namespace wsnlife {

// y_{iljkt}: packets from sensor `from` to sensor `to` in one period.
struct SensorFlow {
  SensorId from;
  SensorId to;
  double packets = 0.0;

  friend bool operator==(const SensorFlow&, const SensorFlow&) = default;
};

// g_{iljt}: packets from a sensor into the sink located at `sink`.
struct SinkFlow {
  SensorId from;
  NodeId sink = 0;
  double packets = 0.0;

  friend bool operator==(const SinkFlow&, const SinkFlow&) = default;
};

// u_{ijkt} = 1 entries.
struct Assignment {
  NodeId sink = 0;
  SensorId sensor;

  friend bool operator==(const Assignment&, const Assignment&) = default;
};

// Decision tensors of the lifetime model. Binary tensors are dense; u, y and g
// are stored sparsely per period (only non-zero entries). Periods are 1-based.
class Solution {
 public:
  Solution() = default;
  Solution(int nodes, int kinds, int horizon);

  int nodes() const { return nodes_; }
  int kinds() const { return kinds_; }
  int horizon() const { return horizon_; }

  int lifetime() const { return lifetime_; }
  void set_lifetime(int l) { lifetime_ = l; }

  bool period_on(int t) const { return period_on_[t - 1] != 0; }
  void set_period_on(int t, bool v) { period_on_[t - 1] = v; }

  // x_{jk}, k in 0..K.
  bool deployed(NodeId j, int k) const {
    return deployed_[(j - 1) * (kinds_ + 1) + k] != 0;
  }
  void set_deployed(NodeId j, int k, bool v) {
    deployed_[(j - 1) * (kinds_ + 1) + k] = v;
  }

  // z_{jkt}, k in 1..K.
  bool active(NodeId j, int k, int t) const {
    return active_[ActiveOffset(j, k, t)] != 0;
  }
  void set_active(NodeId j, int k, int t, bool v) {
    active_[ActiveOffset(j, k, t)] = v;
  }

  std::vector<Assignment>& assignments(int t) { return assignments_[t - 1]; }
  const std::vector<Assignment>& assignments(int t) const {
    return assignments_[t - 1];
  }
  std::vector<SensorFlow>& sensor_flows(int t) { return sensor_flows_[t - 1]; }
  const std::vector<SensorFlow>& sensor_flows(int t) const {
    return sensor_flows_[t - 1];
  }
  std::vector<SinkFlow>& sink_flows(int t) { return sink_flows_[t - 1]; }
  const std::vector<SinkFlow>& sink_flows(int t) const {
    return sink_flows_[t - 1];
  }

  std::vector<NodeId> sinks() const;
  // Sum of c_{jk} x_{jk} over all kinds including sinks.
  double deployment_cost(const Instance& instance) const;

  // Sorts the sparse per-period lists so equal solutions compare equal.
  void Canonicalize();

  bool DimensionsMatch(const Instance& instance) const {
    return nodes_ == instance.node_count() &&
           kinds_ == instance.sensor_kinds() &&
           horizon_ == instance.horizon();
  }

  friend bool operator==(const Solution&, const Solution&) = default;

 private:
  std::size_t ActiveOffset(NodeId j, int k, int t) const {
    return (static_cast<std::size_t>(t - 1) * nodes_ + (j - 1)) * kinds_ +
           (k - 1);
  }

  int nodes_ = 0;
  int kinds_ = 0;
  int horizon_ = 0;
  int lifetime_ = 0;
  std::vector<std::uint8_t> period_on_;
  std::vector<std::uint8_t> deployed_;
  std::vector<std::uint8_t> active_;
  std::vector<std::vector<Assignment>> assignments_;
  std::vector<std::vector<SensorFlow>> sensor_flows_;
  std::vector<std::vector<SinkFlow>> sink_flows_;
};

// Remaining battery E^rem_{jkt} of every sensor, one row per period that has
// been reached. Row 1 holds the initial batteries E_k.
class EnergyLedger {
 public:
  explicit EnergyLedger(const Instance& instance);

  int periods() const { return static_cast<int>(rows_.size()); }
  double remaining(int sensor, int t) const { return rows_[t - 1][sensor]; }
  const std::vector<double>& row(int t) const { return rows_[t - 1]; }

  // Appends row t + 1 = row t - consumption. Throws std::logic_error if t is
  // not the last row or an entry would become negative.
  void Advance(int t, const std::vector<double>& consumption);

 private:
  std::vector<std::vector<double>> rows_;
};

}  // namespace wsnlife

#endif  // WSNLIFE_SOLUTION_H_
