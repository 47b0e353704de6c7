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

#include "wsnlife/solution.h"

#include <algorithm>
#include <stdexcept>
#include <string>
#include <tuple>

namespace wsnlife {

Solution::Solution(int nodes, int kinds, int horizon)
    : nodes_(nodes),
      kinds_(kinds),
      horizon_(horizon),
      period_on_(horizon, 0),
      deployed_(static_cast<std::size_t>(nodes) * (kinds + 1), 0),
      active_(static_cast<std::size_t>(nodes) * kinds * horizon, 0),
      assignments_(horizon),
      sensor_flows_(horizon),
      sink_flows_(horizon) {}

std::vector<NodeId> Solution::sinks() const {
  std::vector<NodeId> out;
  for (NodeId j = 1; j <= nodes_; ++j) {
    if (deployed(j, kSinkKind)) out.push_back(j);
  }
  return out;
}

double Solution::deployment_cost(const Instance& instance) const {
  double total = 0.0;
  for (NodeId j = 1; j <= nodes_; ++j) {
    for (int k = 0; k <= kinds_; ++k) {
      if (deployed(j, k)) total += instance.cost(j, k);
    }
  }
  return total;
}

void Solution::Canonicalize() {
  for (auto& list : assignments_) {
    std::sort(list.begin(), list.end(), [](const auto& a, const auto& b) {
      return std::tie(a.sensor, a.sink) < std::tie(b.sensor, b.sink);
    });
  }
  for (auto& list : sensor_flows_) {
    std::sort(list.begin(), list.end(), [](const auto& a, const auto& b) {
      return std::tie(a.from, a.to) < std::tie(b.from, b.to);
    });
  }
  for (auto& list : sink_flows_) {
    std::sort(list.begin(), list.end(), [](const auto& a, const auto& b) {
      return std::tie(a.from, a.sink) < std::tie(b.from, b.sink);
    });
  }
}

EnergyLedger::EnergyLedger(const Instance& instance) {
  std::vector<double> first(instance.sensor_count());
  for (int s = 0; s < instance.sensor_count(); ++s) {
    first[s] = instance.sensor_type(s).initial_energy;
  }
  rows_.push_back(std::move(first));
}

void EnergyLedger::Advance(int t, const std::vector<double>& consumption) {
  if (t != periods()) {
    throw std::logic_error("ledger can only advance from its last period");
  }
  const std::vector<double>& current = rows_.back();
  if (consumption.size() != current.size()) {
    throw std::logic_error("consumption vector has the wrong size");
  }
  std::vector<double> next(current.size());
  for (std::size_t s = 0; s < current.size(); ++s) {
    next[s] = current[s] - consumption[s];
    if (consumption[s] < 0.0 || next[s] < -1e-9) {
      throw std::logic_error("energy update for sensor index " +
                             std::to_string(s) + " goes negative");
    }
    next[s] = std::max(next[s], 0.0);
  }
  rows_.push_back(std::move(next));
}

}  // namespace wsnlife
