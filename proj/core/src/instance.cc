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

#include "wsnlife/instance.h"

#include <algorithm>
#include <cmath>
#include <random>
#include <stdexcept>
#include <string>

namespace wsnlife {
namespace {

// Ranges compare against distances computed from integer offsets; the slack
// keeps sqrt(2) <= 1.5 style tests exact and r = 2 inclusive.
constexpr double kRangeSlack = 1e-9;

double RoundToCents(double v) { return std::round(v * 100.0) / 100.0; }

bool InRange(double value, const CostRange& range, double anchor) {
  return value >= anchor + range.low - 1e-9 &&
         value <= anchor + range.high + 1e-9;
}

}  // namespace

std::string ToString(const SensorId& id) {
  return "(" + std::to_string(id.node) + "," + std::to_string(id.kind) + ")";
}

std::string_view MetricName(DistanceMetric metric) {
  switch (metric) {
    case DistanceMetric::kEuclidean:
      return "euclidean";
    case DistanceMetric::kChebyshev:
      return "chebyshev";
  }
  return "euclidean";
}

DistanceMetric ParseMetric(std::string_view name) {
  if (name == "euclidean") return DistanceMetric::kEuclidean;
  if (name == "chebyshev") return DistanceMetric::kChebyshev;
  throw std::invalid_argument("unknown distance metric '" + std::string(name) +
                              "'");
}

std::string_view LevelName(Level level) {
  switch (level) {
    case Level::kLow:
      return "low";
    case Level::kMedium:
      return "medium";
    case Level::kHigh:
      return "high";
  }
  return "low";
}

Level ParseLevel(std::string_view name) {
  if (name == "low") return Level::kLow;
  if (name == "medium") return Level::kMedium;
  if (name == "high") return Level::kHigh;
  throw std::invalid_argument("unknown level '" + std::string(name) +
                              "' (expected low, medium or high)");
}

CoefficientMatrices::CoefficientMatrices(int nodes, int kinds_with_sink)
    : nodes_(nodes),
      kinds_(kinds_with_sink),
      coverage_(static_cast<std::size_t>(nodes) * nodes * kinds_with_sink, 0),
      comm_(static_cast<std::size_t>(nodes) * nodes * kinds_with_sink, 0) {}

CoefficientMatrices ComputeCoefficients(const InstanceData& data) {
  const int n = data.side * data.side;
  const int kinds = static_cast<int>(data.types.size());
  CoefficientMatrices m(n, kinds);
  auto dist = [&](NodeId i, NodeId j, DistanceMetric metric) {
    const double dx = std::abs((i - 1) % data.side - (j - 1) % data.side);
    const double dy = std::abs((i - 1) / data.side - (j - 1) / data.side);
    return metric == DistanceMetric::kEuclidean ? std::hypot(dx, dy)
                                                : std::max(dx, dy);
  };
  for (NodeId i = 1; i <= n; ++i) {
    for (NodeId j = 1; j <= n; ++j) {
      const double ds = dist(i, j, data.sensing_metric);
      const double dc = dist(i, j, data.comm_metric);
      for (int k = 1; k < kinds; ++k) {
        const SensorType& type = data.types[k];
        m.set_coverage(i, j, k, ds <= type.sensing_range + kRangeSlack);
        m.set_comm(j, k, i, dc <= type.comm_range + kRangeSlack);
      }
    }
  }
  return m;
}

Instance::Instance(InstanceData data) : data_(std::move(data)) {
  if (data_.side < 1) throw std::invalid_argument("grid side must be >= 1");
  if (data_.types.empty() || !data_.types[0].is_sink()) {
    throw std::invalid_argument("types[0] must be the sink kind");
  }
  const int n = node_count();
  const int kinds = static_cast<int>(data_.types.size());
  for (int k = 0; k < kinds; ++k) {
    const SensorType& t = data_.types[k];
    if (t.kind != k) throw std::invalid_argument("types must be ordered by kind");
    if (t.sensing_range < 0 || t.comm_range < 0 || t.sense_energy < 0 ||
        t.receive_energy < 0 || t.transmit_energy < 0 || t.initial_energy < 0 ||
        t.packets_per_period < 0) {
      throw std::invalid_argument("energies, ranges and packets must be >= 0");
    }
    if (k == 0 && (t.packets_per_period != 0 || t.sensing_range != 0 ||
                   t.comm_range != 0 || t.sense_energy != 0 ||
                   t.receive_energy != 0 || t.transmit_energy != 0)) {
      throw std::invalid_argument("sink kind must not sense, transmit or drain");
    }
  }
  if (static_cast<int>(data_.costs.size()) != n * kinds) {
    throw std::invalid_argument("cost table must have N * (K + 1) entries");
  }
  if (static_cast<int>(data_.coverage_requirement.size()) != n) {
    throw std::invalid_argument("coverage requirement must have N entries");
  }
  if (data_.horizon < 1) throw std::invalid_argument("horizon must be >= 1");
  if (data_.alpha < 0) throw std::invalid_argument("alpha must be >= 0");
  if (data_.sink_count < 0 || data_.sink_count > n) {
    throw std::invalid_argument("sink count must lie in [0, N]");
  }
  data_.types[0].initial_energy = kUnboundedEnergy;

  coefficients_ = ComputeCoefficients(data_);
  for (int k = 1; k < kinds; ++k) {
    max_packets_ = std::max(max_packets_, data_.types[k].packets_per_period);
  }

  const int sensors = sensor_count();
  covered_nodes_.assign(sensors, {});
  coverers_.assign(n, {});
  out_neighbors_.assign(sensors, {});
  in_neighbors_.assign(sensors, {});
  reachable_nodes_.assign(sensors, {});
  for (int s = 0; s < sensors; ++s) {
    const SensorId id = sensor_at(s);
    for (NodeId i = 1; i <= n; ++i) {
      if (covers(i, id.node, id.kind)) {
        covered_nodes_[s].push_back(i);
        coverers_[i - 1].push_back(s);
      }
      if (reaches(id.node, id.kind, i)) reachable_nodes_[s].push_back(i);
    }
    for (int other = 0; other < sensors; ++other) {
      if (other == s) continue;
      if (reaches(id.node, id.kind, sensor_at(other).node)) {
        out_neighbors_[s].push_back(other);
        in_neighbors_[other].push_back(s);
      }
    }
  }
}

double Instance::distance(NodeId i, NodeId j, DistanceMetric metric) const {
  const auto [xi, yi] = coords(i);
  const auto [xj, yj] = coords(j);
  const double dx = std::abs(xi - xj);
  const double dy = std::abs(yi - yj);
  return metric == DistanceMetric::kEuclidean ? std::hypot(dx, dy)
                                              : std::max(dx, dy);
}

Instance Instance::WithBudget(double budget) const {
  Instance copy = *this;
  copy.data_.budget = budget;
  return copy;
}

bool operator==(const Instance& a, const Instance& b) {
  const InstanceData& x = a.data_;
  const InstanceData& y = b.data_;
  if (x.side != y.side || x.costs != y.costs ||
      x.coverage_requirement != y.coverage_requirement || x.alpha != y.alpha ||
      x.horizon != y.horizon || x.budget != y.budget ||
      x.sink_count != y.sink_count || x.sensing_metric != y.sensing_metric ||
      x.comm_metric != y.comm_metric || x.types.size() != y.types.size()) {
    return false;
  }
  for (std::size_t k = 0; k < x.types.size(); ++k) {
    const SensorType& s = x.types[k];
    const SensorType& t = y.types[k];
    if (s.kind != t.kind || s.cost_range.low != t.cost_range.low ||
        s.cost_range.high != t.cost_range.high ||
        s.cost_range.anchor_kind != t.cost_range.anchor_kind ||
        s.packets_per_period != t.packets_per_period ||
        s.sensing_range != t.sensing_range || s.comm_range != t.comm_range ||
        s.sense_energy != t.sense_energy ||
        s.receive_energy != t.receive_energy ||
        s.transmit_energy != t.transmit_energy ||
        s.initial_energy != t.initial_energy) {
      return false;
    }
  }
  return true;
}

std::vector<SensorType> DefaultSensorTypes() {
  SensorType sink;
  sink.kind = 0;
  sink.cost_range = {10.0, 15.0, -1};
  sink.initial_energy = kUnboundedEnergy;

  SensorType small;
  small.kind = 1;
  small.cost_range = {1.0, 10.0, -1};
  small.packets_per_period = 24;
  small.sensing_range = 1.0;
  small.comm_range = 1.5;
  small.sense_energy = 744.0;
  small.receive_energy = 0.01;
  small.transmit_energy = 0.013;
  small.initial_energy = 57600.0;

  SensorType large;
  large.kind = 2;
  large.cost_range = {0.0, 5.0, 1};
  large.packets_per_period = 24;
  large.sensing_range = 2.0;
  large.comm_range = 3.0;
  large.sense_energy = 744.0;
  large.receive_energy = 0.01;
  large.transmit_energy = 0.018;
  large.initial_energy = 86400.0;
  return {sink, small, large};
}

double EnergyFraction(Level level) {
  switch (level) {
    case Level::kLow:
      return 1.0 / 3.0;
    case Level::kMedium:
      return 2.0 / 3.0;
    case Level::kHigh:
      return 1.0;
  }
  return 1.0;
}

double ComputeBudget(const InstanceData& data, Level level) {
  if (data.types.size() != 3) {
    throw std::invalid_argument("budget levels are defined for K = 2 only");
  }
  const int n = data.side * data.side;
  double sums[3] = {0.0, 0.0, 0.0};
  for (int j = 0; j < n; ++j) {
    for (int k = 0; k < 3; ++k) sums[k] += data.costs[j * 3 + k];
  }
  double beta1 = 0.75;
  double beta2 = 0.25;
  if (level == Level::kMedium) {
    beta1 = beta2 = 0.5;
  } else if (level == Level::kHigh) {
    beta1 = 0.25;
    beta2 = 0.75;
  }
  return static_cast<double>(data.sink_count) / n * sums[0] + beta1 * sums[1] +
         beta2 * sums[2];
}

double ComputeBudget(const Instance& instance, Level level) {
  return ComputeBudget(instance.data(), level);
}

double ComputeBudget(const Instance& instance, std::string_view level) {
  return ComputeBudget(instance, ParseLevel(level));
}

Instance BuildInstance(const GeneratorConfig& config, std::uint64_t seed) {
  const int side = static_cast<int>(std::lround(std::sqrt(config.nodes)));
  if (config.nodes < 1 || side * side != config.nodes) {
    throw std::invalid_argument("node count " + std::to_string(config.nodes) +
                                " is not a perfect square");
  }
  InstanceData data;
  data.side = side;
  data.types = config.types;
  const double fraction = EnergyFraction(config.energy);
  for (std::size_t k = 1; k < data.types.size(); ++k) {
    data.types[k].initial_energy *= fraction;
  }
  data.coverage_requirement.assign(config.nodes, config.coverage_requirement);
  data.alpha = config.alpha;
  data.horizon = config.horizon;
  data.sink_count = config.sink_count;
  data.sensing_metric = config.sensing_metric;
  data.comm_metric = config.comm_metric;

  const int kinds = static_cast<int>(data.types.size());
  data.costs.assign(static_cast<std::size_t>(config.nodes) * kinds, 0.0);
  std::mt19937_64 rng(seed);
  for (int j = 0; j < config.nodes; ++j) {
    for (int k = 0; k < kinds; ++k) {
      const CostRange& range = data.types[k].cost_range;
      const double anchor =
          range.anchor_kind >= 0 ? data.costs[j * kinds + range.anchor_kind]
                                 : 0.0;
      std::uniform_real_distribution<double> draw(anchor + range.low,
                                                  anchor + range.high);
      double c = RoundToCents(draw(rng));
      if (!InRange(c, range, anchor)) c = RoundToCents(anchor + range.low);
      data.costs[j * kinds + k] = c;
    }
  }
  data.budget = config.budget_override >= 0.0
                    ? config.budget_override
                    : ComputeBudget(data, config.budget);
  return Instance(std::move(data));
}

}  // namespace wsnlife
