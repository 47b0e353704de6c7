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

// Network instance data model: grid geometry, sensor catalogue, deployment
// costs and the derived coverage (a) and communication (b) coefficients.

#ifndef WSNLIFE_INSTANCE_H_
#define WSNLIFE_INSTANCE_H_

#include <compare>
#include <cstdint>
#include <limits>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace wsnlife {

// Nodes are numbered 1..N in row-major order; node 1 is the top-left corner.
using NodeId = int;

// Kind 0 is a sink, kinds 1..K are sensor types.
inline constexpr int kSinkKind = 0;

struct SensorId {
  NodeId node = 0;
  int kind = 0;

  friend auto operator<=>(const SensorId&, const SensorId&) = default;
};

std::string ToString(const SensorId& id);

enum class DistanceMetric { kEuclidean, kChebyshev };

std::string_view MetricName(DistanceMetric metric);
DistanceMetric ParseMetric(std::string_view name);

// Low / medium / high settings used for both battery and budget levels.
enum class Level { kLow, kMedium, kHigh };

std::string_view LevelName(Level level);
// Throws std::invalid_argument for anything but "low", "medium", "high".
Level ParseLevel(std::string_view name);

// Closed interval a deployment cost is drawn from. When `anchor_kind` is
// non-negative the interval is an offset added to the cost of that kind at the
// same node, e.g. type-2 costs lie in (c_j1, c_j1 + 5).
struct CostRange {
  double low = 0.0;
  double high = 0.0;
  int anchor_kind = -1;
};

struct SensorType {
  int kind = 0;
  CostRange cost_range;
  int packets_per_period = 0;  // h
  double sensing_range = 0.0;  // r^s
  double comm_range = 0.0;     // r^c
  double sense_energy = 0.0;   // e^s, per active period
  double receive_energy = 0.0; // e^r, per packet
  double transmit_energy = 0.0;  // e^c, per packet
  double initial_energy = 0.0;   // E, infinite for sinks

  bool is_sink() const { return kind == kSinkKind; }
};

inline constexpr double kUnboundedEnergy =
    std::numeric_limits<double>::infinity();

// Dense 0/1 tensors a_{ijk} and b_{ilj}, both stored as [node][node][kind].
class CoefficientMatrices {
 public:
  CoefficientMatrices() = default;
  CoefficientMatrices(int nodes, int kinds_with_sink);

  // a_{ijk}: node i is inside the sensing range of sensor (j, k).
  bool coverage(NodeId i, NodeId j, int k) const {
    return coverage_[Offset(i, j, k)] != 0;
  }
  // b_{ilj}: sensor (i, l) can transmit to a device at node j.
  bool comm(NodeId i, int l, NodeId j) const {
    return comm_[Offset(j, i, l)] != 0;
  }

  void set_coverage(NodeId i, NodeId j, int k, bool v) {
    coverage_[Offset(i, j, k)] = v;
  }
  void set_comm(NodeId i, int l, NodeId j, bool v) {
    comm_[Offset(j, i, l)] = v;
  }

  int nodes() const { return nodes_; }

 private:
  std::size_t Offset(NodeId target, NodeId source, int kind) const {
    return (static_cast<std::size_t>(target - 1) * nodes_ + (source - 1)) *
               kinds_ +
           kind;
  }

  int nodes_ = 0;
  int kinds_ = 0;
  std::vector<std::uint8_t> coverage_;
  std::vector<std::uint8_t> comm_;
};

struct InstanceData {
  int side = 0;
  std::vector<SensorType> types;  // index == kind, types[0] is the sink
  // Deployment cost c_{jk}, indexed [(j - 1) * (K + 1) + k].
  std::vector<double> costs;
  std::vector<int> coverage_requirement;  // f_i, indexed [i - 1]
  int alpha = 1;
  int horizon = 1;
  double budget = 0.0;
  int sink_count = 0;
  DistanceMetric sensing_metric = DistanceMetric::kEuclidean;
  DistanceMetric comm_metric = DistanceMetric::kEuclidean;
};

// Immutable once constructed; safe to share between threads.
class Instance {
 public:
  // Validates the data and precomputes the coefficient matrices together with
  // sparse neighbourhood lists. Throws std::invalid_argument on bad input.
  explicit Instance(InstanceData data);

  const InstanceData& data() const { return data_; }

  int side() const { return data_.side; }
  int node_count() const { return data_.side * data_.side; }
  int sensor_kinds() const { return static_cast<int>(data_.types.size()) - 1; }
  int alpha() const { return data_.alpha; }
  int horizon() const { return data_.horizon; }
  double budget() const { return data_.budget; }
  int sink_count() const { return data_.sink_count; }

  const SensorType& type(int kind) const { return data_.types[kind]; }
  double cost(NodeId j, int kind) const {
    return data_.costs[(j - 1) * (sensor_kinds() + 1) + kind];
  }
  double cost(const SensorId& s) const { return cost(s.node, s.kind); }
  int coverage_requirement(NodeId i) const {
    return data_.coverage_requirement[i - 1];
  }

  // Zero-based unit-grid coordinates (column, row) of a node.
  std::pair<int, int> coords(NodeId j) const {
    return {(j - 1) % data_.side, (j - 1) / data_.side};
  }
  double distance(NodeId i, NodeId j, DistanceMetric metric) const;

  const CoefficientMatrices& coefficients() const { return coefficients_; }
  bool covers(NodeId i, NodeId j, int k) const {
    return coefficients_.coverage(i, j, k);
  }
  bool reaches(NodeId i, int l, NodeId j) const {
    return coefficients_.comm(i, l, j);
  }

  // max_{(j,k)} h_{jk} over sensor kinds.
  int max_packets() const { return max_packets_; }

  // Sensors (kinds 1..K) are also addressed by a dense index
  // (node - 1) * K + (kind - 1).
  int sensor_count() const { return node_count() * sensor_kinds(); }
  int sensor_index(const SensorId& s) const {
    return (s.node - 1) * sensor_kinds() + (s.kind - 1);
  }
  SensorId sensor_at(int index) const {
    return {index / sensor_kinds() + 1, index % sensor_kinds() + 1};
  }
  const SensorType& sensor_type(int index) const {
    return data_.types[index % sensor_kinds() + 1];
  }
  double sensor_cost(int index) const { return cost(sensor_at(index)); }

  // Nodes (1-based) inside the sensing range of a sensor.
  std::span<const NodeId> covered_nodes(int sensor) const {
    return covered_nodes_[sensor];
  }
  // Sensors whose sensing range contains node i.
  std::span<const int> coverers(NodeId i) const { return coverers_[i - 1]; }
  // Other sensors this sensor can transmit to.
  std::span<const int> out_neighbors(int sensor) const {
    return out_neighbors_[sensor];
  }
  // Other sensors able to transmit to this sensor.
  std::span<const int> in_neighbors(int sensor) const {
    return in_neighbors_[sensor];
  }
  // Nodes (1-based) a sensor can transmit to, i.e. candidate sink positions.
  std::span<const NodeId> reachable_nodes(int sensor) const {
    return reachable_nodes_[sensor];
  }

  // Copy with a different budget; everything else is shared.
  Instance WithBudget(double budget) const;

  friend bool operator==(const Instance& a, const Instance& b);

 private:
  InstanceData data_;
  CoefficientMatrices coefficients_;
  int max_packets_ = 0;
  std::vector<std::vector<NodeId>> covered_nodes_;
  std::vector<std::vector<int>> coverers_;
  std::vector<std::vector<int>> out_neighbors_;
  std::vector<std::vector<int>> in_neighbors_;
  std::vector<std::vector<NodeId>> reachable_nodes_;
};

// Fills a and b from node coordinates and the sensor ranges. Sinks (kind 0)
// neither cover nor transmit.
CoefficientMatrices ComputeCoefficients(const InstanceData& data);

// The sensor catalogue used in the computational study: sink plus two sensor
// kinds, with full-battery energies (57600 / 86400).
std::vector<SensorType> DefaultSensorTypes();

// Fraction of the full battery for an energy level: 1/3, 2/3, 1.
double EnergyFraction(Level level);

struct GeneratorConfig {
  int nodes = 16;  // must be a perfect square
  int sink_count = 2;
  int horizon = 400;
  int alpha = 1;
  int coverage_requirement = 2;
  Level energy = Level::kLow;
  Level budget = Level::kLow;
  std::vector<SensorType> types = DefaultSensorTypes();
  DistanceMetric sensing_metric = DistanceMetric::kEuclidean;
  DistanceMetric comm_metric = DistanceMetric::kEuclidean;
  // Replaces the budget formula (needed when K != 2).
  double budget_override = -1.0;
};

// Deterministic in `seed`. Costs are drawn uniformly from each kind's range
// and rounded to cents. Throws std::invalid_argument for non-square N.
Instance BuildInstance(const GeneratorConfig& config, std::uint64_t seed);

// (S/N) sum c_j0 + beta_1 sum c_j1 + beta_2 sum c_j2 with
// (beta_1, beta_2) = (0.75, 0.25), (0.5, 0.5), (0.25, 0.75).
double ComputeBudget(const InstanceData& data, Level level);
double ComputeBudget(const Instance& instance, Level level);
// Accepts "low" / "medium" / "high".
double ComputeBudget(const Instance& instance, std::string_view level);

}  // namespace wsnlife

#endif  // WSNLIFE_INSTANCE_H_
