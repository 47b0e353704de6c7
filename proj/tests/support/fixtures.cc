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

#include "fixtures.h"

#include <utility>

#include "wsnlife/serialization.h"

namespace wsnlife::testing {
namespace {

InstanceData GridData(int side, int sinks, int horizon) {
  InstanceData data;
  data.side = side;
  data.types = DefaultSensorTypes();
  for (std::size_t k = 1; k < data.types.size(); ++k) {
    data.types[k].initial_energy *= EnergyFraction(Level::kLow);
  }
  const int n = side * side;
  for (int j = 0; j < n; ++j) {
    data.costs.insert(data.costs.end(), {12.0, 5.0, 8.0});
  }
  data.coverage_requirement.assign(n, 0);
  data.horizon = horizon;
  data.sink_count = sinks;
  data.budget = 1000.0;
  return data;
}

}  // namespace

std::string DataPath(const std::string& file) {
  return std::string(WSNLIFE_TEST_DATA_DIR) + "/" + file;
}

Instance SampleNetworkInstance() {
  return InstanceFromJson(ReadTextFile(DataPath("sample_network_instance.json")));
}

Solution SampleNetworkSolution() {
  return SolutionFromJson(ReadTextFile(DataPath("sample_network_solution.json")));
}

Instance ChainInstance() { return Instance(GridData(3, 1, 1)); }

Solution ChainSolution() {
  Solution s(9, 2, 1);
  s.set_lifetime(1);
  s.set_period_on(1, true);
  s.set_deployed(3, 0, true);
  s.set_deployed(1, 1, true);
  s.set_deployed(2, 1, true);
  s.set_active(1, 1, 1, true);
  s.set_active(2, 1, 1, true);
  s.assignments(1) = {{3, {1, 1}}, {3, {2, 1}}};
  s.sensor_flows(1) = {{{1, 1}, {2, 1}, 24.0}};
  s.sink_flows(1) = {{{2, 1}, 3, 48.0}};
  s.Canonicalize();
  return s;
}

Instance EmptyFriendlyInstance() { return Instance(GridData(3, 0, 4)); }

}  // namespace wsnlife::testing
