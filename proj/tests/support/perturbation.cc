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

#include "perturbation.h"

#include <sstream>
#include <vector>

#include "wsnlife/milp_export.h"
#include "wsnlife/validator.h"

namespace wsnlife::testing {
namespace {

int Uniform(std::mt19937_64& rng, int low, int high) {
  return std::uniform_int_distribution<int>(low, high)(rng);
}

SensorId RandomSensor(const Instance& in, std::mt19937_64& rng) {
  return in.sensor_at(Uniform(rng, 0, in.sensor_count() - 1));
}

}  // namespace

Solution Perturb(const Instance& in, const Solution& solution,
                 std::mt19937_64& rng) {
  Solution s = solution;
  const int t = Uniform(rng, 1, in.horizon());
  const int h = in.max_packets();
  switch (Uniform(rng, 0, 7)) {
    case 0: {
      const SensorId id = RandomSensor(in, rng);
      s.set_active(id.node, id.kind, t, !s.active(id.node, id.kind, t));
      break;
    }
    case 1: {
      const NodeId j = Uniform(rng, 1, in.node_count());
      const int k = Uniform(rng, 0, in.sensor_kinds());
      s.set_deployed(j, k, !s.deployed(j, k));
      break;
    }
    case 2: {
      auto& flows = s.sink_flows(t);
      if (flows.empty()) break;
      const int f = Uniform(rng, 0, static_cast<int>(flows.size()) - 1);
      flows[f].packets = Uniform(rng, 0, 2 * h);
      if (flows[f].packets == 0.0) flows.erase(flows.begin() + f);
      break;
    }
    case 3: {
      auto& flows = s.sensor_flows(t);
      if (flows.empty() || Uniform(rng, 0, 1) == 0) {
        flows.push_back({RandomSensor(in, rng), RandomSensor(in, rng),
                         static_cast<double>(Uniform(rng, 1, h))});
      } else {
        flows.pop_back();
      }
      break;
    }
    case 4: {
      auto& list = s.assignments(t);
      if (list.empty()) break;
      const int a = Uniform(rng, 0, static_cast<int>(list.size()) - 1);
      if (Uniform(rng, 0, 1) == 0) {
        list.erase(list.begin() + a);
      } else {
        list[a].sink = Uniform(rng, 1, in.node_count());
      }
      break;
    }
    case 5: {
      // Consistent truncation: always a feasible edit of a feasible point.
      const int l = s.lifetime();
      if (l == 0) break;
      s.set_lifetime(l - 1);
      s.set_period_on(l, false);
      for (NodeId j = 1; j <= in.node_count(); ++j) {
        for (int k = 1; k <= in.sensor_kinds(); ++k) s.set_active(j, k, l, false);
      }
      s.assignments(l).clear();
      s.sensor_flows(l).clear();
      s.sink_flows(l).clear();
      break;
    }
    case 6:
      s.set_lifetime(Uniform(rng, 0, in.horizon()));
      break;
    default:
      s.set_period_on(t, !s.period_on(t));
      break;
  }
  s.Canonicalize();
  return s;
}

std::string CompareValidatorWithRows(const Instance& instance,
                                     const Solution& solution) {
  ExportOptions options;
  options.alpha_outflow_cut = false;
  const MilpModel model = BuildMilpModel(instance, options);
  const std::vector<double> values =
      SolutionValues(model, instance, solution);
  const std::vector<RowViolation> rows = CheckRows(model, values);
  const ValidationReport report = Validate(instance, solution);
  if (report.feasible() == rows.empty()) return {};
  std::ostringstream out;
  out << "validator says " << (report.feasible() ? "feasible" : "infeasible")
      << ", rows say " << (rows.empty() ? "feasible" : "infeasible") << "\n"
      << report.Summary();
  for (const RowViolation& r : rows) {
    out << "row " << r.row << " (" << r.family << ") by " << r.amount << "\n";
  }
  return out.str();
}

}  // namespace wsnlife::testing
