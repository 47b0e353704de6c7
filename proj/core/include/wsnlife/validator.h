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

// Feasibility checker for complete solutions. Every constraint family of the
// lifetime model reports its own violations under a stable identifier.

#ifndef WSNLIFE_VALIDATOR_H_
#define WSNLIFE_VALIDATOR_H_

#include <string>
#include <string_view>
#include <vector>

#include "wsnlife/instance.h"
#include "wsnlife/solution.h"

namespace wsnlife {

namespace family {
inline constexpr std::string_view kDimension = "dimension";
inline constexpr std::string_view kLifetime = "lifetime";
inline constexpr std::string_view kCoverage = "coverage";
inline constexpr std::string_view kActivityLinking = "activity-linking";
inline constexpr std::string_view kAlphaConnectivity = "alpha-connectivity";
inline constexpr std::string_view kSinkAssignment = "sink-assignment";
inline constexpr std::string_view kFlowCapacity = "flow-capacity";
inline constexpr std::string_view kSelfFlow = "self-flow";
inline constexpr std::string_view kFlowBalance = "flow-balance";
inline constexpr std::string_view kSinkInflow = "sink-inflow";
inline constexpr std::string_view kRouteConsistency = "route-consistency";
inline constexpr std::string_view kEnergy = "energy";
inline constexpr std::string_view kBudget = "budget";
inline constexpr std::string_view kSinkCount = "sink-count";
}  // namespace family

// Absolute tolerance on packet quantities, energies and money.
inline constexpr double kFeasibilityTolerance = 1e-6;

struct Violation {
  std::string family;
  // Index tuple of the violated row, e.g. {t, i} for coverage of node i.
  std::vector<int> location;
  double magnitude = 0.0;  // always > 0
  std::string detail;
};

struct ValidationReport {
  std::vector<Violation> violations;

  bool feasible() const { return violations.empty(); }
  int Count(std::string_view family_id) const;
  // One line per violation.
  std::string Summary() const;
};

// Big-M constants of the flow bounds.
double SensorFlowBound(const Instance& instance);  // max h * (NK - 1)
double SinkFlowBound(const Instance& instance);    // max h * NK

ValidationReport Validate(const Instance& instance, const Solution& solution);

// Total energy each sensor consumes over the horizon, indexed by sensor index.
std::vector<double> LifetimeEnergyAudit(const Instance& instance,
                                        const Solution& solution);

}  // namespace wsnlife

#endif  // WSNLIFE_VALIDATOR_H_
