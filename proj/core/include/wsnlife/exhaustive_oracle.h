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

#ifndef WSNLIFE_EXHAUSTIVE_ORACLE_H_
#define WSNLIFE_EXHAUSTIVE_ORACLE_H_

#include <cstdint>
#include <optional>
#include <stdexcept>

#include "wsnlife/instance.h"
#include "wsnlife/solution.h"

namespace wsnlife {

struct OracleCaps {
  int max_nodes = 6;
  int max_kinds = 2;
  int max_horizon = 3;
  int max_sinks = 2;
};

class OracleRefused : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

struct OracleResult {
  int lifetime = 0;
  // Absent only when no sink placement fits the budget.
  std::optional<Solution> witness;
  std::int64_t routing_calls = 0;
};

// Maximum lifetime over all sink sets, deployments, activity schedules and
// sink assignments, with every period routed by SolveRoutingProblem.
// Throws OracleRefused when the instance exceeds the caps.
OracleResult ExhaustiveOracle(const Instance& instance,
                              const OracleCaps& caps = {});

}  // namespace wsnlife

#endif  // WSNLIFE_EXHAUSTIVE_ORACLE_H_
