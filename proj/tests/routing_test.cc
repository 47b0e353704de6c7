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

#include <algorithm>
#include <cmath>
#include <sstream>
#include <stdexcept>
#include <vector>

#include "fixtures.h"
#include "gtest/gtest.h"
#include "routing_cases.h"
#include "wsnlife/instance.h"
#include "wsnlife/routing.h"
#include "wsnlife/solution.h"

namespace wsnlife {
namespace {

using ::wsnlife::testing::ChainInstance;

PeriodState ChainState(const Instance& instance,
                       const std::vector<SensorId>& active) {
  PeriodState state;
  state.sinks = {3};
  for (const SensorId& s : active) {
    state.active.push_back(instance.sensor_index(s));
    state.assigned_sink.push_back(3);
  }
  state.remaining_energy.resize(instance.sensor_count());
  for (int s = 0; s < instance.sensor_count(); ++s) {
    state.remaining_energy[s] = instance.sensor_type(s).initial_energy;
  }
  return state;
}

template <typename Flow>
std::vector<Flow> Sorted(std::vector<Flow> flows) {
  std::sort(flows.begin(), flows.end(), [](const Flow& a, const Flow& b) {
    std::ostringstream x, y;
    x << ToString(a.from) << a.packets;
    y << ToString(b.from) << b.packets;
    return x.str() < y.str();
  });
  return flows;
}

TEST(SolveRoutingProblemTest, TwoHopChain) {
  const Instance instance = ChainInstance();
  const PeriodState state = ChainState(instance, {{1, 1}, {2, 1}});
  const RoutingResult result = SolveRoutingProblem(instance, state);
  ASSERT_TRUE(result.feasible) << result.diagnostic;
  ASSERT_EQ(result.sensor_flows.size(), 1u);
  EXPECT_EQ(result.sensor_flows[0].from, (SensorId{1, 1}));
  EXPECT_EQ(result.sensor_flows[0].to, (SensorId{2, 1}));
  EXPECT_EQ(result.sensor_flows[0].packets, 24.0);
  ASSERT_EQ(result.sink_flows.size(), 1u);
  EXPECT_EQ(result.sink_flows[0].from, (SensorId{2, 1}));
  EXPECT_EQ(result.sink_flows[0].packets, 48.0);
  EXPECT_NEAR(result.objective, 1489.176, 1e-9);
  EXPECT_EQ(testing::CheckRoutingIdentities(instance, state, result), "");
}

TEST(SolveRoutingProblemTest, SingleSensorNextToItsSink) {
  const Instance instance = ChainInstance();
  const RoutingResult result =
      SolveRoutingProblem(instance, ChainState(instance, {{2, 1}}));
  ASSERT_TRUE(result.feasible);
  EXPECT_TRUE(result.sensor_flows.empty());
  ASSERT_EQ(result.sink_flows.size(), 1u);
  EXPECT_EQ(result.sink_flows[0].packets, 24.0);
  EXPECT_NEAR(result.objective, 744.0 + 0.013 * 24, 1e-12);
}

TEST(SolveRoutingProblemTest, StrandedSensorIsNamed) {
  const Instance instance = ChainInstance();
  const RoutingResult result =
      SolveRoutingProblem(instance, ChainState(instance, {{1, 1}}));
  EXPECT_FALSE(result.feasible);
  EXPECT_EQ(result.stranded, (SensorId{1, 1}));
  EXPECT_FALSE(result.diagnostic.empty());
}

TEST(SolveRoutingProblemTest, ReproducesSampleNetworkSecondPeriod) {
  const Instance instance = testing::SampleNetworkInstance();
  const Solution solution = testing::SampleNetworkSolution();
  const EnergyLedger ledger(instance);
  const PeriodState state =
      MakePeriodState(instance, solution, 2, ledger.row(1));
  const RoutingResult result = SolveRoutingProblem(instance, state);
  ASSERT_TRUE(result.feasible) << result.diagnostic;
  EXPECT_EQ(Sorted(result.sensor_flows), Sorted(solution.sensor_flows(2)));
  EXPECT_EQ(Sorted(result.sink_flows), Sorted(solution.sink_flows(2)));
  ASSERT_EQ(result.sensor_flows.size(), 1u);
  EXPECT_EQ(result.sensor_flows[0].from, (SensorId{2, 1}));
  EXPECT_EQ(result.sensor_flows[0].to, (SensorId{4, 2}));
}

TEST(MakePeriodStateTest, RejectsUnassignedSensors) {
  const Instance instance = testing::SampleNetworkInstance();
  Solution solution = testing::SampleNetworkSolution();
  solution.assignments(1).pop_back();
  const EnergyLedger ledger(instance);
  EXPECT_THROW(MakePeriodState(instance, solution, 1, ledger.row(1)),
               std::invalid_argument);
}

TEST(UpdateEnergyTest, SubtractsConsumption) {
  const Instance instance = ChainInstance();
  const RoutingResult result =
      SolveRoutingProblem(instance, ChainState(instance, {{1, 1}, {2, 1}}));
  EnergyLedger ledger(instance);
  UpdateEnergy(ledger, 1, result);
  ASSERT_EQ(ledger.periods(), 2);
  EXPECT_NEAR(ledger.remaining(instance.sensor_index({2, 1}), 2), 18455.136,
              1e-9);
  EXPECT_EQ(ledger.remaining(instance.sensor_index({7, 2}), 2),
            ledger.remaining(instance.sensor_index({7, 2}), 1));
  for (int s = 0; s < instance.sensor_count(); ++s) {
    EXPECT_LE(ledger.remaining(s, 2), ledger.remaining(s, 1));
  }
}

TEST(UpdateEnergyTest, RepeatedSensingDrainsTheBattery) {
  const Instance instance = ChainInstance();
  EnergyLedger ledger(instance);
  RoutingResult idle;
  idle.consumption.assign(instance.sensor_count(), 0.0);
  idle.consumption[instance.sensor_index({5, 1})] = 744.0;
  for (int t = 1; t <= 25; ++t) UpdateEnergy(ledger, t, idle);
  EXPECT_NEAR(ledger.remaining(instance.sensor_index({5, 1}), 26), 600.0,
              1e-9);
  EXPECT_THROW(UpdateEnergy(ledger, 26, idle), std::logic_error);
}

TEST(MaxOutflowBoundTest, ScalesWithActiveCount) {
  const Instance instance = ChainInstance();
  EXPECT_EQ(MaxOutflowBound(4, instance), 96);
  EXPECT_EQ(MaxOutflowBound(0, instance), 0);
  EXPECT_EQ(MaxOutflowBound(1, instance), 24);
}

TEST(SolveRoutingProblemTest, MatchesLinearProgramOnRandomStates) {
  int capacity_bound = 0;
  for (std::uint64_t seed = 1; seed <= 200; ++seed) {
    const testing::RoutingCase c = testing::MakeRoutingCase(seed);
    const RoutingResult result = SolveRoutingProblem(c.instance, c.state);
    const testing::RoutingOracle oracle =
        testing::SolveRoutingByLp(c.instance, c.state);
    ASSERT_EQ(result.feasible, oracle.feasible) << "seed " << seed;
    if (!oracle.feasible) continue;
    EXPECT_NEAR(result.objective, oracle.objective, 1e-6) << "seed " << seed;
    EXPECT_EQ(testing::CheckRoutingIdentities(c.instance, c.state, result), "")
        << "seed " << seed;
    for (int s : c.state.active) {
      if (c.state.remaining_energy[s] - result.consumption[s] < 1e-6) {
        ++capacity_bound;
      }
    }
  }
  // Some states must actually exercise the relay capacities.
  EXPECT_GT(capacity_bound, 0);
}

}  // namespace
}  // namespace wsnlife
