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

#include <cmath>
#include <deque>
#include <numeric>
#include <random>
#include <sstream>
#include <stdexcept>
#include <vector>

#include "gtest/gtest.h"
#include "wsnlife/instance.h"
#include "wsnlife/search.h"
#include "wsnlife/validator.h"

namespace wsnlife {
namespace {

double Binomial(int n, int k) {
  if (k < 0 || k > n) return 0.0;
  double r = 1.0;
  for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

SearchConfig QuickConfig(std::uint64_t seed) {
  SearchConfig config = LocalSearchDefaults();
  config.iteration_limit = 4;
  config.no_improvement_limit = 2;
  config.seed = seed;
  return config;
}

TEST(SinkSamplingDistributionTest, ThreeNodeExample) {
  const std::vector<double> costs = {10.0, 12.0, 14.0};
  const std::vector<double> p = SinkSamplingDistribution(costs);
  ASSERT_EQ(p.size(), 3u);
  EXPECT_NEAR(p[0], 26.0 / 72.0, 1e-12);
  EXPECT_NEAR(p[1], 24.0 / 72.0, 1e-12);
  EXPECT_NEAR(p[2], 22.0 / 72.0, 1e-12);
}

TEST(SinkSamplingDistributionTest, UniformAndNormalized) {
  const std::vector<double> flat(16, 12.5);
  for (double p : SinkSamplingDistribution(flat)) EXPECT_NEAR(p, 1.0 / 16, 1e-12);
  std::mt19937_64 rng(3);
  std::uniform_real_distribution<double> cost(10.0, 15.0);
  for (int n : {2, 5, 49}) {
    std::vector<double> costs(n);
    for (double& c : costs) c = cost(rng);
    const std::vector<double> p = SinkSamplingDistribution(costs);
    EXPECT_NEAR(std::accumulate(p.begin(), p.end(), 0.0), 1.0, 1e-12);
  }
  const std::vector<double> single = {4.0};
  EXPECT_THROW(SinkSamplingDistribution(single), std::invalid_argument);
  const std::vector<double> free = {0.0, 0.0};
  EXPECT_THROW(SinkSamplingDistribution(free), std::invalid_argument);
}

TEST(NeighborhoodSizeTest, BinomialProducts) {
  EXPECT_EQ(NeighborhoodSize(16, 2, 1), 28);
  EXPECT_EQ(NeighborhoodSize(16, 2, 2), 91);
  EXPECT_EQ(NeighborhoodSize(16, 2, 0), 1);
  for (int n : {9, 16, 49}) {
    for (int s = 1; s <= 3; ++s) {
      for (int k = 0; k <= s; ++k) {
        EXPECT_EQ(static_cast<double>(NeighborhoodSize(n, s, k)),
                  Binomial(n - s, k) * Binomial(s, k));
      }
    }
  }
}

TEST(TrialCountTest, RoundsUpAndNeverVanishes) {
  EXPECT_EQ(TrialCount(28, 20.0), 6);
  EXPECT_EQ(TrialCount(91, 40.0), 37);
  EXPECT_EQ(TrialCount(10, 100.0), 10);
  EXPECT_EQ(TrialCount(5, 20.0), 1);
  EXPECT_EQ(TrialCount(2, 1.0), 1);
}

TEST(CheapestSinksTest, PicksLowestCosts) {
  const Instance instance = BuildInstance(GeneratorConfig{}, 6);
  const SinkVector v = CheapestSinks(instance);
  ASSERT_EQ(v.nodes.size(), 2u);
  EXPECT_LT(v.nodes[0], v.nodes[1]);
  for (NodeId j = 1; j <= instance.node_count(); ++j) {
    if (j == v.nodes[0] || j == v.nodes[1]) continue;
    EXPECT_GE(instance.cost(j, kSinkKind),
              std::max(instance.cost(v.nodes[0], kSinkKind),
                       instance.cost(v.nodes[1], kSinkKind)));
  }
  EXPECT_NEAR(v.cost,
              instance.cost(v.nodes[0], kSinkKind) +
                  instance.cost(v.nodes[1], kSinkKind),
              1e-12);
}

TEST(CheckSearchConfigTest, RejectsOutOfRangeFields) {
  EXPECT_NO_THROW(CheckSearchConfig(LocalSearchDefaults()));
  EXPECT_NO_THROW(CheckSearchConfig(TabuSearchDefaults()));
  SearchConfig c = LocalSearchDefaults();
  c.tabu_tenure = 0;
  EXPECT_THROW(CheckSearchConfig(c), std::invalid_argument);
  c = LocalSearchDefaults();
  c.scan_percent = {20.0, 140.0};
  EXPECT_THROW(CheckSearchConfig(c), std::invalid_argument);
  c = LocalSearchDefaults();
  c.time_limit_seconds = 0.0;
  EXPECT_THROW(CheckSearchConfig(c), std::invalid_argument);
}

// With one sink and a stable incumbent, every trial draws its arrival from
// p restricted to the other nodes.
TEST(LocalSearchTest, ArrivalsFollowTheSamplingDistribution) {
  GeneratorConfig gen;
  gen.sink_count = 1;
  gen.horizon = 20;
  InstanceData data = BuildInstance(gen, 9).data();
  for (int j = 0; j < 16; ++j) data.costs[j * 3] = 5.0 + 10.0 * j;
  const Instance instance(data);

  SearchConfig config = TabuSearchDefaults();
  config.iteration_limit = 7000;
  config.no_improvement_limit = 7000;
  config.seed = 17;
  const SearchResult result = LocalSearch(instance, config);

  std::size_t settled = 0;
  for (std::size_t i = 0; i < result.log.size(); ++i) {
    if (result.log[i].accepted) settled = i + 1;
  }
  const NodeId home = result.sinks.nodes.front();
  std::vector<double> costs(16);
  for (int j = 0; j < 16; ++j) costs[j] = data.costs[j * 3];
  std::vector<double> p = SinkSamplingDistribution(costs);
  const double rest = 1.0 - p[home - 1];
  std::vector<int> observed(17, 0);
  int draws = 0;
  for (std::size_t i = settled; i < result.log.size(); ++i) {
    ++observed[result.log[i].candidate.front()];
    ++draws;
  }
  ASSERT_GT(draws, 90000);
  EXPECT_EQ(observed[home], 0);
  double chi2 = 0.0;
  for (NodeId j = 1; j <= 16; ++j) {
    if (j == home) continue;
    const double expected = draws * p[j - 1] / rest;
    chi2 += (observed[j] - expected) * (observed[j] - expected) / expected;
  }
  // 14 degrees of freedom, 0.1% upper tail.
  EXPECT_LT(chi2, 36.12);
}

TEST(LocalSearchTest, DeterministicAndFeasible) {
  const Instance instance = BuildInstance(GeneratorConfig{}, 3);
  const SearchResult a = LocalSearch(instance, QuickConfig(5));
  const SearchResult b = LocalSearch(instance, QuickConfig(5));
  EXPECT_EQ(a.solution, b.solution);
  EXPECT_EQ(a.sinks, b.sinks);
  std::ostringstream la, lb;
  WriteSearchLogCsv(la, a.log);
  WriteSearchLogCsv(lb, b.log);
  EXPECT_EQ(la.str(), lb.str());
  EXPECT_EQ(la.str().substr(0, la.str().find('\n')),
            "iteration,s,candidate,L,accepted");
  const ValidationReport report = Validate(instance, a.solution);
  EXPECT_TRUE(report.feasible()) << report.Summary();
  EXPECT_EQ(a.solution.sinks(), a.sinks.nodes);
  EXPECT_LE(a.iterations, 4);
}

TEST(LocalSearchTest, IncumbentOnlyImproves) {
  for (std::uint64_t seed = 1; seed <= 3; ++seed) {
    const Instance instance = BuildInstance(GeneratorConfig{}, seed);
    const SearchResult r = LocalSearch(instance, QuickConfig(seed));
    ASSERT_FALSE(r.log.empty());
    EXPECT_EQ(r.log.front().iteration, 0);
    EXPECT_EQ(r.log.front().candidate, CheapestSinks(instance).nodes);
    int best = r.log.front().lifetime;
    for (std::size_t i = 1; i < r.log.size(); ++i) {
      EXPECT_EQ(r.log[i].accepted, r.log[i].lifetime > best);
      if (r.log[i].accepted) best = r.log[i].lifetime;
    }
    EXPECT_EQ(r.solution.lifetime(), best);
  }
}

TEST(LocalSearchTest, StallStopsAfterNoImprovementLimit) {
  const Instance instance = BuildInstance(GeneratorConfig{}, 2);
  SearchConfig config = QuickConfig(4);
  config.iteration_limit = 50;
  config.no_improvement_limit = 1;
  const SearchResult r = LocalSearch(instance, config);
  int last_improving = 0;
  for (const SearchLogEntry& e : r.log) {
    if (e.accepted) last_improving = e.iteration;
  }
  EXPECT_EQ(r.iterations, last_improving + 1);
}

TEST(TabuSearchTest, NeverRevisitsRecentVectors) {
  for (int tenure : {1, 3, 10}) {
    const Instance instance = BuildInstance(GeneratorConfig{}, 8);
    SearchConfig config = TabuSearchDefaults();
    config.iteration_limit = 5;
    config.tabu_tenure = tenure;
    config.seed = 11;
    const SearchResult r = TabuSearch(instance, config);
    std::deque<std::vector<NodeId>> recent = {r.log.front().candidate};
    for (std::size_t i = 1; i < r.log.size(); ++i) {
      for (const auto& v : recent) EXPECT_NE(r.log[i].candidate, v);
      if (r.log[i].accepted) {
        recent.push_back(r.log[i].candidate);
        if (static_cast<int>(recent.size()) > tenure) recent.pop_front();
      }
      ASSERT_LE(static_cast<int>(recent.size()), tenure);
    }
    EXPECT_TRUE(Validate(instance, r.solution).feasible());
  }
}

TEST(TabuSearchTest, TimeLimitKeepsTheStartingVector) {
  const Instance instance = BuildInstance(GeneratorConfig{}, 8);
  SearchConfig config = TabuSearchDefaults();
  config.time_limit_seconds = 1e-9;
  const SearchResult r = TabuSearch(instance, config);
  EXPECT_TRUE(r.time_limit_reached);
  EXPECT_EQ(r.sinks.nodes, CheapestSinks(instance).nodes);
  EXPECT_TRUE(Validate(instance, r.solution).feasible());
}

}  // namespace
}  // namespace wsnlife
