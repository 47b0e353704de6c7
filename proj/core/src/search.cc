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

#include "wsnlife/search.h"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <deque>
#include <map>
#include <numeric>
#include <ostream>
#include <random>
#include <stdexcept>
#include <string>
#include <utility>

namespace wsnlife {
namespace {

// A tabu draw gives up after this many consecutive tabu candidates.
constexpr int kMaxDrawAttempts = 64;

std::int64_t Binomial(int n, int k) {
  if (k < 0 || k > n) return 0;
  k = std::min(k, n - k);
  std::int64_t value = 1;
  for (int i = 1; i <= k; ++i) value = value * (n - k + i) / i;
  return value;
}

class SinkSearch {
 public:
  SinkSearch(const Instance& instance, const SearchConfig& config, bool tabu)
      : instance_(instance),
        config_(config),
        tabu_(tabu),
        rng_(config.seed) {
    std::vector<double> costs(instance.node_count());
    for (NodeId j = 1; j <= instance.node_count(); ++j) {
      costs[j - 1] = instance.cost(j, kSinkKind);
    }
    if (instance.node_count() >= 2) attraction_ = SinkSamplingDistribution(costs);
  }

  SearchResult Run() {
    const auto start = std::chrono::steady_clock::now();
    auto timed_out = [&] {
      const std::chrono::duration<double> elapsed =
          std::chrono::steady_clock::now() - start;
      return elapsed.count() >= config_.time_limit_seconds;
    };

    SearchResult result;
    SinkVector incumbent = CheapestSinks(instance_);
    int lifetime = Evaluate(incumbent.nodes, &result.solution, result);
    result.log.push_back({0, 0, incumbent.nodes, lifetime, true});
    if (tabu_) Remember(incumbent.nodes);

    const int sinks = instance_.sink_count();
    const int nodes = instance_.node_count();
    int no_improvement = 0;
    int iteration = 0;
    while (iteration < config_.iteration_limit &&
           no_improvement < config_.no_improvement_limit &&
           !result.time_limit_reached) {
      ++iteration;
      bool improved = false;
      for (int s = 1; s <= sinks && !result.time_limit_reached; ++s) {
        const std::int64_t size = NeighborhoodSize(nodes, sinks, s);
        if (size == 0) continue;
        const std::int64_t trials = TrialCount(size, Percent(s));
        for (std::int64_t trial = 0; trial < trials; ++trial) {
          if (timed_out()) {
            result.time_limit_reached = true;
            break;
          }
          std::vector<NodeId> candidate;
          if (!Draw(incumbent.nodes, s, candidate)) continue;
          Solution solution;
          const int l = Evaluate(candidate, &solution, result);
          const bool accepted = l > lifetime;
          result.log.push_back({iteration, s, candidate, l, accepted});
          if (!accepted) continue;
          lifetime = l;
          incumbent = MakeSinkVector(instance_, std::move(candidate));
          result.solution = std::move(solution);
          improved = true;
          if (tabu_) Remember(incumbent.nodes);
        }
      }
      no_improvement = improved ? 0 : no_improvement + 1;
    }
    result.iterations = iteration;
    result.sinks = std::move(incumbent);
    return result;
  }

 private:
  double Percent(int s) const {
    const auto& p = config_.scan_percent;
    return p[std::min<std::size_t>(s, p.size()) - 1];
  }

  // Runs the construction engine unless the vector was seen before. Cached
  // vectors never beat the incumbent, so their solution is not kept.
  int Evaluate(const std::vector<NodeId>& nodes, Solution* solution,
               SearchResult& result) {
    auto it = cache_.find(nodes);
    if (it != cache_.end()) return it->second;
    Solution built =
        Construct(config_.engine, instance_, nodes, config_.construction);
    ++result.evaluations;
    const int l = built.lifetime();
    cache_.emplace(nodes, l);
    *solution = std::move(built);
    return l;
  }

  bool Draw(const std::vector<NodeId>& current, int s,
            std::vector<NodeId>& candidate) {
    for (int attempt = 0; attempt < (tabu_ ? kMaxDrawAttempts : 1);
         ++attempt) {
      candidate = Swap(current, s);
      if (!tabu_ || !IsTabu(candidate)) return true;
    }
    return false;
  }

  // Departing sinks are uniform over the current vector; arrivals follow the
  // attraction distribution restricted to free nodes, renormalized after
  // every draw.
  std::vector<NodeId> Swap(const std::vector<NodeId>& current, int s) {
    std::vector<NodeId> kept = current;
    for (int d = 0; d < s; ++d) {
      std::uniform_int_distribution<int> pick(0,
                                              static_cast<int>(kept.size()) - 1);
      kept.erase(kept.begin() + pick(rng_));
    }
    std::vector<char> occupied(instance_.node_count() + 1, 0);
    for (NodeId j : current) occupied[j] = 1;
    std::vector<NodeId> arrivals;
    for (int a = 0; a < s; ++a) {
      double total = 0.0;
      for (NodeId j = 1; j <= instance_.node_count(); ++j) {
        if (!occupied[j]) total += attraction_[j - 1];
      }
      std::uniform_real_distribution<double> u(0.0, total);
      double r = u(rng_);
      NodeId chosen = 0;
      for (NodeId j = 1; j <= instance_.node_count(); ++j) {
        if (occupied[j]) continue;
        chosen = j;
        r -= attraction_[j - 1];
        if (r < 0.0) break;
      }
      occupied[chosen] = 1;
      arrivals.push_back(chosen);
    }
    kept.insert(kept.end(), arrivals.begin(), arrivals.end());
    std::sort(kept.begin(), kept.end());
    return kept;
  }

  bool IsTabu(const std::vector<NodeId>& nodes) const {
    return std::find(tabu_list_.begin(), tabu_list_.end(), nodes) !=
           tabu_list_.end();
  }

  void Remember(const std::vector<NodeId>& nodes) {
    tabu_list_.push_back(nodes);
    while (static_cast<int>(tabu_list_.size()) > config_.tabu_tenure) {
      tabu_list_.pop_front();
    }
  }

  const Instance& instance_;
  const SearchConfig& config_;
  const bool tabu_;
  std::mt19937_64 rng_;
  std::vector<double> attraction_;
  std::map<std::vector<NodeId>, int> cache_;
  std::deque<std::vector<NodeId>> tabu_list_;
};

}  // namespace

SearchConfig LocalSearchDefaults() { return SearchConfig{}; }

SearchConfig TabuSearchDefaults() {
  SearchConfig config;
  config.scan_percent = {100.0, 20.0, 10.0};
  return config;
}

void CheckSearchConfig(const SearchConfig& config) {
  if (config.iteration_limit <= 0 || config.no_improvement_limit <= 0 ||
      config.tabu_tenure <= 0) {
    throw std::invalid_argument(
        "iteration limit, no-improvement limit and tabu tenure must be "
        "positive");
  }
  if (config.scan_percent.empty()) {
    throw std::invalid_argument("scan percentages are empty");
  }
  for (double p : config.scan_percent) {
    if (!(p > 0.0 && p <= 100.0)) {
      throw std::invalid_argument("scan percentage " + std::to_string(p) +
                                  " is outside (0, 100]");
    }
  }
  if (!(config.time_limit_seconds > 0.0)) {
    throw std::invalid_argument("time limit must be positive");
  }
}

SinkVector MakeSinkVector(const Instance& instance, std::vector<NodeId> nodes) {
  std::sort(nodes.begin(), nodes.end());
  SinkVector v;
  for (NodeId j : nodes) v.cost += instance.cost(j, kSinkKind);
  v.nodes = std::move(nodes);
  return v;
}

SinkVector CheapestSinks(const Instance& instance) {
  std::vector<NodeId> order(instance.node_count());
  std::iota(order.begin(), order.end(), 1);
  std::stable_sort(order.begin(), order.end(), [&](NodeId a, NodeId b) {
    return instance.cost(a, kSinkKind) < instance.cost(b, kSinkKind);
  });
  order.resize(std::min<std::size_t>(order.size(), instance.sink_count()));
  return MakeSinkVector(instance, std::move(order));
}

std::vector<double> SinkSamplingDistribution(std::span<const double> costs) {
  const int n = static_cast<int>(costs.size());
  if (n < 2) {
    throw std::invalid_argument("sink sampling needs at least two nodes");
  }
  const double total = std::accumulate(costs.begin(), costs.end(), 0.0);
  if (!(total > 0.0)) {
    throw std::invalid_argument("sink costs must have a positive total");
  }
  std::vector<double> p(n);
  for (int j = 0; j < n; ++j) p[j] = (total - costs[j]) / ((n - 1) * total);
  return p;
}

std::int64_t NeighborhoodSize(int nodes, int sinks, int swap_size) {
  return Binomial(nodes - sinks, swap_size) * Binomial(sinks, swap_size);
}

std::int64_t TrialCount(std::int64_t neighborhood_size, double percent) {
  const double raw = static_cast<double>(neighborhood_size) * percent / 100.0;
  return std::max<std::int64_t>(1, static_cast<std::int64_t>(
                                       std::ceil(raw - 1e-9)));
}

SearchResult LocalSearch(const Instance& instance, const SearchConfig& config) {
  CheckSearchConfig(config);
  return SinkSearch(instance, config, /*tabu=*/false).Run();
}

SearchResult TabuSearch(const Instance& instance, const SearchConfig& config) {
  CheckSearchConfig(config);
  return SinkSearch(instance, config, /*tabu=*/true).Run();
}

void WriteSearchLogCsv(std::ostream& out,
                       std::span<const SearchLogEntry> entries) {
  out << "iteration,s,candidate,L,accepted\n";
  for (const SearchLogEntry& e : entries) {
    out << e.iteration << ',' << e.swap_size << ',';
    for (std::size_t i = 0; i < e.candidate.size(); ++i) {
      if (i > 0) out << ' ';
      out << e.candidate[i];
    }
    out << ',' << e.lifetime << ',' << (e.accepted ? 1 : 0) << '\n';
  }
}

}  // namespace wsnlife
