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

#include "wsnlife/construction.h"

#include <algorithm>
#include <deque>
#include <ostream>
#include <stdexcept>

#include "json.hpp"
#include "wsnlife/routing.h"

namespace wsnlife {
namespace {

constexpr double kMoneySlack = 1e-9;

class Tracer {
 public:
  explicit Tracer(const ConstructionOptions& options) : sink_(options.trace) {}

  bool enabled() const { return static_cast<bool>(sink_); }

  void Sensor(const Instance& in, int t, std::string_view event,
              std::string_view rule, int sensor, double score,
              double budget_left) const {
    if (!enabled()) return;
    const SensorId id = in.sensor_at(sensor);
    nlohmann::ordered_json j;
    j["t"] = t;
    j["event"] = event;
    if (!rule.empty()) j["rule"] = rule;
    j["sensor"] = {id.node, id.kind};
    if (score > 0.0) j["score"] = score;
    j["cost"] = in.cost(id);
    j["budget_left"] = budget_left;
    sink_(j.dump());
  }

  void Stop(int t, std::string_view phase, std::string_view reason) const {
    if (!enabled()) return;
    nlohmann::ordered_json j;
    j["t"] = t;
    j["event"] = "truncate";
    j["phase"] = phase;
    j["reason"] = reason;
    j["lifetime"] = t - 1;
    sink_(j.dump());
  }

 private:
  const std::function<void(const std::string&)>& sink_;
};

double Reserve(const Instance& in, int sensor, int active_count) {
  const SensorType& type = in.sensor_type(sensor);
  return type.sense_energy + static_cast<double>(active_count) *
                                 in.max_packets() *
                                 (type.receive_energy + type.transmit_energy);
}

// Greedy candidate ordered by higher score, then cheaper,
// then lower (node, kind).
struct Pick {
  int sensor = -1;
  double score = 0.0;
  double cost = 0.0;

  void Offer(int s, double sc, double c) {
    if (sc <= 0.0) return;
    if (sensor < 0 || sc > score || (sc == score && c < cost)) {
      sensor = s;
      score = sc;
      cost = c;
    }
  }
};

double Ratio(double count, double energy, double cost) {
  return count * energy / std::max(cost, 1e-12);
}

// Edits one period of a partial solution. Activity changes are written
// through immediately so the partial solution's idle counters stay exact.
class PeriodEditor {
 public:
  PeriodEditor(const Instance& in, PartialSolution& ps, int t,
               std::span<const double> remaining, const Tracer& tracer,
               std::vector<double>* debit = nullptr)
      : in_(in),
        ps_(ps),
        t_(t),
        remaining_(remaining),
        tracer_(tracer),
        debit_(debit),
        active_(in.sensor_count(), 0),
        excluded_(in.sensor_count(), 0),
        cover_(in.node_count() + 1, 0),
        label_(in.sensor_count(), 0) {
    // Mark() only tracks transitions, so start from the empty-period count.
    for (NodeId i = 1; i <= in.node_count(); ++i) {
      deficit_nodes_ += in.coverage_requirement(i) > 0 ? 1 : 0;
    }
    for (int s = 0; s < in.sensor_count(); ++s) {
      if (ps.active(s, t)) Mark(s, true);
    }
  }

  int active_count() const { return active_count_; }
  bool active(int s) const { return active_[s] != 0; }
  bool Covered() const { return deficit_nodes_ == 0; }
  NodeId label(int s) const { return label_[s]; }

  void CarryOver() {
    for (int s = 0; s < in_.sensor_count(); ++s) {
      if (ps_.active(s, t_ - 1) && ps_.deployed(s) && !active(s)) {
        Switch(s, true);
      }
    }
  }

  // Deactivates every active sensor lacking the reserve for the current
  // active count; such sensors are not reconsidered in this period.
  bool ScreenAll() {
    const int count = active_count_;
    bool changed = false;
    for (int s = 0; s < in_.sensor_count(); ++s) {
      if (active(s) && !HasEnergyReserve(in_, s, remaining_[s], count)) {
        Switch(s, false);
        excluded_[s] = 1;
        tracer_.Sensor(in_, t_, "screen", "", s, 0.0, ps_.budget_left());
        changed = true;
      }
    }
    return changed;
  }

  bool RepairCoverage() {
    while (!Covered()) {
      Pick best;
      for (int s = 0; s < in_.sensor_count(); ++s) {
        if (!ps_.deployed(s) || active(s) || excluded_[s]) continue;
        if (!CanActivate(s)) continue;
        best.Offer(s, Ratio(DeficientCovered(s), remaining_[s], Cost(s)),
                   Cost(s));
      }
      if (best.sensor < 0) break;
      Activate(best.sensor, "cep", best.score);
    }
    while (!Covered()) {
      Pick best;
      for (int s = 0; s < in_.sensor_count(); ++s) {
        if (ps_.deployed(s)) continue;
        best.Offer(s,
                   Ratio(DeficientCovered(s),
                         in_.sensor_type(s).initial_energy, Cost(s)),
                   Cost(s));
      }
      if (best.sensor < 0) return false;
      if (!Afford(best.sensor)) return false;
      Deploy(best.sensor, "ccr", best.score);
    }
    return true;
  }

  // Brings the spent budget back within B by deleting idle sensors, and in
  // the first period also active sensors that coverage does not need.
  bool RecoverBudget() {
    if (ps_.budget_left() >= -kMoneySlack) return true;
    for (int s : IdleByCost()) {
      if (ps_.budget_left() >= -kMoneySlack) break;
      Delete(s);
    }
    if (ps_.budget_left() < -kMoneySlack && t_ == 1) {
      for (int s : ActiveByCost()) {
        if (ps_.budget_left() >= -kMoneySlack) break;
        if (!RedundantForCoverage(s)) continue;
        Switch(s, false);
        if (ps_.idle(s)) Delete(s);
      }
    }
    return ps_.budget_left() >= -kMoneySlack;
  }

  // Breadth-first search from the sinks in ascending node order; each
  // sensor inherits the sink of whoever discovered it.
  void Label() {
    std::fill(label_.begin(), label_.end(), 0);
    std::deque<int> queue;  // >= 0: sensor index, < 0: -sink node
    std::vector<NodeId> sinks = ps_.sinks();
    std::sort(sinks.begin(), sinks.end());
    for (NodeId v : sinks) queue.push_back(-v);
    unlabeled_ = active_count_;
    while (!queue.empty()) {
      const int head = queue.front();
      queue.pop_front();
      if (head < 0) {
        const NodeId v = -head;
        for (int s = 0; s < in_.sensor_count(); ++s) {
          if (!active(s) || label_[s] != 0) continue;
          const SensorId id = in_.sensor_at(s);
          if (!in_.reaches(id.node, id.kind, v)) continue;
          label_[s] = v;
          --unlabeled_;
          queue.push_back(s);
        }
      } else {
        for (int s : in_.in_neighbors(head)) {
          if (!active(s) || label_[s] != 0) continue;
          label_[s] = label_[head];
          --unlabeled_;
          queue.push_back(s);
        }
      }
    }
  }

  bool Connected() const {
    if (unlabeled_ > 0) return false;
    for (int s = 0; s < in_.sensor_count(); ++s) {
      if (active(s) && Underconnectivity(s) > 0) return false;
    }
    return true;
  }

  int Underconnectivity(int s) const {
    if (!active(s)) return 0;
    int neighbours = 0;
    for (int o : in_.out_neighbors(s)) neighbours += active(o) ? 1 : 0;
    return std::max(in_.alpha() - neighbours, 0);
  }

  bool RepairConnectivity() {
    Label();
    while (!Connected()) {
      const std::vector<char> deficient = DeficientSensors();
      Pick best;
      for (int s = 0; s < in_.sensor_count(); ++s) {
        if (!ps_.deployed(s) || active(s) || excluded_[s]) continue;
        if (!CanActivate(s)) continue;
        best.Offer(s, Ratio(DeficientReached(s, deficient), remaining_[s],
                            Cost(s)),
                   Cost(s));
      }
      if (best.sensor < 0) break;
      Activate(best.sensor, "coep", best.score);
      Label();
    }
    while (!Connected()) {
      const std::vector<char> deficient = DeficientSensors();
      Pick best;
      for (int s = 0; s < in_.sensor_count(); ++s) {
        if (ps_.deployed(s)) continue;
        best.Offer(s,
                   Ratio(DeficientReached(s, deficient),
                         in_.sensor_type(s).initial_energy, Cost(s)),
                   Cost(s));
      }
      if (best.sensor < 0) return false;
      if (!Afford(best.sensor)) return false;
      Deploy(best.sensor, "cocr", best.score);
      Label();
    }
    return true;
  }

  int DeactivateUnnecessary() {
    int removed = 0;
    for (int s : ActiveByCost()) {
      if (!RedundantForCoverage(s)) continue;
      bool alpha_ok = true;
      for (int o : in_.in_neighbors(s)) {
        if (!active(o)) continue;
        int neighbours = 0;
        for (int p : in_.out_neighbors(o)) {
          neighbours += (active(p) && p != s) ? 1 : 0;
        }
        if (neighbours < in_.alpha()) {
          alpha_ok = false;
          break;
        }
      }
      if (!alpha_ok) continue;
      Mark(s, false);
      Label();
      if (unlabeled_ > 0) {
        Mark(s, true);
        continue;
      }
      Mark(s, true);
      Switch(s, false);
      tracer_.Sensor(in_, t_, "deactivate", "polish", s, 0.0,
                     ps_.budget_left());
      ++removed;
    }
    Label();
    return removed;
  }

  void CommitAssignments() {
    std::vector<Assignment> list;
    for (int s = 0; s < in_.sensor_count(); ++s) {
      if (active(s) && label_[s] != 0) {
        list.push_back({label_[s], in_.sensor_at(s)});
      }
    }
    ps_.SetAssignments(t_, std::move(list));
  }

  std::vector<int> undercoverage() const {
    std::vector<int> u(in_.node_count(), 0);
    for (NodeId i = 1; i <= in_.node_count(); ++i) u[i - 1] = Deficit(i);
    return u;
  }
  std::vector<char> unlabeled_sensors() const {
    std::vector<char> out(in_.sensor_count(), 0);
    for (int s = 0; s < in_.sensor_count(); ++s) {
      out[s] = active(s) && label_[s] == 0;
    }
    return out;
  }
  int DeficientCovered(int s) const {
    int count = 0;
    for (NodeId i : in_.covered_nodes(s)) count += Deficit(i) > 0 ? 1 : 0;
    return count;
  }
  std::vector<char> DeficientSensors() const {
    std::vector<char> out(in_.sensor_count(), 0);
    for (int s = 0; s < in_.sensor_count(); ++s) {
      if (!active(s)) continue;
      if (Underconnectivity(s) > 0) out[s] = 1;
      else if (label_[s] == 0) out[s] = 2;
    }
    return out;
  }
  // Active sensors able to transmit to candidate s that s would help: those
  // short of alpha neighbours and, when s itself touches the labelled part
  // of the network, those without a route.
  int DeficientReached(int s, const std::vector<char>& deficient) const {
    bool bridges = false;
    const SensorId id = in_.sensor_at(s);
    for (NodeId v : ps_.sinks()) {
      if (in_.reaches(id.node, id.kind, v)) bridges = true;
    }
    if (!bridges) {
      for (int o : in_.out_neighbors(s)) {
        if (active(o) && label_[o] != 0) {
          bridges = true;
          break;
        }
      }
    }
    int count = 0;
    for (int o : in_.in_neighbors(s)) {
      if (deficient[o] == 1 || (deficient[o] == 2 && bridges)) ++count;
    }
    return count;
  }

 private:
  double Cost(int s) const { return in_.sensor_cost(s); }
  int Deficit(NodeId i) const {
    return std::max(in_.coverage_requirement(i) - cover_[i], 0);
  }

  bool CanActivate(int s) const {
    return HasEnergyReserve(in_, s, remaining_[s], active_count_ + 1);
  }

  // Updates the local view only.
  void Mark(int s, bool on) {
    if ((active_[s] != 0) == on) return;
    active_[s] = on;
    active_count_ += on ? 1 : -1;
    for (NodeId i : in_.covered_nodes(s)) {
      const bool before = cover_[i] < in_.coverage_requirement(i);
      cover_[i] += on ? 1 : -1;
      const bool after = cover_[i] < in_.coverage_requirement(i);
      deficit_nodes_ += static_cast<int>(after) - static_cast<int>(before);
    }
    if (!on && label_[s] != 0) label_[s] = 0;
  }

  void Switch(int s, bool on) {
    Mark(s, on);
    ps_.SetActive(s, t_, on);
  }

  void Activate(int s, std::string_view rule, double score) {
    Switch(s, true);
    if (debit_ != nullptr) (*debit_)[s] -= Reserve(in_, s, active_count_);
    tracer_.Sensor(in_, t_, "activate", rule, s, score, ps_.budget_left());
  }

  void Deploy(int s, std::string_view rule, double score) {
    ps_.Deploy(s);
    Switch(s, true);
    if (debit_ != nullptr) (*debit_)[s] -= Reserve(in_, s, active_count_);
    tracer_.Sensor(in_, t_, "deploy", rule, s, score, ps_.budget_left());
  }

  void Delete(int s) {
    ps_.Remove(s);
    tracer_.Sensor(in_, t_, "delete", "", s, 0.0, ps_.budget_left());
  }

  std::vector<int> ByCost(std::vector<int> list) const {
    std::stable_sort(list.begin(), list.end(), [&](int a, int b) {
      return Cost(a) > Cost(b);
    });
    return list;
  }
  std::vector<int> IdleByCost() const {
    std::vector<int> list;
    for (int s = 0; s < in_.sensor_count(); ++s) {
      if (ps_.deployed(s) && ps_.idle(s)) list.push_back(s);
    }
    return ByCost(std::move(list));
  }
  std::vector<int> ActiveByCost() const {
    std::vector<int> list;
    for (int s = 0; s < in_.sensor_count(); ++s) {
      if (active(s)) list.push_back(s);
    }
    return ByCost(std::move(list));
  }

  bool RedundantForCoverage(int s) const {
    for (NodeId i : in_.covered_nodes(s)) {
      if (cover_[i] - 1 < in_.coverage_requirement(i)) return false;
    }
    return true;
  }

  // Frees budget for sensor s by deleting idle sensors, most expensive
  // first. Nothing is deleted when even deleting all of them is not enough.
  bool Afford(int s) {
    const double need = Cost(s);
    if (ps_.budget_left() + kMoneySlack >= need) return true;
    const std::vector<int> idle = IdleByCost();
    double refundable = 0.0;
    for (int o : idle) refundable += Cost(o);
    if (ps_.budget_left() + refundable + kMoneySlack < need) return false;
    for (int o : idle) {
      if (ps_.budget_left() + kMoneySlack >= need) break;
      Delete(o);
    }
    return true;
  }

  const Instance& in_;
  PartialSolution& ps_;
  const int t_;
  std::span<const double> remaining_;
  const Tracer& tracer_;
  std::vector<double>* debit_;
  std::vector<char> active_;
  std::vector<char> excluded_;
  std::vector<int> cover_;  // indexed by node
  std::vector<NodeId> label_;
  int active_count_ = 0;
  int deficit_nodes_ = 0;
  int unlabeled_ = 0;
};

void CheckSinks(const Instance& in, std::span<const NodeId> sinks) {
  if (static_cast<int>(sinks.size()) != in.sink_count()) {
    throw std::invalid_argument("expected " + std::to_string(in.sink_count()) +
                                " sinks, got " + std::to_string(sinks.size()));
  }
}

}  // namespace

std::string_view EngineName(Engine engine) {
  return engine == Engine::kCH ? "ch" : "dh";
}

Engine ParseEngine(std::string_view name) {
  if (name == "ch" || name == "CH") return Engine::kCH;
  if (name == "dh" || name == "DH") return Engine::kDH;
  throw std::invalid_argument("unknown construction engine '" +
                              std::string(name) + "'");
}

std::function<void(const std::string&)> JsonLinesTrace(std::ostream& out) {
  return [&out](const std::string& line) { out << line << '\n'; };
}

PartialSolution::PartialSolution(const Instance& instance,
                                 std::span<const NodeId> sinks)
    : instance_(&instance),
      solution_(instance.node_count(), instance.sensor_kinds(),
                instance.horizon()),
      sinks_(sinks.begin(), sinks.end()),
      budget_left_(instance.budget()),
      active_periods_(instance.sensor_count(), 0) {
  std::sort(sinks_.begin(), sinks_.end());
  for (std::size_t i = 0; i < sinks_.size(); ++i) {
    const NodeId v = sinks_[i];
    if (v < 1 || v > instance.node_count()) {
      throw std::invalid_argument("sink node " + std::to_string(v) +
                                  " out of range");
    }
    if (i > 0 && sinks_[i - 1] == v) {
      throw std::invalid_argument("duplicate sink node " + std::to_string(v));
    }
    solution_.set_deployed(v, kSinkKind, true);
    budget_left_ -= instance.cost(v, kSinkKind);
  }
  solution_.set_lifetime(instance.horizon());
  for (int t = 1; t <= instance.horizon(); ++t) solution_.set_period_on(t, true);
}

bool PartialSolution::deployed(int sensor) const {
  const SensorId id = instance_->sensor_at(sensor);
  return solution_.deployed(id.node, id.kind);
}

bool PartialSolution::active(int sensor, int t) const {
  if (t < 1 || t > solution_.horizon()) return false;
  const SensorId id = instance_->sensor_at(sensor);
  return solution_.active(id.node, id.kind, t);
}

void PartialSolution::Deploy(int sensor) {
  const SensorId id = instance_->sensor_at(sensor);
  if (solution_.deployed(id.node, id.kind)) return;
  solution_.set_deployed(id.node, id.kind, true);
  budget_left_ -= instance_->cost(id);
}

void PartialSolution::Remove(int sensor) {
  const SensorId id = instance_->sensor_at(sensor);
  if (!solution_.deployed(id.node, id.kind)) return;
  if (active_periods_[sensor] != 0) {
    throw std::logic_error("cannot remove scheduled sensor " + ToString(id));
  }
  solution_.set_deployed(id.node, id.kind, false);
  budget_left_ += instance_->cost(id);
}

void PartialSolution::SetActive(int sensor, int t, bool on) {
  const SensorId id = instance_->sensor_at(sensor);
  if (solution_.active(id.node, id.kind, t) == on) return;
  solution_.set_active(id.node, id.kind, t, on);
  active_periods_[sensor] += on ? 1 : -1;
}

void PartialSolution::SetAssignments(int t, std::vector<Assignment> list) {
  solution_.assignments(t) = std::move(list);
}

void PartialSolution::SetFlows(int t, std::vector<SensorFlow> sensor_flows,
                               std::vector<SinkFlow> sink_flows) {
  solution_.sensor_flows(t) = std::move(sensor_flows);
  solution_.sink_flows(t) = std::move(sink_flows);
}

void PartialSolution::Truncate(int t) {
  const int horizon = solution_.horizon();
  t = std::clamp(t, 1, horizon + 1);
  solution_.set_lifetime(t - 1);
  for (int tau = t; tau <= horizon; ++tau) {
    solution_.set_period_on(tau, false);
    for (int s = 0; s < instance_->sensor_count(); ++s) SetActive(s, tau, false);
    solution_.assignments(tau).clear();
    solution_.sensor_flows(tau).clear();
    solution_.sink_flows(tau).clear();
  }
}

bool HasEnergyReserve(const Instance& instance, int sensor, double remaining,
                      int active_count) {
  return remaining + 1e-9 >= Reserve(instance, sensor, active_count);
}

GreedyScores ComputeGreedyScores(const Instance& instance,
                                 const PartialSolution& partial, int t,
                                 std::span<const double> remaining) {
  PartialSolution copy = partial;
  ConstructionOptions quiet;
  Tracer tracer(quiet);
  PeriodEditor editor(instance, copy, t, remaining, tracer);
  editor.Label();
  GreedyScores scores;
  scores.undercoverage = editor.undercoverage();
  scores.unlabeled = editor.unlabeled_sensors();
  const std::vector<char> deficient = editor.DeficientSensors();
  const int n = instance.sensor_count();
  scores.underconnectivity.assign(n, 0);
  scores.cep.assign(n, 0.0);
  scores.ccr.assign(n, 0.0);
  scores.coep.assign(n, 0.0);
  scores.cocr.assign(n, 0.0);
  for (int s = 0; s < n; ++s) {
    scores.underconnectivity[s] = editor.Underconnectivity(s);
    const double cost = instance.sensor_cost(s);
    const double covered = editor.DeficientCovered(s);
    const double reached = editor.DeficientReached(s, deficient);
    if (copy.deployed(s)) {
      if (!editor.active(s)) {
        scores.cep[s] = Ratio(covered, remaining[s], cost);
        scores.coep[s] = Ratio(reached, remaining[s], cost);
      }
    } else {
      const double e = instance.sensor_type(s).initial_energy;
      scores.ccr[s] = Ratio(covered, e, cost);
      scores.cocr[s] = Ratio(reached, e, cost);
    }
  }
  return scores;
}

int RepairCoverageBudget(const Instance& instance, PartialSolution& partial,
                         std::vector<double>& planned,
                         const ConstructionOptions& options) {
  Tracer tracer(options);
  const int horizon = partial.lifetime();
  for (int t = 1; t <= horizon; ++t) {
    PeriodEditor editor(instance, partial, t, planned, tracer);
    if (options.carry_over_activity && t > 1) editor.CarryOver();
    editor.ScreenAll();
    bool ok = true;
    for (;;) {
      ok = editor.Covered() ? editor.RecoverBudget() : editor.RepairCoverage();
      if (ok && !editor.Covered()) ok = false;
      if (!ok || !editor.ScreenAll()) break;
    }
    if (!ok) {
      tracer.Stop(t, "coverage", "coverage or budget cannot be restored");
      partial.Truncate(t);
      return partial.lifetime();
    }
    const int count = editor.active_count();
    for (int s = 0; s < instance.sensor_count(); ++s) {
      if (editor.active(s)) planned[s] -= Reserve(instance, s, count);
    }
  }
  return partial.lifetime();
}

bool RepairConnectivityAssignment(const Instance& instance, int t,
                                  PartialSolution& partial,
                                  std::span<const double> remaining,
                                  const ConstructionOptions& options) {
  Tracer tracer(options);
  PeriodEditor editor(instance, partial, t, remaining, tracer);
  if (!editor.RepairConnectivity()) {
    tracer.Stop(t, "connectivity", "no sensor restores connectivity");
    partial.Truncate(t);
    return false;
  }
  editor.CommitAssignments();
  return true;
}

int DeactivateUnnecessary(const Instance& instance, int t,
                          PartialSolution& partial,
                          const ConstructionOptions& options) {
  Tracer tracer(options);
  std::vector<double> unused(instance.sensor_count(), 0.0);
  PeriodEditor editor(instance, partial, t, unused, tracer);
  const int removed = editor.DeactivateUnnecessary();
  editor.CommitAssignments();
  return removed;
}

Solution ConstructCH(const Instance& instance, std::span<const NodeId> sinks,
                     const ConstructionOptions& options) {
  CheckSinks(instance, sinks);
  PartialSolution partial(instance, sinks);
  Tracer tracer(options);
  std::vector<double> planned(instance.sensor_count());
  for (int s = 0; s < instance.sensor_count(); ++s) {
    planned[s] = instance.sensor_type(s).initial_energy;
  }
  RepairCoverageBudget(instance, partial, planned, options);

  // Connectivity activations draw on what the coverage plan left unreserved
  // over the whole horizon, so later planned periods keep their energy.
  for (int t = 1; t <= partial.lifetime(); ++t) {
    PeriodEditor editor(instance, partial, t, planned, tracer, &planned);
    if (!editor.RepairConnectivity()) {
      tracer.Stop(t, "connectivity", "no sensor restores connectivity");
      partial.Truncate(t);
      break;
    }
    editor.CommitAssignments();
  }

  EnergyLedger ledger(instance);
  for (int t = 1; t <= partial.lifetime(); ++t) {
    const PeriodState state =
        MakePeriodState(instance, partial.solution(), t, ledger.row(t));
    RoutingResult routed = SolveRoutingProblem(instance, state);
    if (!routed.feasible) {
      tracer.Stop(t, "routing", routed.diagnostic);
      partial.Truncate(t);
      break;
    }
    partial.SetFlows(t, std::move(routed.sensor_flows),
                     std::move(routed.sink_flows));
    ledger.Advance(t, routed.consumption);
  }
  Solution solution = std::move(partial).Release();
  solution.Canonicalize();
  return solution;
}

Solution ConstructDH(const Instance& instance, std::span<const NodeId> sinks,
                     const ConstructionOptions& options) {
  CheckSinks(instance, sinks);
  PartialSolution partial(instance, sinks);
  Tracer tracer(options);
  EnergyLedger ledger(instance);
  for (int t = 1; t <= instance.horizon(); ++t) {
    const std::vector<double>& remaining = ledger.row(t);
    PeriodEditor editor(instance, partial, t, remaining, tracer);
    if (options.carry_over_activity && t > 1) editor.CarryOver();
    editor.ScreenAll();
    std::string_view failure;
    for (;;) {
      const bool covered = editor.Covered()
                               ? editor.RecoverBudget()
                               : editor.RepairCoverage() && editor.Covered();
      if (!covered) {
        failure = "coverage or budget cannot be restored";
        break;
      }
      if (!editor.RepairConnectivity()) {
        failure = "no sensor restores connectivity";
        break;
      }
      if (!editor.ScreenAll()) break;
    }
    if (!failure.empty()) {
      tracer.Stop(t, "period", failure);
      partial.Truncate(t);
      break;
    }
    editor.DeactivateUnnecessary();
    editor.CommitAssignments();
    const PeriodState state =
        MakePeriodState(instance, partial.solution(), t, remaining);
    RoutingResult routed = SolveRoutingProblem(instance, state);
    if (!routed.feasible) {
      tracer.Stop(t, "routing", routed.diagnostic);
      partial.Truncate(t);
      break;
    }
    partial.SetFlows(t, std::move(routed.sensor_flows),
                     std::move(routed.sink_flows));
    ledger.Advance(t, routed.consumption);
  }
  Solution solution = std::move(partial).Release();
  solution.Canonicalize();
  return solution;
}

Solution Construct(Engine engine, const Instance& instance,
                   std::span<const NodeId> sinks,
                   const ConstructionOptions& options) {
  return engine == Engine::kCH ? ConstructCH(instance, sinks, options)
                               : ConstructDH(instance, sinks, options);
}

}  // namespace wsnlife
