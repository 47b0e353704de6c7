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

#include "wsnlife/milp_export.h"

#include <charconv>
#include <cmath>
#include <sstream>
#include <string>
#include <system_error>
#include <utility>

#include "wsnlife/validator.h"

namespace wsnlife {
namespace {

constexpr std::string_view kFixedSinks = "fixed-sinks";
constexpr std::string_view kAlphaOutflow = "alpha-outflow";
constexpr double kIntegralityTolerance = 1e-6;

std::string Name(std::string_view prefix, std::initializer_list<int> indices) {
  std::string name(prefix);
  for (int i : indices) {
    name += '_';
    name += std::to_string(i);
  }
  return name;
}

std::string Number(double value) {
  char buffer[64];
  auto [end, ec] = std::to_chars(buffer, buffer + sizeof(buffer), value);
  if (ec != std::errc()) return std::to_string(value);
  return std::string(buffer, end);
}

int FiniteEnergySensors(const Instance& instance) {
  int count = 0;
  for (int s = 0; s < instance.sensor_count(); ++s) {
    if (std::isfinite(instance.sensor_type(s).initial_energy)) ++count;
  }
  return count;
}

// Dense variable layout. Registration order in Build() must follow the
// offsets computed here.
class Layout {
 public:
  explicit Layout(const Instance& instance)
      : n_(instance.node_count()),
        k_(instance.sensor_kinds()),
        p_(instance.sensor_count()),
        t_(instance.horizon()) {
    n0_ = 1;
    x0_ = n0_ + t_;
    z0_ = x0_ + n_ * (k_ + 1);
    u0_ = z0_ + p_ * t_;
    y0_ = u0_ + n_ * p_ * t_;
    g0_ = y0_ + p_ * p_ * t_;
    wy0_ = g0_ + p_ * n_ * t_;
    wg0_ = wy0_ + p_ * p_ * t_;
    end_ = wg0_ + p_ * n_ * t_;
  }

  int L() const { return 0; }
  int n(int t) const { return n0_ + t - 1; }
  int x(NodeId j, int k) const { return x0_ + (j - 1) * (k_ + 1) + k; }
  int z(int s, int t) const { return z0_ + (t - 1) * p_ + s; }
  int u(NodeId i, int s, int t) const {
    return u0_ + ((t - 1) * n_ + (i - 1)) * p_ + s;
  }
  int y(int a, int b, int t) const { return y0_ + ((t - 1) * p_ + a) * p_ + b; }
  int g(int a, NodeId j, int t) const {
    return g0_ + ((t - 1) * p_ + a) * n_ + (j - 1);
  }
  int wy(int a, int b, int t) const { return y(a, b, t) - y0_ + wy0_; }
  int wg(int a, NodeId j, int t) const { return g(a, j, t) - g0_ + wg0_; }
  int size() const { return end_; }

 private:
  int n_, k_, p_, t_;
  int n0_, x0_, z0_, u0_, y0_, g0_, wy0_, wg0_, end_;
};

class ModelBuilder {
 public:
  ModelBuilder(const Instance& instance, const ExportOptions& options)
      : in_(instance), options_(options), layout_(instance) {}

  MilpModel Build() {
    model_.big_m1 = SensorFlowBound(in_);
    model_.big_m2 = SinkFlowBound(in_);
    RegisterVariables();
    LifetimeRows();
    CoverageRows();
    LinkingRows();
    ConnectivityRows();
    AssignmentRows();
    SensorFlowRows();
    SinkFlowRows();
    BalanceRows();
    RouteRows();
    EnergyRows();
    BudgetRows();
    if (options_.alpha_outflow_cut) AlphaCutRows();
    return std::move(model_);
  }

 private:
  int N() const { return in_.node_count(); }
  int K() const { return in_.sensor_kinds(); }
  int P() const { return in_.sensor_count(); }
  int T() const { return in_.horizon(); }
  SensorId Id(int s) const { return in_.sensor_at(s); }

  void RegisterVariables() {
    const double inf = std::numeric_limits<double>::infinity();
    auto binary = [&](std::string name) {
      model_.AddVariable(std::move(name), VariableType::kBinary, 0.0, 1.0);
    };
    model_.AddVariable("L", VariableType::kInteger, 0.0, T());
    for (int t = 1; t <= T(); ++t) binary(Name("n", {t}));
    for (NodeId j = 1; j <= N(); ++j) {
      for (int k = 0; k <= K(); ++k) binary(Name("x", {j, k}));
    }
    for (int t = 1; t <= T(); ++t) {
      for (int s = 0; s < P(); ++s) {
        binary(Name("z", {Id(s).node, Id(s).kind, t}));
      }
    }
    for (int t = 1; t <= T(); ++t) {
      for (NodeId i = 1; i <= N(); ++i) {
        for (int s = 0; s < P(); ++s) {
          binary(Name("u", {i, Id(s).node, Id(s).kind, t}));
        }
      }
    }
    auto pairs = [&](std::string_view prefix, VariableType type, double ub) {
      for (int t = 1; t <= T(); ++t) {
        for (int a = 0; a < P(); ++a) {
          for (int b = 0; b < P(); ++b) {
            model_.AddVariable(Name(prefix, {Id(a).node, Id(a).kind,
                                             Id(b).node, Id(b).kind, t}),
                               type, 0.0, ub);
          }
        }
      }
    };
    auto sink_pairs = [&](std::string_view prefix, bool w, VariableType type,
                          double ub) {
      for (int t = 1; t <= T(); ++t) {
        for (int a = 0; a < P(); ++a) {
          for (NodeId j = 1; j <= N(); ++j) {
            model_.AddVariable(
                w ? Name(prefix, {Id(a).node, Id(a).kind, j, kSinkKind, t})
                  : Name(prefix, {Id(a).node, Id(a).kind, j, t}),
                type, 0.0, ub);
          }
        }
      }
    };
    pairs("y", VariableType::kContinuous, inf);
    sink_pairs("g", false, VariableType::kContinuous, inf);
    pairs("w", VariableType::kBinary, 1.0);
    sink_pairs("w", true, VariableType::kBinary, 1.0);
  }

  LpRow& Row(std::string name, std::string_view family, RowSense sense,
             double rhs) {
    return model_.AddRow(
        {std::move(name), std::string(family), {}, sense, rhs});
  }

  static void Add(LpRow& row, int variable, double coefficient) {
    row.terms.push_back({variable, coefficient});
  }

  void LifetimeRows() {
    for (int t = 1; t <= T(); ++t) {
      LpRow& r = Row(Name("period", {t}), family::kLifetime,
                     RowSense::kGreaterEqual, 1.0 - t);
      Add(r, layout_.n(t), T());
      Add(r, layout_.L(), -1.0);
    }
    // n_t = 1 implies L >= t, so n is exactly the indicator of t <= L.
    for (int t = 1; t <= T(); ++t) {
      LpRow& r = Row(Name("tail", {t}), family::kLifetime,
                     RowSense::kGreaterEqual, 0.0);
      Add(r, layout_.L(), 1.0);
      Add(r, layout_.n(t), -t);
    }
  }

  void CoverageRows() {
    for (int t = 1; t <= T(); ++t) {
      for (NodeId i = 1; i <= N(); ++i) {
        LpRow& r = Row(Name("cover", {i, t}), family::kCoverage,
                       RowSense::kGreaterEqual, 0.0);
        for (int s : in_.coverers(i)) Add(r, layout_.z(s, t), 1.0);
        Add(r, layout_.n(t), -in_.coverage_requirement(i));
      }
    }
  }

  void LinkingRows() {
    for (int t = 1; t <= T(); ++t) {
      for (int s = 0; s < P(); ++s) {
        const SensorId id = Id(s);
        LpRow& rx = Row(Name("deployed", {id.node, id.kind, t}),
                        family::kActivityLinking, RowSense::kLessEqual, 0.0);
        Add(rx, layout_.z(s, t), 1.0);
        Add(rx, layout_.x(id.node, id.kind), -1.0);
        LpRow& rn = Row(Name("alive", {id.node, id.kind, t}),
                        family::kActivityLinking, RowSense::kLessEqual, 0.0);
        Add(rn, layout_.z(s, t), 1.0);
        Add(rn, layout_.n(t), -1.0);
      }
    }
  }

  void ConnectivityRows() {
    for (int t = 1; t <= T(); ++t) {
      for (int s = 0; s < P(); ++s) {
        const SensorId id = Id(s);
        LpRow& r = Row(Name("connect", {id.node, id.kind, t}),
                       family::kAlphaConnectivity, RowSense::kGreaterEqual,
                       0.0);
        for (int o : in_.out_neighbors(s)) Add(r, layout_.z(o, t), 1.0);
        Add(r, layout_.z(s, t), -in_.alpha());
      }
    }
  }

  void AssignmentRows() {
    for (int t = 1; t <= T(); ++t) {
      for (NodeId i = 1; i <= N(); ++i) {
        for (int s = 0; s < P(); ++s) {
          const SensorId id = Id(s);
          LpRow& r1 = Row(Name("assign_sink", {i, id.node, id.kind, t}),
                          family::kSinkAssignment, RowSense::kLessEqual, 0.0);
          Add(r1, layout_.u(i, s, t), 1.0);
          Add(r1, layout_.x(i, kSinkKind), -1.0);
          LpRow& r2 = Row(Name("assign_active", {i, id.node, id.kind, t}),
                          family::kSinkAssignment, RowSense::kLessEqual, 0.0);
          Add(r2, layout_.u(i, s, t), 1.0);
          Add(r2, layout_.z(s, t), -1.0);
        }
      }
      for (int s = 0; s < P(); ++s) {
        const SensorId id = Id(s);
        LpRow& r = Row(Name("assign_once", {id.node, id.kind, t}),
                       family::kSinkAssignment, RowSense::kEqual, 0.0);
        for (NodeId i = 1; i <= N(); ++i) Add(r, layout_.u(i, s, t), 1.0);
        Add(r, layout_.z(s, t), -1.0);
      }
    }
  }

  void SensorFlowRows() {
    const double m1 = model_.big_m1;
    for (int t = 1; t <= T(); ++t) {
      for (int a = 0; a < P(); ++a) {
        const SensorId ia = Id(a);
        LpRow& self = Row(Name("selfflow", {ia.node, ia.kind, t}),
                          family::kSelfFlow, RowSense::kEqual, 0.0);
        Add(self, layout_.y(a, a, t), 1.0);
        for (int b = 0; b < P(); ++b) {
          const SensorId ib = Id(b);
          const double reach = in_.reaches(ia.node, ia.kind, ib.node) ? m1 : 0.0;
          LpRow& r = Row(Name("ycap", {ia.node, ia.kind, ib.node, ib.kind, t}),
                         family::kFlowCapacity, RowSense::kLessEqual, reach);
          Add(r, layout_.y(a, b, t), 1.0);
        }
        LpRow& out = Row(Name("yout", {ia.node, ia.kind, t}),
                         family::kFlowCapacity, RowSense::kLessEqual, 0.0);
        for (int b = 0; b < P(); ++b) Add(out, layout_.y(a, b, t), 1.0);
        Add(out, layout_.z(a, t), -m1);
        LpRow& inflow = Row(Name("yin", {ia.node, ia.kind, t}),
                            family::kFlowCapacity, RowSense::kLessEqual, 0.0);
        for (int b = 0; b < P(); ++b) Add(inflow, layout_.y(b, a, t), 1.0);
        Add(inflow, layout_.z(a, t), -m1);
      }
    }
  }

  void SinkFlowRows() {
    const double m2 = model_.big_m2;
    for (int t = 1; t <= T(); ++t) {
      for (int a = 0; a < P(); ++a) {
        const SensorId ia = Id(a);
        for (NodeId j = 1; j <= N(); ++j) {
          const double reach = in_.reaches(ia.node, ia.kind, j) ? m2 : 0.0;
          LpRow& r = Row(Name("gcap", {ia.node, ia.kind, j, t}),
                         family::kFlowCapacity, RowSense::kLessEqual, reach);
          Add(r, layout_.g(a, j, t), 1.0);
        }
      }
      for (NodeId j = 1; j <= N(); ++j) {
        LpRow& r = Row(Name("gsink", {j, t}), family::kFlowCapacity,
                       RowSense::kLessEqual, 0.0);
        for (int a = 0; a < P(); ++a) Add(r, layout_.g(a, j, t), 1.0);
        Add(r, layout_.x(j, kSinkKind), -m2);
      }
    }
  }

  void BalanceRows() {
    for (int t = 1; t <= T(); ++t) {
      for (int b = 0; b < P(); ++b) {
        const SensorId ib = Id(b);
        LpRow& r = Row(Name("balance", {ib.node, ib.kind, t}),
                       family::kFlowBalance, RowSense::kEqual, 0.0);
        for (int a = 0; a < P(); ++a) {
          if (a != b) Add(r, layout_.y(a, b, t), 1.0);
        }
        Add(r, layout_.z(b, t), in_.sensor_type(b).packets_per_period);
        for (int c = 0; c < P(); ++c) {
          if (c != b) Add(r, layout_.y(b, c, t), -1.0);
        }
        for (NodeId j = 1; j <= N(); ++j) Add(r, layout_.g(b, j, t), -1.0);
      }
      for (NodeId i = 1; i <= N(); ++i) {
        LpRow& r = Row(Name("sinkflow", {i, t}), family::kSinkInflow,
                       RowSense::kEqual, 0.0);
        for (int a = 0; a < P(); ++a) Add(r, layout_.g(a, i, t), 1.0);
        for (int a = 0; a < P(); ++a) {
          Add(r, layout_.u(i, a, t), -in_.sensor_type(a).packets_per_period);
        }
      }
    }
  }

  void RouteRows() {
    const double m1 = model_.big_m1;
    const double m2 = model_.big_m2;
    for (int t = 1; t <= T(); ++t) {
      for (int a = 0; a < P(); ++a) {
        const SensorId ia = Id(a);
        for (int b = 0; b < P(); ++b) {
          const SensorId ib = Id(b);
          LpRow& r = Row(Name("wy", {ia.node, ia.kind, ib.node, ib.kind, t}),
                         family::kRouteConsistency, RowSense::kLessEqual, 0.0);
          Add(r, layout_.y(a, b, t), 1.0);
          Add(r, layout_.wy(a, b, t), -m1);
        }
        for (NodeId j = 1; j <= N(); ++j) {
          LpRow& r = Row(Name("wg", {ia.node, ia.kind, j, t}),
                         family::kRouteConsistency, RowSense::kLessEqual, 0.0);
          Add(r, layout_.g(a, j, t), 1.0);
          Add(r, layout_.wg(a, j, t), -m2);
        }
      }
      for (NodeId v = 1; v <= N(); ++v) {
        for (int a = 0; a < P(); ++a) {
          const SensorId ia = Id(a);
          for (int b = 0; b < P(); ++b) {
            const SensorId ib = Id(b);
            LpRow& r = Row(
                Name("route", {v, ia.node, ia.kind, ib.node, ib.kind, t}),
                family::kRouteConsistency, RowSense::kLessEqual, 1.0);
            if (a != b) {
              Add(r, layout_.u(v, a, t), 1.0);
              Add(r, layout_.u(v, b, t), -1.0);
            }
            Add(r, layout_.wy(a, b, t), 1.0);
          }
          for (NodeId j = 1; j <= N(); ++j) {
            LpRow& r = Row(Name("routesink", {v, ia.node, ia.kind, j, t}),
                           family::kRouteConsistency, RowSense::kLessEqual,
                           1.0);
            Add(r, layout_.u(v, a, t), 1.0);
            if (v == j) Add(r, layout_.x(j, kSinkKind), -1.0);
            Add(r, layout_.wg(a, j, t), 1.0);
          }
        }
      }
    }
  }

  void EnergyRows() {
    for (int s = 0; s < P(); ++s) {
      const SensorType& type = in_.sensor_type(s);
      if (!std::isfinite(type.initial_energy)) continue;
      const SensorId id = Id(s);
      LpRow& r = Row(Name("energy", {id.node, id.kind}), family::kEnergy,
                     RowSense::kLessEqual, type.initial_energy);
      for (int t = 1; t <= T(); ++t) {
        Add(r, layout_.z(s, t), type.sense_energy);
        for (int a = 0; a < P(); ++a) {
          const double coefficient =
              a == s ? type.receive_energy + type.transmit_energy
                     : type.receive_energy;
          Add(r, layout_.y(a, s, t), coefficient);
        }
        for (int b = 0; b < P(); ++b) {
          if (b != s) Add(r, layout_.y(s, b, t), type.transmit_energy);
        }
        for (NodeId j = 1; j <= N(); ++j) {
          Add(r, layout_.g(s, j, t), type.transmit_energy);
        }
      }
    }
  }

  void BudgetRows() {
    LpRow& budget =
        Row("budget", family::kBudget, RowSense::kLessEqual, in_.budget());
    for (NodeId j = 1; j <= N(); ++j) {
      for (int k = 0; k <= K(); ++k) Add(budget, layout_.x(j, k), in_.cost(j, k));
    }
    LpRow& sinks = Row("sinks", family::kSinkCount, RowSense::kEqual,
                       in_.sink_count());
    for (NodeId j = 1; j <= N(); ++j) Add(sinks, layout_.x(j, kSinkKind), 1.0);
    if (!options_.fixed_sinks) return;
    std::vector<char> pinned(N() + 1, 0);
    for (NodeId j : *options_.fixed_sinks) {
      if (j < 1 || j > N()) {
        throw std::invalid_argument("fixed sink " + std::to_string(j) +
                                    " is not a node");
      }
      pinned[j] = 1;
    }
    for (NodeId j = 1; j <= N(); ++j) {
      LpRow& r = Row(Name("fixsink", {j}), kFixedSinks, RowSense::kEqual,
                     pinned[j]);
      Add(r, layout_.x(j, kSinkKind), 1.0);
    }
  }

  void AlphaCutRows() {
    for (int t = 1; t <= T(); ++t) {
      for (int a = 0; a < P(); ++a) {
        const SensorId ia = Id(a);
        LpRow& r = Row(Name("alphacut", {ia.node, ia.kind, t}), kAlphaOutflow,
                       RowSense::kLessEqual, in_.alpha());
        for (int b = 0; b < P(); ++b) Add(r, layout_.wy(a, b, t), 1.0);
      }
    }
  }

  const Instance& in_;
  const ExportOptions& options_;
  Layout layout_;
  MilpModel model_;
};

void WriteRow(std::ostringstream& out, const MilpModel& model,
              const LpRow& row) {
  constexpr int kTermsPerLine = 8;
  out << ' ' << row.name << ':';
  if (row.terms.empty()) out << " 0 L";
  int on_line = 0;
  for (const LpTerm& term : row.terms) {
    if (on_line == kTermsPerLine) {
      out << "\n   ";
      on_line = 0;
    }
    const double c = term.coefficient;
    out << (c < 0 ? " - " : " + ");
    if (std::abs(c) != 1.0) out << Number(std::abs(c)) << ' ';
    out << model.variables()[term.variable].name;
    ++on_line;
  }
  switch (row.sense) {
    case RowSense::kLessEqual:
      out << " <= ";
      break;
    case RowSense::kGreaterEqual:
      out << " >= ";
      break;
    case RowSense::kEqual:
      out << " = ";
      break;
  }
  out << Number(row.rhs) << '\n';
}

struct ParsedName {
  char prefix = 0;
  std::vector<int> indices;
};

bool ParseName(std::string_view name, ParsedName& parsed) {
  if (name.empty()) return false;
  parsed.prefix = name[0];
  parsed.indices.clear();
  std::size_t pos = 1;
  while (pos < name.size()) {
    if (name[pos] != '_') return false;
    ++pos;
    int value = 0;
    auto [end, ec] = std::from_chars(name.data() + pos,
                                     name.data() + name.size(), value);
    if (ec != std::errc() || end == name.data() + pos) return false;
    parsed.indices.push_back(value);
    pos = end - name.data();
  }
  return true;
}

}  // namespace

int MilpModel::AddVariable(std::string name, VariableType type, double lower,
                           double upper) {
  const int id = static_cast<int>(variables_.size());
  index_.emplace(name, id);
  variables_.push_back({std::move(name), type, lower, upper});
  return id;
}

int MilpModel::Find(std::string_view name) const {
  auto it = index_.find(std::string(name));
  return it == index_.end() ? -1 : it->second;
}

ModelSize PredictModelSize(const Instance& instance,
                           const ExportOptions& options) {
  const std::int64_t n = instance.node_count();
  const std::int64_t k = instance.sensor_kinds();
  const std::int64_t p = instance.sensor_count();
  const std::int64_t t = instance.horizon();
  ModelSize size;
  size.variables = 1 + t + n * (k + 1) + p * t + n * p * t + 2 * p * p * t +
                   2 * p * n * t;
  size.rows = 2 * t                  // lifetime linking
              + n * t                // coverage
              + 2 * p * t            // activity linking
              + p * t                // connectivity
              + 2 * n * p * t + p * t  // assignment
              + p * t + p * p * t + 2 * p * t  // sensor flow bounds
              + p * n * t + n * t    // sink flow bounds
              + p * t + n * t        // balances
              + p * p * t + p * n * t + n * p * p * t + n * p * n * t  // routes
              + FiniteEnergySensors(instance) + 2;
  if (options.fixed_sinks) size.rows += n;
  if (options.alpha_outflow_cut) size.rows += p * t;
  return size;
}

MilpModel BuildMilpModel(const Instance& instance,
                         const ExportOptions& options) {
  const ModelSize size = PredictModelSize(instance, options);
  if (size.rows > options.row_cap) {
    throw RowCapExceeded("model has " + std::to_string(size.rows) +
                         " rows, above the cap of " +
                         std::to_string(options.row_cap));
  }
  return ModelBuilder(instance, options).Build();
}

std::string WriteLp(const MilpModel& model, std::string_view title) {
  std::ostringstream out;
  if (!title.empty()) out << "\\ " << title << '\n';
  out << "Maximize\n obj: L\nSubject To\n";
  for (const LpRow& row : model.rows()) WriteRow(out, model, row);
  out << "Bounds\n";
  for (const LpVariable& v : model.variables()) {
    if (v.type == VariableType::kBinary) continue;
    const bool default_bounds = v.lower == 0.0 && std::isinf(v.upper);
    if (default_bounds) continue;
    out << ' ' << Number(v.lower) << " <= " << v.name;
    if (!std::isinf(v.upper)) out << " <= " << Number(v.upper);
    out << '\n';
  }
  out << "General\n";
  for (const LpVariable& v : model.variables()) {
    if (v.type == VariableType::kInteger) out << ' ' << v.name << '\n';
  }
  out << "Binary\n";
  for (const LpVariable& v : model.variables()) {
    if (v.type == VariableType::kBinary) out << ' ' << v.name << '\n';
  }
  out << "End\n";
  return out.str();
}

std::string ExportModel(const Instance& instance,
                        const ExportOptions& options) {
  const MilpModel model = BuildMilpModel(instance, options);
  const std::string title = "wsnlife lifetime model N=" +
                            std::to_string(instance.node_count()) +
                            " K=" + std::to_string(instance.sensor_kinds()) +
                            " T=" + std::to_string(instance.horizon());
  return WriteLp(model, title);
}

std::string LpFileName(const Instance& instance) {
  return "spsrc_N" + std::to_string(instance.node_count()) + "_K" +
         std::to_string(instance.sensor_kinds()) + "_T" +
         std::to_string(instance.horizon()) + ".lp";
}

std::vector<double> SolutionValues(const MilpModel& model,
                                   const Instance& instance,
                                   const Solution& solution) {
  if (!solution.DimensionsMatch(instance)) {
    throw std::invalid_argument("solution dimensions do not match instance");
  }
  const Layout layout(instance);
  if (layout.size() != static_cast<int>(model.variables().size())) {
    throw std::invalid_argument("model was built for another instance");
  }
  std::vector<double> v(layout.size(), 0.0);
  v[layout.L()] = solution.lifetime();
  for (int t = 1; t <= instance.horizon(); ++t) {
    v[layout.n(t)] = solution.period_on(t);
  }
  for (NodeId j = 1; j <= instance.node_count(); ++j) {
    for (int k = 0; k <= instance.sensor_kinds(); ++k) {
      v[layout.x(j, k)] = solution.deployed(j, k);
    }
  }
  for (int t = 1; t <= instance.horizon(); ++t) {
    for (int s = 0; s < instance.sensor_count(); ++s) {
      const SensorId id = instance.sensor_at(s);
      v[layout.z(s, t)] = solution.active(id.node, id.kind, t);
    }
    for (const Assignment& a : solution.assignments(t)) {
      v[layout.u(a.sink, instance.sensor_index(a.sensor), t)] += 1.0;
    }
    for (const SensorFlow& f : solution.sensor_flows(t)) {
      const int a = instance.sensor_index(f.from);
      const int b = instance.sensor_index(f.to);
      v[layout.y(a, b, t)] += f.packets;
    }
    for (const SinkFlow& f : solution.sink_flows(t)) {
      v[layout.g(instance.sensor_index(f.from), f.sink, t)] += f.packets;
    }
    for (int a = 0; a < instance.sensor_count(); ++a) {
      for (int b = 0; b < instance.sensor_count(); ++b) {
        v[layout.wy(a, b, t)] = v[layout.y(a, b, t)] > 0.0;
      }
      for (NodeId j = 1; j <= instance.node_count(); ++j) {
        v[layout.wg(a, j, t)] = v[layout.g(a, j, t)] > 0.0;
      }
    }
  }
  return v;
}

std::string WriteSolutionValues(const MilpModel& model,
                                const std::vector<double>& values) {
  std::ostringstream out;
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (values[i] == 0.0) continue;
    out << model.variables()[i].name << ' ' << Number(values[i]) << '\n';
  }
  return out.str();
}

Solution ImportSolution(std::string_view text, const Instance& instance) {
  const int n = instance.node_count();
  const int k = instance.sensor_kinds();
  const int horizon = instance.horizon();
  Solution solution(n, k, horizon);

  auto node_ok = [&](int j) { return j >= 1 && j <= n; };
  auto kind_ok = [&](int kind) { return kind >= 1 && kind <= k; };
  auto period_ok = [&](int t) { return t >= 1 && t <= horizon; };
  auto binary = [](const std::string& name, double value) {
    const double r = std::round(value);
    if (std::abs(value - r) > kIntegralityTolerance || (r != 0.0 && r != 1.0)) {
      throw std::invalid_argument("binary variable " + name +
                                  " has non-binary value " + Number(value));
    }
    return r == 1.0;
  };

  std::istringstream in{std::string(text)};
  std::string line;
  ParsedName parsed;
  while (std::getline(in, line)) {
    std::istringstream fields(line);
    std::string name;
    if (!(fields >> name) || name[0] == '#') continue;
    double value = 0.0;
    if (!(fields >> value)) {
      throw std::invalid_argument("missing value for " + name);
    }
    const bool parsed_ok = ParseName(name, parsed);
    const auto& ix = parsed.indices;
    auto unknown = [&] {
      return std::invalid_argument("unknown variable name " + name);
    };
    if (!parsed_ok) throw unknown();
    if (value < -kIntegralityTolerance) {
      throw std::invalid_argument("negative value for " + name);
    }
    switch (parsed.prefix) {
      case 'L': {
        if (!ix.empty()) throw unknown();
        const double r = std::round(value);
        if (std::abs(value - r) > kIntegralityTolerance) {
          throw std::invalid_argument("L has non-integral value " +
                                      Number(value));
        }
        solution.set_lifetime(static_cast<int>(r));
        break;
      }
      case 'n':
        if (ix.size() != 1 || !period_ok(ix[0])) throw unknown();
        solution.set_period_on(ix[0], binary(name, value));
        break;
      case 'x':
        if (ix.size() != 2 || !node_ok(ix[0]) || ix[1] < 0 || ix[1] > k) {
          throw unknown();
        }
        solution.set_deployed(ix[0], ix[1], binary(name, value));
        break;
      case 'z':
        if (ix.size() != 3 || !node_ok(ix[0]) || !kind_ok(ix[1]) ||
            !period_ok(ix[2])) {
          throw unknown();
        }
        solution.set_active(ix[0], ix[1], ix[2], binary(name, value));
        break;
      case 'u':
        if (ix.size() != 4 || !node_ok(ix[0]) || !node_ok(ix[1]) ||
            !kind_ok(ix[2]) || !period_ok(ix[3])) {
          throw unknown();
        }
        if (binary(name, value)) {
          solution.assignments(ix[3]).push_back({ix[0], {ix[1], ix[2]}});
        }
        break;
      case 'y':
        if (ix.size() != 5 || !node_ok(ix[0]) || !kind_ok(ix[1]) ||
            !node_ok(ix[2]) || !kind_ok(ix[3]) || !period_ok(ix[4])) {
          throw unknown();
        }
        if (value > 0.0) {
          solution.sensor_flows(ix[4]).push_back(
              {{ix[0], ix[1]}, {ix[2], ix[3]}, value});
        }
        break;
      case 'g':
        if (ix.size() != 4 || !node_ok(ix[0]) || !kind_ok(ix[1]) ||
            !node_ok(ix[2]) || !period_ok(ix[3])) {
          throw unknown();
        }
        if (value > 0.0) {
          solution.sink_flows(ix[3]).push_back({{ix[0], ix[1]}, ix[2], value});
        }
        break;
      case 'w':
        // Flow indicators are implied by y and g.
        if (ix.size() != 5 || !node_ok(ix[0]) || !kind_ok(ix[1]) ||
            !node_ok(ix[2]) || ix[3] < 0 || ix[3] > k || !period_ok(ix[4])) {
          throw unknown();
        }
        binary(name, value);
        break;
      default:
        throw unknown();
    }
  }
  solution.Canonicalize();
  return solution;
}

std::vector<RowViolation> CheckRows(const MilpModel& model,
                                    const std::vector<double>& values,
                                    double tolerance) {
  if (values.size() != model.variables().size()) {
    throw std::invalid_argument("value vector does not match the model");
  }
  std::vector<RowViolation> violations;
  for (std::size_t i = 0; i < values.size(); ++i) {
    const LpVariable& v = model.variables()[i];
    const double x = values[i];
    if (x < v.lower - tolerance || x > v.upper + tolerance) {
      violations.push_back({v.name, "bounds",
                            std::max(v.lower - x, x - v.upper)});
    }
    if (v.type != VariableType::kContinuous &&
        std::abs(x - std::round(x)) > tolerance) {
      violations.push_back({v.name, "integrality",
                            std::abs(x - std::round(x))});
    }
  }
  for (const LpRow& row : model.rows()) {
    double lhs = 0.0;
    for (const LpTerm& term : row.terms) {
      lhs += term.coefficient * values[term.variable];
    }
    double excess = 0.0;
    switch (row.sense) {
      case RowSense::kLessEqual:
        excess = lhs - row.rhs;
        break;
      case RowSense::kGreaterEqual:
        excess = row.rhs - lhs;
        break;
      case RowSense::kEqual:
        excess = std::abs(lhs - row.rhs);
        break;
    }
    if (excess > tolerance) violations.push_back({row.name, row.family, excess});
  }
  return violations;
}

}  // namespace wsnlife
