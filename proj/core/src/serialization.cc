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

#include "wsnlife/serialization.h"

#include <cmath>
#include <fstream>
#include <sstream>
#include <stdexcept>
#include <utility>
#include <vector>

#include "json.hpp"

namespace wsnlife {
namespace {

using nlohmann::ordered_json;

constexpr char kInstanceSchema[] = "wsnlife.instance";
constexpr char kSolutionSchema[] = "wsnlife.solution";

void CheckHeader(const ordered_json& doc, const char* schema) {
  if (!doc.is_object() || doc.value("schema", "") != schema) {
    throw std::invalid_argument(std::string("expected a '") + schema +
                                "' document");
  }
  const int version = doc.value("version", 0);
  if (version != kSchemaVersion) {
    throw std::invalid_argument("unsupported " + std::string(schema) +
                                " version " + std::to_string(version));
  }
}

ordered_json Parse(std::string_view text) {
  try {
    return ordered_json::parse(text);
  } catch (const ordered_json::parse_error& e) {
    throw std::invalid_argument(std::string("invalid JSON: ") + e.what());
  }
}

ordered_json TypeToJson(const SensorType& t) {
  ordered_json j;
  j["k"] = t.kind;
  j["cost_range"] = {t.cost_range.low, t.cost_range.high};
  if (t.cost_range.anchor_kind >= 0) {
    j["cost_anchor_kind"] = t.cost_range.anchor_kind;
  }
  j["h"] = t.packets_per_period;
  j["r_s"] = t.sensing_range;
  j["r_c"] = t.comm_range;
  j["e_s"] = t.sense_energy;
  j["e_r"] = t.receive_energy;
  j["e_c"] = t.transmit_energy;
  if (std::isinf(t.initial_energy)) {
    j["E"] = nullptr;
  } else {
    j["E"] = t.initial_energy;
  }
  return j;
}

SensorType TypeFromJson(const ordered_json& j) {
  SensorType t;
  t.kind = j.at("k").get<int>();
  const auto& range = j.at("cost_range");
  t.cost_range.low = range.at(0).get<double>();
  t.cost_range.high = range.at(1).get<double>();
  t.cost_range.anchor_kind = j.value("cost_anchor_kind", -1);
  t.packets_per_period = j.at("h").get<int>();
  t.sensing_range = j.at("r_s").get<double>();
  t.comm_range = j.at("r_c").get<double>();
  t.sense_energy = j.at("e_s").get<double>();
  t.receive_energy = j.at("e_r").get<double>();
  t.transmit_energy = j.at("e_c").get<double>();
  const auto& e = j.at("E");
  t.initial_energy = e.is_null() ? kUnboundedEnergy : e.get<double>();
  return t;
}

SensorId SensorFromJson(const ordered_json& j, std::size_t offset = 0) {
  return {j.at(offset).get<int>(), j.at(offset + 1).get<int>()};
}

}  // namespace

std::string InstanceToJson(const Instance& instance) {
  const InstanceData& d = instance.data();
  ordered_json doc;
  doc["schema"] = kInstanceSchema;
  doc["version"] = kSchemaVersion;
  doc["side"] = d.side;
  doc["N"] = instance.node_count();
  doc["K"] = instance.sensor_kinds();
  doc["T"] = d.horizon;
  doc["alpha"] = d.alpha;
  doc["S"] = d.sink_count;
  doc["B"] = d.budget;
  doc["sensing_metric"] = std::string(MetricName(d.sensing_metric));
  doc["comm_metric"] = std::string(MetricName(d.comm_metric));
  doc["f"] = d.coverage_requirement;
  ordered_json types = ordered_json::array();
  for (const SensorType& t : d.types) types.push_back(TypeToJson(t));
  doc["types"] = std::move(types);
  ordered_json costs = ordered_json::array();
  const int width = instance.sensor_kinds() + 1;
  for (int j = 0; j < instance.node_count(); ++j) {
    ordered_json row = ordered_json::array();
    for (int k = 0; k < width; ++k) row.push_back(d.costs[j * width + k]);
    costs.push_back(std::move(row));
  }
  doc["c"] = std::move(costs);
  return doc.dump(1) + "\n";
}

Instance InstanceFromJson(std::string_view text) {
  const ordered_json doc = Parse(text);
  CheckHeader(doc, kInstanceSchema);
  try {
    InstanceData d;
    d.side = doc.at("side").get<int>();
    d.horizon = doc.at("T").get<int>();
    d.alpha = doc.at("alpha").get<int>();
    d.sink_count = doc.at("S").get<int>();
    d.budget = doc.at("B").get<double>();
    d.sensing_metric =
        ParseMetric(doc.value("sensing_metric", std::string("euclidean")));
    d.comm_metric =
        ParseMetric(doc.value("comm_metric", std::string("euclidean")));
    d.coverage_requirement = doc.at("f").get<std::vector<int>>();
    for (const auto& t : doc.at("types")) d.types.push_back(TypeFromJson(t));
    for (const auto& row : doc.at("c")) {
      for (const auto& c : row) d.costs.push_back(c.get<double>());
    }
    if (doc.contains("N") && doc["N"].get<int>() != d.side * d.side) {
      throw std::invalid_argument("N does not match side * side");
    }
    if (doc.contains("K") &&
        doc["K"].get<int>() != static_cast<int>(d.types.size()) - 1) {
      throw std::invalid_argument("K does not match the type catalogue");
    }
    return Instance(std::move(d));
  } catch (const ordered_json::exception& e) {
    throw std::invalid_argument(std::string("malformed instance: ") +
                                e.what());
  }
}

std::string SolutionToJson(const Solution& solution) {
  ordered_json doc;
  doc["schema"] = kSolutionSchema;
  doc["version"] = kSchemaVersion;
  doc["N"] = solution.nodes();
  doc["K"] = solution.kinds();
  doc["T"] = solution.horizon();
  doc["L"] = solution.lifetime();
  std::vector<int> n;
  for (int t = 1; t <= solution.horizon(); ++t) {
    n.push_back(solution.period_on(t) ? 1 : 0);
  }
  doc["n"] = n;
  ordered_json x = ordered_json::array();
  for (NodeId j = 1; j <= solution.nodes(); ++j) {
    for (int k = 0; k <= solution.kinds(); ++k) {
      if (solution.deployed(j, k)) x.push_back({j, k});
    }
  }
  doc["x"] = std::move(x);
  ordered_json periods = ordered_json::array();
  for (int t = 1; t <= solution.horizon(); ++t) {
    ordered_json z = ordered_json::array();
    for (NodeId j = 1; j <= solution.nodes(); ++j) {
      for (int k = 1; k <= solution.kinds(); ++k) {
        if (solution.active(j, k, t)) z.push_back({j, k});
      }
    }
    const auto& us = solution.assignments(t);
    const auto& ys = solution.sensor_flows(t);
    const auto& gs = solution.sink_flows(t);
    if (z.empty() && us.empty() && ys.empty() && gs.empty()) continue;
    ordered_json p;
    p["t"] = t;
    p["z"] = std::move(z);
    ordered_json u = ordered_json::array();
    for (const Assignment& a : us) {
      u.push_back({a.sink, a.sensor.node, a.sensor.kind});
    }
    p["u"] = std::move(u);
    ordered_json y = ordered_json::array();
    for (const SensorFlow& f : ys) {
      y.push_back({f.from.node, f.from.kind, f.to.node, f.to.kind, f.packets});
    }
    p["y"] = std::move(y);
    ordered_json g = ordered_json::array();
    for (const SinkFlow& f : gs) {
      g.push_back({f.from.node, f.from.kind, f.sink, f.packets});
    }
    p["g"] = std::move(g);
    periods.push_back(std::move(p));
  }
  doc["periods"] = std::move(periods);
  return doc.dump(1) + "\n";
}

Solution SolutionFromJson(std::string_view text) {
  const ordered_json doc = Parse(text);
  CheckHeader(doc, kSolutionSchema);
  try {
    const int nodes = doc.at("N").get<int>();
    const int kinds = doc.at("K").get<int>();
    const int horizon = doc.at("T").get<int>();
    if (nodes < 1 || kinds < 1 || horizon < 1) {
      throw std::invalid_argument("solution dimensions must be positive");
    }
    Solution s(nodes, kinds, horizon);
    s.set_lifetime(doc.at("L").get<int>());
    const auto n = doc.at("n").get<std::vector<int>>();
    if (static_cast<int>(n.size()) != horizon) {
      throw std::invalid_argument("'n' must have T entries");
    }
    for (int t = 1; t <= horizon; ++t) s.set_period_on(t, n[t - 1] != 0);
    auto check_node = [&](int j) {
      if (j < 1 || j > nodes) {
        throw std::invalid_argument("node " + std::to_string(j) +
                                    " out of range");
      }
    };
    auto check_kind = [&](int k, int lowest) {
      if (k < lowest || k > kinds) {
        throw std::invalid_argument("kind " + std::to_string(k) +
                                    " out of range");
      }
    };
    for (const auto& e : doc.at("x")) {
      const SensorId id = SensorFromJson(e);
      check_node(id.node);
      check_kind(id.kind, 0);
      s.set_deployed(id.node, id.kind, true);
    }
    for (const auto& p : doc.at("periods")) {
      const int t = p.at("t").get<int>();
      if (t < 1 || t > horizon) {
        throw std::invalid_argument("period " + std::to_string(t) +
                                    " out of range");
      }
      for (const auto& e : p.at("z")) {
        const SensorId id = SensorFromJson(e);
        check_node(id.node);
        check_kind(id.kind, 1);
        s.set_active(id.node, id.kind, t, true);
      }
      for (const auto& e : p.at("u")) {
        s.assignments(t).push_back(
            {e.at(0).get<int>(), SensorFromJson(e, 1)});
      }
      for (const auto& e : p.at("y")) {
        s.sensor_flows(t).push_back(
            {SensorFromJson(e, 0), SensorFromJson(e, 2), e.at(4).get<double>()});
      }
      for (const auto& e : p.at("g")) {
        s.sink_flows(t).push_back(
            {SensorFromJson(e, 0), e.at(2).get<int>(), e.at(3).get<double>()});
      }
    }
    return s;
  } catch (const ordered_json::exception& e) {
    throw std::invalid_argument(std::string("malformed solution: ") +
                                e.what());
  }
}

std::string ReportToJson(const ValidationReport& report) {
  ordered_json doc;
  doc["feasible"] = report.feasible();
  ordered_json list = ordered_json::array();
  for (const Violation& v : report.violations) {
    ordered_json j;
    j["family"] = v.family;
    j["location"] = v.location;
    j["magnitude"] = v.magnitude;
    j["detail"] = v.detail;
    list.push_back(std::move(j));
  }
  doc["violations"] = std::move(list);
  return doc.dump(1) + "\n";
}

std::string ReadTextFile(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open " + path);
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

void WriteTextFile(const std::string& path, std::string_view contents) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw std::runtime_error("cannot write " + path);
  out.write(contents.data(), static_cast<std::streamsize>(contents.size()));
  if (!out) throw std::runtime_error("write failed for " + path);
}

}  // namespace wsnlife
