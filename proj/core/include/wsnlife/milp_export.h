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

#ifndef WSNLIFE_MILP_EXPORT_H_
#define WSNLIFE_MILP_EXPORT_H_

#include <cstdint>
#include <limits>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <unordered_map>
#include <utility>
#include <vector>

#include "wsnlife/instance.h"
#include "wsnlife/solution.h"

namespace wsnlife {

struct ExportOptions {
  // Pins x_{j0} to the given sink set (fixed-sink mode).
  std::optional<std::vector<NodeId>> fixed_sinks;
  // The exporter refuses models with more rows than this.
  std::int64_t row_cap = 200000;
  // Emits sum_{(j,k)} w_{iljkt} <= alpha. The cut also removes feasible
  // points that split a sensor's outflow over more than alpha neighbours.
  bool alpha_outflow_cut = true;
};

class RowCapExceeded : public std::length_error {
 public:
  using std::length_error::length_error;
};

enum class VariableType { kContinuous, kInteger, kBinary };
enum class RowSense { kLessEqual, kGreaterEqual, kEqual };

struct LpVariable {
  std::string name;
  VariableType type = VariableType::kContinuous;
  double lower = 0.0;
  double upper = std::numeric_limits<double>::infinity();
};

struct LpTerm {
  int variable = 0;
  double coefficient = 0.0;
};

struct LpRow {
  std::string name;
  std::string family;
  std::vector<LpTerm> terms;
  RowSense sense = RowSense::kLessEqual;
  double rhs = 0.0;
};

struct ModelSize {
  std::int64_t variables = 0;
  std::int64_t rows = 0;
};

class MilpModel {
 public:
  int AddVariable(std::string name, VariableType type, double lower,
                  double upper);
  LpRow& AddRow(LpRow row) {
    rows_.push_back(std::move(row));
    return rows_.back();
  }

  const std::vector<LpVariable>& variables() const { return variables_; }
  const std::vector<LpRow>& rows() const { return rows_; }
  // -1 when the name is not registered.
  int Find(std::string_view name) const;

  double big_m1 = 0.0;
  double big_m2 = 0.0;

 private:
  std::vector<LpVariable> variables_;
  std::vector<LpRow> rows_;
  std::unordered_map<std::string, int> index_;
};

// Exact variable and row counts of the exported model, computed without
// building it.
ModelSize PredictModelSize(const Instance& instance,
                           const ExportOptions& options = {});

// Throws RowCapExceeded when the predicted row count exceeds the cap.
MilpModel BuildMilpModel(const Instance& instance,
                         const ExportOptions& options = {});

// LP text with sections Maximize, Subject To, Bounds, General, Binary.
std::string WriteLp(const MilpModel& model, std::string_view title = "");
std::string ExportModel(const Instance& instance,
                        const ExportOptions& options = {});

// spsrc_N{n}_K{k}_T{t}.lp
std::string LpFileName(const Instance& instance);

// Values of every model variable for a solution; w is one exactly where the
// corresponding flow is positive.
std::vector<double> SolutionValues(const MilpModel& model,
                                   const Instance& instance,
                                   const Solution& solution);

// One "name value" line per non-zero variable.
std::string WriteSolutionValues(const MilpModel& model,
                                const std::vector<double>& values);

// Parses "name value" lines (blank lines and lines starting with '#' are
// skipped; missing variables are zero). Throws std::invalid_argument on
// unknown names or binaries further than 1e-6 from {0, 1}.
Solution ImportSolution(std::string_view text, const Instance& instance);

struct RowViolation {
  std::string row;
  std::string family;
  double amount = 0.0;
};

// Substitutes the values into every row, bound and integrality requirement.
std::vector<RowViolation> CheckRows(const MilpModel& model,
                                    const std::vector<double>& values,
                                    double tolerance = 1e-6);

}  // namespace wsnlife

#endif  // WSNLIFE_MILP_EXPORT_H_
