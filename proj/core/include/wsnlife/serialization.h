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

// JSON encoding of instances, solutions and validation reports.
//
// Instances store the primary data only; coefficient matrices are rebuilt on
// load. Solutions store sparse per-period lists. Both documents carry a
// "schema" name and a "version" number.

#ifndef WSNLIFE_SERIALIZATION_H_
#define WSNLIFE_SERIALIZATION_H_

#include <string>
#include <string_view>

#include "wsnlife/instance.h"
#include "wsnlife/solution.h"
#include "wsnlife/validator.h"

namespace wsnlife {

inline constexpr int kSchemaVersion = 1;

std::string InstanceToJson(const Instance& instance);
// Throws std::invalid_argument on malformed or inconsistent input.
Instance InstanceFromJson(std::string_view text);

std::string SolutionToJson(const Solution& solution);
Solution SolutionFromJson(std::string_view text);

std::string ReportToJson(const ValidationReport& report);

// Throws std::runtime_error on I/O failure.
std::string ReadTextFile(const std::string& path);
void WriteTextFile(const std::string& path, std::string_view contents);

}  // namespace wsnlife

#endif  // WSNLIFE_SERIALIZATION_H_
