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

// Small hand-built instances and solutions shared by several test binaries.

#ifndef WSNLIFE_TESTS_SUPPORT_FIXTURES_H_
#define WSNLIFE_TESTS_SUPPORT_FIXTURES_H_

#include <string>

#include "wsnlife/instance.h"
#include "wsnlife/solution.h"

namespace wsnlife::testing {

std::string DataPath(const std::string& file);

// The 4x4 two-period network with sinks at nodes 8 and 14 and eight sensors.
Instance SampleNetworkInstance();
Solution SampleNetworkSolution();

// 3x3 grid, default sensor types at low energy, S = 1, T = 1, f = 0. Only
// sensors (1, 1) and (2, 1) are deployed; (1, 1) relays nothing and sends 24
// packets to (2, 1), which forwards 48 packets to the sink at node 3.
Instance ChainInstance();
Solution ChainSolution();

// S = 0 and f = 0 everywhere, so the empty schedule is a valid solution.
Instance EmptyFriendlyInstance();

}  // namespace wsnlife::testing

#endif  // WSNLIFE_TESTS_SUPPORT_FIXTURES_H_
