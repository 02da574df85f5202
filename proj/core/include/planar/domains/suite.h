// Copyright 2026 The Planar Control Authors
//
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

#ifndef PLANAR_DOMAINS_SUITE_H_
#define PLANAR_DOMAINS_SUITE_H_

#include <cstdint>
#include <memory>
#include <string>
#include <string_view>
#include <vector>

#include "planar/domains/control_environment.h"

namespace planar {

struct TaskId {
  std::string domain;
  std::string task;

  std::string ToString() const { return domain + ":" + task; }
  bool operator==(const TaskId&) const = default;
  auto operator<=>(const TaskId&) const = default;
};

// Tasks agents are expected to solve.
const std::vector<TaskId>& BenchmarkingTasks();
// Harder or non-conforming tasks (point_mass:hard, cart-k-pole, LQR).
const std::vector<TaskId>& ExtraTasks();
// BENCHMARKING followed by EXTRA.
const std::vector<TaskId>& AllTasks();
bool IsBenchmarking(const TaskId& id);

// Builds a fully wired environment. Throws LookupError listing the valid
// tasks when (domain, task) is unknown.
std::unique_ptr<ControlEnvironment> Load(std::string_view domain,
                                         std::string_view task,
                                         std::uint64_t seed,
                                         const EnvironmentOptions& options = {});

// Dimension triple: (nq + nv, action size, observation size).
struct TaskDims {
  int state = 0;
  int action = 0;
  int observation = 0;
  bool operator==(const TaskDims&) const = default;
};
TaskDims Dimensions(const ControlEnvironment& env);

}  // namespace planar

#endif  // PLANAR_DOMAINS_SUITE_H_
