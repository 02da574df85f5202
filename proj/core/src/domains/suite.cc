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

#include "planar/domains/suite.h"

#include <algorithm>
#include <string>

#include "planar/common/error.h"
#include "tasks.h"

namespace planar {

const std::vector<TaskId>& BenchmarkingTasks() {
  static const std::vector<TaskId> kTasks = {
      {"acrobot", "swingup"},     {"acrobot", "swingup_sparse"},
      {"cartpole", "balance"},    {"cartpole", "balance_sparse"},
      {"cartpole", "swingup"},    {"cartpole", "swingup_sparse"},
      {"pendulum", "swingup"},    {"point_mass", "easy"},
      {"reacher", "easy"},        {"reacher", "hard"},
      {"swimmer", "swimmer6"},    {"swimmer", "swimmer15"},
  };
  return kTasks;
}

const std::vector<TaskId>& ExtraTasks() {
  static const std::vector<TaskId> kTasks = {
      {"cartpole", "two_poles"}, {"cartpole", "three_poles"},
      {"point_mass", "hard"},    {"lqr", "lqr_2_1"},
      {"lqr", "lqr_6_2"},
  };
  return kTasks;
}

const std::vector<TaskId>& AllTasks() {
  static const std::vector<TaskId> kTasks = [] {
    std::vector<TaskId> all = BenchmarkingTasks();
    all.insert(all.end(), ExtraTasks().begin(), ExtraTasks().end());
    return all;
  }();
  return kTasks;
}

bool IsBenchmarking(const TaskId& id) {
  const auto& tasks = BenchmarkingTasks();
  return std::find(tasks.begin(), tasks.end(), id) != tasks.end();
}

std::unique_ptr<ControlEnvironment> Load(std::string_view domain,
                                         std::string_view task,
                                         std::uint64_t seed,
                                         const EnvironmentOptions& options) {
  const TaskId id{std::string(domain), std::string(task)};
  const auto& all = AllTasks();
  if (std::find(all.begin(), all.end(), id) == all.end()) {
    std::string valid;
    for (const TaskId& t : all) valid += (valid.empty() ? "" : ", ") + t.ToString();
    throw LookupError("unknown task '" + id.ToString() + "'; valid tasks: " +
                      valid);
  }
  if (domain == "pendulum") return domains::LoadPendulum(task, seed, options);
  if (domain == "acrobot") return domains::LoadAcrobot(task, seed, options);
  if (domain == "cartpole") return domains::LoadCartpole(task, seed, options);
  if (domain == "point_mass") return domains::LoadPointMass(task, seed, options);
  if (domain == "reacher") return domains::LoadReacher(task, seed, options);
  if (domain == "swimmer") return domains::LoadSwimmer(task, seed, options);
  return domains::LoadLqr(task, seed, options);
}

TaskDims Dimensions(const ControlEnvironment& env) {
  const CompiledModel& m = env.physics().model();
  return {m.nq + m.nv, env.action_spec().size(),
          FlatSize(env.observation_spec())};
}

}  // namespace planar
