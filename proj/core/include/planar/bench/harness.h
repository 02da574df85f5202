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


#ifndef PLANAR_BENCH_HARNESS_H_
#define PLANAR_BENCH_HARNESS_H_

#include <cstdint>
#include <functional>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "planar/agents/agent.h"
#include "planar/agents/ddpg.h"
#include "planar/domains/suite.h"
#include "planar/env/environment.h"

namespace planar {

struct EpisodeResult {
  std::string domain;
  std::string task;
  std::string agent;
  std::uint64_t seed = 0;
  int episode = 0;
  double episode_return = 0.0;
  int steps = 0;
  double wallclock_s = 0.0;
};

struct EpisodeOptions {
  int max_steps = 1000;
  bool explore = false;
  // Feed every transition to Agent::Observe.
  bool train = false;
};

// Runs until LAST or max_steps control steps. Simulation errors are
// rethrown as SimulationDivergence naming the step.
EpisodeResult RunEpisode(Environment& env, Agent& agent,
                         const EpisodeOptions& options = {});

// Builds "random", "lqr" (lqr domain only) or "ddpg" for an environment.
std::unique_ptr<Agent> MakeAgent(const std::string& name,
                                 const ControlEnvironment& env,
                                 std::uint64_t seed,
                                 const DdpgConfig& ddpg = {});

// One row of a learning-curve CSV.
struct CurveRow {
  std::string domain;
  std::string task;
  std::string agent;
  std::uint64_t seed = 0;
  std::int64_t env_steps = 0;
  double mean_return = 0.0;
  double wallclock_s = 0.0;

  bool operator==(const CurveRow&) const = default;
};

struct BenchmarkConfig {
  std::vector<TaskId> tasks;
  std::string agent = "random";
  std::vector<std::uint64_t> seeds = {0};
  std::int64_t total_steps = 100000;
  std::int64_t eval_every = 100000;
  int eval_episodes = 10;
  // With false every wallclock_s is written as 0 so CSVs are reproducible.
  bool record_wallclock = true;
  // Stop a (task, seed) run after the first evaluation reaching this mean.
  std::optional<double> stop_return;
  DdpgConfig ddpg;

  // Throws ConfigError.
  void Validate() const;
};

// For every (task, seed): trains for eval_every environment steps (learning
// agents only), then evaluates eval_episodes exploration-free episodes, until
// total_steps. One row per evaluation point.
std::vector<CurveRow> RunBenchmark(
    const BenchmarkConfig& config,
    const std::function<void(const CurveRow&)>& on_row = {});

}  // namespace planar

#endif  // PLANAR_BENCH_HARNESS_H_
