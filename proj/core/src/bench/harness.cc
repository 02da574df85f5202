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


#include "planar/bench/harness.h"

#include <algorithm>
#include <chrono>
#include <string>

#include "planar/common/error.h"
#include "planar/domains/generators.h"
#include "planar/lqr/lqr_solver.h"

namespace planar {
namespace {

using Clock = std::chrono::steady_clock;

double Seconds(Clock::time_point since) {
  return std::chrono::duration<double>(Clock::now() - since).count();
}

enum SeedStream : std::uint64_t { kTrainEnv = 0, kEvalEnv = 1, kAgent = 2 };

}  // namespace

EpisodeResult RunEpisode(Environment& env, Agent& agent,
                         const EpisodeOptions& options) {
  const auto start = Clock::now();
  EpisodeResult result;
  result.agent = std::string(agent.name());
  TimeStep step = env.Reset();
  agent.BeginEpisode(options.explore);
  while (!step.last() && result.steps < options.max_steps) {
    std::vector<double> action = agent.Act(step.observation, options.explore);
    TimeStep next;
    try {
      next = env.Step(action);
    } catch (const SimulationDivergence& e) {
      throw SimulationDivergence("episode step " +
                                 std::to_string(result.steps) + ": " +
                                 e.what());
    }
    result.episode_return += next.reward.value_or(0.0);
    ++result.steps;
    if (options.train) agent.Observe(step.observation, action, next);
    step = std::move(next);
  }
  result.wallclock_s = Seconds(start);
  return result;
}

std::unique_ptr<Agent> MakeAgent(const std::string& name,
                                 const ControlEnvironment& env,
                                 std::uint64_t seed, const DdpgConfig& ddpg) {
  if (name == "random") {
    return std::make_unique<RandomAgent>(env.action_spec(), seed);
  }
  if (name == "lqr") {
    const LinearSystem sys =
        LqrTaskSystem(env.physics().model(), env.options().n_sub_steps);
    return std::make_unique<LqrAgent>(SolveDare(sys).K);
  }
  if (name == "ddpg") {
    return std::make_unique<Ddpg>(FlatSize(env.observation_spec()),
                                  env.action_spec(), ddpg, seed);
  }
  throw ConfigError("unknown agent '" + name + "' (random, lqr, ddpg)");
}

void BenchmarkConfig::Validate() const {
  if (tasks.empty()) throw ConfigError("no tasks");
  if (seeds.empty()) throw ConfigError("no seeds");
  if (eval_every <= 0) throw ConfigError("eval_every must be positive");
  if (total_steps < eval_every) {
    throw ConfigError("total_steps must be at least eval_every");
  }
  if (eval_episodes <= 0) throw ConfigError("eval_episodes must be positive");
  if (agent != "random" && agent != "lqr" && agent != "ddpg") {
    throw ConfigError("unknown agent '" + agent + "'");
  }
  for (const TaskId& id : tasks) {
    bool known = false;
    for (const TaskId& t : AllTasks()) known = known || t == id;
    if (!known) throw ConfigError("unknown task '" + id.ToString() + "'");
  }
}

std::vector<CurveRow> RunBenchmark(
    const BenchmarkConfig& config,
    const std::function<void(const CurveRow&)>& on_row) {
  config.Validate();
  std::vector<CurveRow> rows;
  for (const TaskId& id : config.tasks) {
    for (std::uint64_t seed : config.seeds) {
      const auto start = Clock::now();
      auto train_env = Load(id.domain, id.task, DeriveSeed(seed, kTrainEnv));
      auto eval_env = Load(id.domain, id.task, DeriveSeed(seed, kEvalEnv));
      auto agent = MakeAgent(config.agent, *train_env,
                             DeriveSeed(seed, kAgent), config.ddpg);
      std::int64_t steps = 0;
      while (steps < config.total_steps) {
        const std::int64_t goal =
            std::min(steps + config.eval_every, config.total_steps);
        if (agent->learns()) {
          while (steps < goal) {
            EpisodeOptions opts;
            opts.explore = true;
            opts.train = true;
            opts.max_steps = static_cast<int>(goal - steps);
            steps += RunEpisode(*train_env, *agent, opts).steps;
          }
        } else {
          steps = goal;
        }
        double total = 0.0;
        for (int e = 0; e < config.eval_episodes; ++e) {
          total += RunEpisode(*eval_env, *agent).episode_return;
        }
        CurveRow row;
        row.domain = id.domain;
        row.task = id.task;
        row.agent = config.agent;
        row.seed = seed;
        row.env_steps = steps;
        row.mean_return = total / config.eval_episodes;
        row.wallclock_s = config.record_wallclock ? Seconds(start) : 0.0;
        rows.push_back(row);
        if (on_row) on_row(row);
        if (config.stop_return && row.mean_return >= *config.stop_return) break;
      }
    }
  }
  return rows;
}

}  // namespace planar
