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

#ifndef PLANAR_DOMAINS_CONTROL_ENVIRONMENT_H_
#define PLANAR_DOMAINS_CONTROL_ENVIRONMENT_H_

#include <cstdint>
#include <memory>
#include <optional>
#include <span>

#include "planar/common/random.h"
#include "planar/dynamics/physics.h"
#include "planar/env/environment.h"

namespace planar {

// MDP structure layered on a physics model.
class Task {
 public:
  virtual ~Task() = default;

  // Samples the initial state, normally via physics.Reset(...).
  virtual void InitializeEpisode(Physics& physics, Rng& rng) = 0;
  // Maps a (clipped) action to controls. Default: ctrl = action.
  virtual void BeforeStep(std::span<const double> action, Physics& physics);
  virtual Observation GetObservation(const Physics& physics) const = 0;
  virtual double GetReward(const Physics& physics) const = 0;
  // Discount to report when the episode should end early, else nullopt.
  virtual std::optional<double> GetTermination(const Physics&) const {
    return std::nullopt;
  }
  // Default: one element per actuator, bounded by ctrlrange when every
  // actuator is ctrllimited, unbounded otherwise.
  virtual ArraySpec GetActionSpec(const Physics& physics) const;
};

struct EnvironmentOptions {
  int episode_length = 1000;  // control steps
  int n_sub_steps = 4;        // physics steps per control step
  bool visualize_reward = false;
};

// Environment driving a Physics with a Task. Actions outside the spec are
// clipped; wrong shapes, non-finite values, stepping before Reset() or after
// LAST raise ContractError.
class ControlEnvironment : public Environment {
 public:
  ControlEnvironment(Physics physics, std::unique_ptr<Task> task,
                     std::uint64_t seed, EnvironmentOptions options = {});

  TimeStep Reset() override;
  TimeStep Step(std::span<const double> action) override;
  ArraySpec action_spec() const override { return action_spec_; }
  ObservationSpec observation_spec() const override { return observation_spec_; }
  Array Render(int width, int height, int camera = 0) const override;
  bool can_render() const override { return true; }

  const Physics& physics() const { return physics_; }
  Physics& mutable_physics() { return physics_; }
  const Task& task() const { return *task_; }
  const EnvironmentOptions& options() const { return options_; }
  // Seconds of simulated time per control step.
  double control_timestep() const {
    return options_.n_sub_steps * physics_.timestep();
  }
  int step_count() const { return step_count_; }
  std::optional<double> last_reward() const { return last_reward_; }

 private:
  Physics physics_;
  std::unique_ptr<Task> task_;
  EnvironmentOptions options_;
  Rng rng_;
  ArraySpec action_spec_;
  ObservationSpec observation_spec_;
  std::vector<double> clipped_;
  int step_count_ = 0;
  bool started_ = false;
  bool ended_ = false;
  std::optional<double> last_reward_;
};

}  // namespace planar

#endif  // PLANAR_DOMAINS_CONTROL_ENVIRONMENT_H_
