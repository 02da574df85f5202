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

#include "planar/domains/control_environment.h"

#include <algorithm>
#include <cmath>
#include <string>
#include <utility>

#include "planar/common/error.h"
#include "planar/render/rasterizer.h"

namespace planar {

void Task::BeforeStep(std::span<const double> action, Physics& physics) {
  physics.SetControl(action);
}

ArraySpec Task::GetActionSpec(const Physics& physics) const {
  const CompiledModel& m = physics.model();
  bool all_limited = m.nu > 0;
  for (int a = 0; a < m.nu; ++a) all_limited = all_limited && m.actuator_ctrllimited[a];
  ArraySpec spec = MakeArraySpec("action", {m.nu});
  if (all_limited) {
    spec.minimum.emplace();
    spec.maximum.emplace();
    for (int a = 0; a < m.nu; ++a) {
      spec.minimum->push_back(m.actuator_ctrlrange[a][0]);
      spec.maximum->push_back(m.actuator_ctrlrange[a][1]);
    }
  }
  return spec;
}

ControlEnvironment::ControlEnvironment(Physics physics,
                                       std::unique_ptr<Task> task,
                                       std::uint64_t seed,
                                       EnvironmentOptions options)
    : physics_(std::move(physics)),
      task_(std::move(task)),
      options_(options),
      rng_(seed) {
  if (options_.episode_length < 1 || options_.n_sub_steps < 1) {
    throw ParameterError("episode length and substeps must be positive");
  }
  action_spec_ = task_->GetActionSpec(physics_);
  clipped_.resize(action_spec_.size());
  // Shapes come from an observation of a sampled initial state; the engine
  // is reseeded so that this probe does not shift the episode sequence.
  Rng probe(seed);
  task_->InitializeEpisode(physics_, probe);
  for (const auto& [key, array] : task_->GetObservation(physics_)) {
    observation_spec_.Set(key, MakeArraySpec(key, array.shape(), array.dtype()));
  }
}

TimeStep ControlEnvironment::Reset() {
  task_->InitializeEpisode(physics_, rng_);
  step_count_ = 0;
  started_ = true;
  ended_ = false;
  last_reward_.reset();
  TimeStep step;
  step.step_type = StepType::kFirst;
  step.observation = task_->GetObservation(physics_);
  return step;
}

TimeStep ControlEnvironment::Step(std::span<const double> action) {
  if (!started_) throw ContractError("Step() called before Reset()");
  if (ended_) throw ContractError("Step() called after LAST; call Reset()");
  if (static_cast<int>(action.size()) != action_spec_.size()) {
    throw ContractError("action has " + std::to_string(action.size()) +
                        " elements, expected " +
                        std::to_string(action_spec_.size()));
  }
  for (std::size_t i = 0; i < action.size(); ++i) {
    double a = action[i];
    if (!std::isfinite(a)) throw ContractError("action is not finite");
    if (action_spec_.minimum) a = std::max(a, (*action_spec_.minimum)[i]);
    if (action_spec_.maximum) a = std::min(a, (*action_spec_.maximum)[i]);
    clipped_[i] = a;
  }
  task_->BeforeStep(clipped_, physics_);
  for (int i = 0; i < options_.n_sub_steps; ++i) physics_.Step();
  ++step_count_;

  TimeStep step;
  step.reward = task_->GetReward(physics_);
  last_reward_ = step.reward;
  step.observation = task_->GetObservation(physics_);
  if (auto discount = task_->GetTermination(physics_)) {
    step.step_type = StepType::kLast;
    step.discount = *discount;
  } else {
    step.step_type = step_count_ >= options_.episode_length ? StepType::kLast
                                                            : StepType::kMid;
    step.discount = 1.0;
  }
  ended_ = step.last();
  return step;
}

Array ControlEnvironment::Render(int width, int height, int camera) const {
  RenderOptions render;
  render.width = width;
  render.height = height;
  render.camera = camera;
  if (options_.visualize_reward) {
    render.reward_tint = last_reward_.value_or(0.0);
  }
  FrameBuffer frame = RenderFrame(physics_, render);
  return Array::Bytes({height, width, 3}, std::move(frame.rgb));
}

}  // namespace planar
