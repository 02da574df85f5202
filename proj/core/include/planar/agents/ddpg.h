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


#ifndef PLANAR_AGENTS_DDPG_H_
#define PLANAR_AGENTS_DDPG_H_

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "planar/agents/adam.h"
#include "planar/agents/agent.h"
#include "planar/agents/mlp.h"
#include "planar/agents/ou_noise.h"
#include "planar/agents/replay_buffer.h"

namespace planar {

struct DdpgConfig {
  std::vector<int> actor_hidden = {300, 200};
  std::vector<int> critic_hidden = {400, 300};  // action joins layer 2
  double actor_learning_rate = 1e-4;
  double critic_learning_rate = 1e-4;
  double discount = 0.99;
  double tau = 1e-3;  // soft target update rate
  int batch_size = 64;
  int replay_capacity = 1000000;
  // Updates start once the buffer holds this many transitions.
  int min_replay_size = 1000;
  // Gradient steps per observed transition.
  int updates_per_step = 1;
  double actor_grad_clip = 1.0;  // elementwise, <= 0 disables
  double final_layer_init = 3e-3;
  OuOptions noise;

  // Throws ParameterError.
  void Validate() const;
};

struct DdpgUpdateStats {
  double critic_loss = 0.0;
  double actor_objective = 0.0;  // mean Q(s, mu(s)) before the actor step
};

// Single actor/learner DDPG with single-precision networks.
class Ddpg : public Agent {
 public:
  using Real = float;
  using Net = Mlp<Real>;
  using Matrix = Net::Matrix;

  Ddpg(int observation_dim, const ArraySpec& action_spec, DdpgConfig config,
       std::uint64_t seed);

  std::string_view name() const override { return "ddpg"; }
  bool learns() const override { return true; }
  void BeginEpisode(bool explore) override;
  std::vector<double> Act(const Observation& observation,
                          bool explore) override;
  void Observe(const Observation& observation, std::span<const double> action,
               const TimeStep& next) override;

  // Deterministic policy output in action units.
  std::vector<double> Policy(std::span<const double> observation);
  double QValue(std::span<const double> observation,
                std::span<const double> action);

  // One gradient step on a batch drawn from the buffer.
  DdpgUpdateStats Update();
  // One gradient step on the given batch.
  DdpgUpdateStats Update(const TransitionBatch& batch);

  const DdpgConfig& config() const { return config_; }
  ReplayBuffer& replay() { return replay_; }
  const ReplayBuffer& replay() const { return replay_; }
  Net& actor() { return actor_; }
  Net& critic() { return critic_; }
  const Net& target_actor() const { return target_actor_; }
  const Net& target_critic() const { return target_critic_; }
  std::int64_t update_count() const { return updates_; }
  std::optional<DdpgUpdateStats> last_update() const { return last_; }

  // Text checkpoint of networks, targets, optimizer moments, noise state,
  // counters and rng state (the replay buffer is not saved). Floats are
  // written as hexfloats so a reload is bit exact.
  void Save(std::ostream& out) const;
  void Load(std::istream& in);
  void SaveFile(const std::string& path) const;
  void LoadFile(const std::string& path);

 private:
  Matrix Columns(const std::vector<double>& rows, int batch, int dim) const;
  // tanh output in [-1, 1] -> action units
  Matrix Scale(const Matrix& squashed) const;

  DdpgConfig config_;
  int obs_dim_;
  int act_dim_;
  std::vector<double> minimum_;
  std::vector<double> maximum_;
  Eigen::Matrix<Real, Eigen::Dynamic, 1> center_;
  Eigen::Matrix<Real, Eigen::Dynamic, 1> half_range_;
  Rng rng_;
  Net actor_;
  Net critic_;
  Net target_actor_;
  Net target_critic_;
  Adam<Real> actor_opt_;
  Adam<Real> critic_opt_;
  OuNoise noise_;
  ReplayBuffer replay_;
  TransitionBatch batch_;
  std::int64_t updates_ = 0;
  std::optional<DdpgUpdateStats> last_;
};

}  // namespace planar

#endif  // PLANAR_AGENTS_DDPG_H_
