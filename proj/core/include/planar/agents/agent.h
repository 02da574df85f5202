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


#ifndef PLANAR_AGENTS_AGENT_H_
#define PLANAR_AGENTS_AGENT_H_

#include <cstdint>
#include <span>
#include <string_view>
#include <vector>

#include <Eigen/Core>

#include "planar/common/random.h"
#include "planar/env/array.h"
#include "planar/env/environment.h"
#include "planar/lqr/lqr_solver.h"

namespace planar {

// Policies see the observation flattened in key order.
class Agent {
 public:
  virtual ~Agent() = default;
  virtual std::string_view name() const = 0;
  // Whether Observe() changes the policy (decides if training steps run).
  virtual bool learns() const { return false; }
  virtual void BeginEpisode(bool /*explore*/) {}
  virtual std::vector<double> Act(const Observation& observation,
                                  bool explore) = 0;
  // Called after every environment step of a training episode.
  virtual void Observe(const Observation& /*observation*/,
                       std::span<const double> /*action*/,
                       const TimeStep& /*next*/) {}
};

// Uniform over the bounds of the action spec; rejects unbounded specs.
class RandomAgent : public Agent {
 public:
  RandomAgent(const ArraySpec& action_spec, std::uint64_t seed);

  std::string_view name() const override { return "random"; }
  std::vector<double> Act(const Observation& observation,
                          bool explore) override;
  // Same draw without an observation.
  std::vector<double> Sample();

 private:
  std::vector<double> minimum_;
  std::vector<double> maximum_;
  Rng rng_;
};

// u = -K x with x the flattened observation (the full state for lqr tasks).
class LqrAgent : public Agent {
 public:
  explicit LqrAgent(Eigen::MatrixXd gain) : policy_(std::move(gain)) {}

  std::string_view name() const override { return "lqr"; }
  std::vector<double> Act(const Observation& observation,
                          bool explore) override;

 private:
  LqrPolicy policy_;
};

}  // namespace planar

#endif  // PLANAR_AGENTS_AGENT_H_
