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

#include <numbers>
#include <string>
#include <vector>

#include "planar/common/error.h"
#include "planar/domains/generators.h"
#include "planar/rewards/tolerance.h"
#include "tasks.h"

namespace planar::domains {
namespace {

class Balance : public Task {
 public:
  Balance(const CompiledModel& model, bool swing_up, bool sparse)
      : swing_up_(swing_up), sparse_(sparse) {
    for (int i = 1; model.table(ObjectType::kBody).Find(
                        "pole_" + std::to_string(i)) >= 0;
         ++i) {
      poles_.push_back(model.Id(ObjectType::kBody, "pole_" + std::to_string(i)));
    }
  }

  void InitializeEpisode(Physics& physics, Rng& rng) override {
    physics.Reset([&](Physics::StateEditor& s) {
      auto q = s.qpos();
      auto v = s.qvel();
      if (swing_up_) {
        q[0] = 0.01 * Normal(rng);
        q[1] = std::numbers::pi + 0.01 * Normal(rng);
        for (std::size_t i = 2; i < q.size(); ++i) q[i] = 0.01 * Normal(rng);
      } else {
        q[0] = Uniform(rng, -0.1, 0.1);
        for (std::size_t i = 1; i < q.size(); ++i) q[i] = Uniform(rng, -0.034, 0.034);
      }
      for (double& x : v) x = 0.01 * Normal(rng);
    });
  }

  Observation GetObservation(const Physics& physics) const override {
    std::vector<double> position = {physics.qpos()[0]};
    for (int p : poles_) position.push_back(BodyMat(physics, p)(2, 2));
    for (int p : poles_) position.push_back(BodyMat(physics, p)(0, 2));
    Observation obs;
    obs.Set("position", Array(std::move(position)));
    obs.Set("velocity", Array(std::vector<double>(physics.qvel().begin(),
                                                  physics.qvel().end())));
    return obs;
  }

  double GetReward(const Physics& physics) const override {
    const double x = physics.qpos()[0];
    if (sparse_) {
      double reward = Tolerance(x, -0.25, 0.25);
      for (int p : poles_) {
        reward *= Tolerance(BodyMat(physics, p)(2, 2), 0.995, 1.0);
      }
      return reward;
    }
    double upright = 0.0;
    for (int p : poles_) {
      upright += Tolerance(BodyMat(physics, p)(2, 2), 0.995, 1.0, 1.995,
                           Sigmoid::kLinear, 0.0);
    }
    upright /= poles_.size();
    const double centered = Tolerance(x, 0.0, 0.0, 2.0);
    const double small_control = Tolerance(physics.ctrl()[0], 0.0, 0.0, 1.0,
                                           Sigmoid::kQuadratic, 0.0);
    return upright * 0.5 * (centered + small_control);
  }

 private:
  bool swing_up_;
  bool sparse_;
  std::vector<int> poles_;
};

}  // namespace

std::unique_ptr<ControlEnvironment> LoadCartpole(
    std::string_view task, std::uint64_t seed,
    const EnvironmentOptions& options) {
  int poles = 1;
  bool swing_up = false;
  bool sparse = false;
  if (task == "balance") {
  } else if (task == "balance_sparse") {
    sparse = true;
  } else if (task == "swingup") {
    swing_up = true;
  } else if (task == "swingup_sparse") {
    swing_up = sparse = true;
  } else if (task == "two_poles") {
    poles = 2;
    swing_up = true;
  } else if (task == "three_poles") {
    poles = 3;
    swing_up = true;
  } else {
    throw LookupError("unknown cartpole task");
  }
  Physics physics(poles == 1 ? LoadModelFile("cartpole.mjcf.xml")
                             : GenerateCartKPole(poles));
  auto t = std::make_unique<Balance>(physics.model(), swing_up, sparse);
  return std::make_unique<ControlEnvironment>(std::move(physics), std::move(t),
                                              seed, options);
}

}  // namespace planar::domains
