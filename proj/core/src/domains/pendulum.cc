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

#include <cmath>
#include <numbers>

#include "planar/common/error.h"
#include "planar/domains/generators.h"
#include "planar/rewards/tolerance.h"
#include "tasks.h"

namespace planar::domains {
namespace {

constexpr double kCosineBound = 0.86602540378443865;  // cos(30 deg)

class SwingUp : public Task {
 public:
  explicit SwingUp(const CompiledModel& model)
      : pole_(model.Id(ObjectType::kBody, "pole")) {}

  void InitializeEpisode(Physics& physics, Rng& rng) override {
    physics.Reset([&](Physics::StateEditor& s) {
      s.qpos()[0] = Uniform(rng, -std::numbers::pi, std::numbers::pi);
    });
  }

  Observation GetObservation(const Physics& physics) const override {
    const Eigen::Matrix3d& r = BodyMat(physics, pole_);
    Observation obs;
    obs.Set("orientation", Array({r(2, 2), r(0, 2)}));
    obs.Set("velocity", Array({physics.qvel()[0]}));
    return obs;
  }

  double GetReward(const Physics& physics) const override {
    return Tolerance(BodyMat(physics, pole_)(2, 2),
                     {.lower = kCosineBound, .upper = 1.0});
  }

 private:
  int pole_;
};

}  // namespace

std::unique_ptr<ControlEnvironment> LoadPendulum(
    std::string_view task, std::uint64_t seed,
    const EnvironmentOptions& options) {
  if (task != "swingup") throw LookupError("unknown pendulum task");
  Physics physics(LoadModelFile("pendulum.mjcf.xml"));
  auto t = std::make_unique<SwingUp>(physics.model());
  return std::make_unique<ControlEnvironment>(std::move(physics), std::move(t),
                                              seed, options);
}

}  // namespace planar::domains
