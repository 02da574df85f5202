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

#include "planar/common/error.h"
#include "planar/domains/generators.h"
#include "planar/rewards/tolerance.h"
#include "tasks.h"

namespace planar::domains {
namespace {

class Balance : public Task {
 public:
  Balance(const CompiledModel& model, bool sparse)
      : sparse_(sparse),
        upper_(model.Id(ObjectType::kBody, "upper_arm")),
        lower_(model.Id(ObjectType::kBody, "lower_arm")),
        tip_(model.Id(ObjectType::kSite, "tip")),
        target_(model.Id(ObjectType::kSite, "target")),
        radius_(model.site_size[target_]) {}

  void InitializeEpisode(Physics& physics, Rng& rng) override {
    physics.Reset([&](Physics::StateEditor& s) {
      for (double& q : s.qpos()) {
        q = Uniform(rng, -std::numbers::pi, std::numbers::pi);
      }
    });
  }

  Observation GetObservation(const Physics& physics) const override {
    const Eigen::Matrix3d& u = BodyMat(physics, upper_);
    const Eigen::Matrix3d& l = BodyMat(physics, lower_);
    Observation obs;
    obs.Set("orientations", Array({u(0, 2), l(0, 2), u(2, 2), l(2, 2)}));
    obs.Set("velocity", Array({physics.qvel()[0], physics.qvel()[1]}));
    return obs;
  }

  double GetReward(const Physics& physics) const override {
    const double distance =
        (SitePos(physics, tip_) - SitePos(physics, target_)).norm();
    return Tolerance(distance, 0.0, radius_, sparse_ ? 0.0 : 1.0);
  }

 private:
  bool sparse_;
  int upper_, lower_, tip_, target_;
  double radius_;
};

}  // namespace

std::unique_ptr<ControlEnvironment> LoadAcrobot(
    std::string_view task, std::uint64_t seed,
    const EnvironmentOptions& options) {
  if (task != "swingup" && task != "swingup_sparse") {
    throw LookupError("unknown acrobot task");
  }
  Physics physics(LoadModelFile("acrobot.mjcf.xml"));
  auto t = std::make_unique<Balance>(physics.model(), task == "swingup_sparse");
  return std::make_unique<ControlEnvironment>(std::move(physics), std::move(t),
                                              seed, options);
}

}  // namespace planar::domains
