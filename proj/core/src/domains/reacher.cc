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

class Reacher : public Task {
 public:
  Reacher(const CompiledModel& model, double target_size)
      : target_size_(target_size),
        finger_(model.Id(ObjectType::kGeom, "finger")),
        target_(model.Id(ObjectType::kGeom, "target")) {}

  void InitializeEpisode(Physics& physics, Rng& rng) override {
    physics.Reset([&](Physics::StateEditor& s) {
      const CompiledModel& m = s.model();
      for (int j = 0; j < m.njnt; ++j) {
        s.qpos()[j] = m.jnt_limited[j]
                          ? Uniform(rng, m.jnt_range[j][0], m.jnt_range[j][1])
                          : Uniform(rng, -std::numbers::pi, std::numbers::pi);
      }
      const double angle = Uniform(rng, 0.0, 2.0 * std::numbers::pi);
      const double radius = Uniform(rng, 0.05, 0.20);
      const Eigen::Vector3d pos(radius * std::cos(angle),
                                radius * std::sin(angle),
                                m.geom_pos[target_].z());
      s.SetGeomPos(target_, pos);
      s.SetGeomSize(target_, {target_size_, 0.0, 0.0});
    });
  }

  Observation GetObservation(const Physics& physics) const override {
    const Eigen::Vector2d to_target =
        (GeomPos(physics, target_) - GeomPos(physics, finger_)).head<2>();
    Observation obs;
    obs.Set("position", Array({physics.qpos()[0], physics.qpos()[1]}));
    obs.Set("to_target", Array({to_target.x(), to_target.y()}));
    obs.Set("velocity", Array({physics.qvel()[0], physics.qvel()[1]}));
    obs.Set("target_size", Array({physics.geom_size()[target_][0]}));
    return obs;
  }

  double GetReward(const Physics& physics) const override {
    const double radii = physics.geom_size()[target_][0] +
                         physics.geom_size()[finger_][0];
    const double distance =
        (GeomPos(physics, target_) - GeomPos(physics, finger_)).head<2>().norm();
    return Tolerance(distance, 0.0, radii);
  }

 private:
  double target_size_;
  int finger_, target_;
};

}  // namespace

std::unique_ptr<ControlEnvironment> LoadReacher(
    std::string_view task, std::uint64_t seed,
    const EnvironmentOptions& options) {
  double size = 0.0;
  if (task == "easy") {
    size = 0.05;
  } else if (task == "hard") {
    size = 0.015;
  } else {
    throw LookupError("unknown reacher task");
  }
  Physics physics(LoadModelFile("reacher.mjcf.xml"));
  auto t = std::make_unique<Reacher>(physics.model(), size);
  return std::make_unique<ControlEnvironment>(std::move(physics), std::move(t),
                                              seed, options);
}

}  // namespace planar::domains
