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

class Swimmer : public Task {
 public:
  explicit Swimmer(const CompiledModel& model)
      : head_(model.Id(ObjectType::kBody, "head")),
        nose_(model.Id(ObjectType::kSite, "nose")),
        target_(model.Id(ObjectType::kGeom, "target")),
        first_hinge_(model.Id(ObjectType::kJoint, "root_z") + 1) {}

  void InitializeEpisode(Physics& physics, Rng& rng) override {
    physics.Reset([&](Physics::StateEditor& s) {
      const CompiledModel& m = s.model();
      for (int j = 0; j < m.njnt; ++j) {
        if (m.jnt_type[j] != JointType::kHinge) continue;
        s.qpos()[j] = m.jnt_limited[j]
                          ? Uniform(rng, m.jnt_range[j][0], m.jnt_range[j][1])
                          : Uniform(rng, -std::numbers::pi, std::numbers::pi);
      }
      const double x = Uniform(rng, -kTargetBox, kTargetBox);
      const double y = Uniform(rng, -kTargetBox, kTargetBox);
      s.SetGeomPos(target_, {x, y, m.geom_pos[target_].z()});
    });
  }

  Observation GetObservation(const Physics& physics) const override {
    const CompiledModel& m = physics.model();
    const Kinematics& kin = physics.kinematics();
    std::vector<double> joints(physics.qpos().begin() + first_hinge_,
                               physics.qpos().end());
    const Eigen::Vector3d to_target =
        kin.xmat[head_].transpose() *
        (GeomPos(physics, target_) - SitePos(physics, nose_));
    std::vector<double> velocities;
    for (int b = 1; b < m.nbody; ++b) {
      const Vector6d& cvel = physics.body_velocities()[b];
      const Eigen::Vector3d omega = cvel.head<3>();
      const Eigen::Vector3d linear =
          kin.xmat[b].transpose() * (cvel.tail<3>() + omega.cross(kin.xpos[b]));
      velocities.push_back(linear.x());
      velocities.push_back(linear.y());
      velocities.push_back(omega.z());
    }
    Observation obs;
    obs.Set("joints", Array(std::move(joints)));
    obs.Set("to_target", Array({to_target.x(), to_target.y()}));
    obs.Set("body_velocities", Array(std::move(velocities)));
    return obs;
  }

  double GetReward(const Physics& physics) const override {
    const double size = physics.geom_size()[target_][0];
    const double distance =
        (SitePos(physics, nose_) - GeomPos(physics, target_)).head<2>().norm();
    return Tolerance(distance, 0.0, size, 5.0 * size, Sigmoid::kLongTail, 0.1);
  }

 private:
  static constexpr double kTargetBox = 2.0;
  int head_, nose_, target_, first_hinge_;
};

}  // namespace

std::unique_ptr<ControlEnvironment> LoadSwimmer(
    std::string_view task, std::uint64_t seed,
    const EnvironmentOptions& options) {
  int links = 0;
  if (task == "swimmer6") {
    links = 6;
  } else if (task == "swimmer15") {
    links = 15;
  } else {
    throw LookupError("unknown swimmer task");
  }
  Physics physics(GenerateSwimmer(links));
  auto t = std::make_unique<Swimmer>(physics.model());
  return std::make_unique<ControlEnvironment>(std::move(physics), std::move(t),
                                              seed, options);
}

}  // namespace planar::domains
