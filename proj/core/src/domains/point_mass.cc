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

#include <Eigen/Dense>

#include "planar/common/error.h"
#include "planar/domains/generators.h"
#include "planar/rewards/tolerance.h"
#include "tasks.h"

namespace planar::domains {
namespace {

class PointMass : public Task {
 public:
  PointMass(const CompiledModel& model, bool randomize_gains)
      : randomize_gains_(randomize_gains),
        mass_(model.Id(ObjectType::kGeom, "pointmass")),
        target_(model.Id(ObjectType::kGeom, "target")) {}

  void InitializeEpisode(Physics& physics, Rng& rng) override {
    if (randomize_gains_) {
      // Redraw until the map from actions to forces is well conditioned.
      do {
        for (int i = 0; i < 4; ++i) gains_(i / 2, i % 2) = Uniform(rng, -1.0, 1.0);
      } while (std::abs(gains_.determinant()) <= 0.2);
    }
    physics.Reset([&](Physics::StateEditor& s) {
      const CompiledModel& m = s.model();
      for (int j = 0; j < m.njnt; ++j) {
        s.qpos()[j] = Uniform(rng, m.jnt_range[j][0], m.jnt_range[j][1]);
      }
    });
  }

  void BeforeStep(std::span<const double> action, Physics& physics) override {
    Eigen::Vector2d a(action[0], action[1]);
    if (randomize_gains_) a = (gains_ * a).cwiseMax(-1.0).cwiseMin(1.0);
    const double ctrl[2] = {a[0], a[1]};
    physics.SetControl(ctrl);
  }

  Observation GetObservation(const Physics& physics) const override {
    Observation obs;
    obs.Set("position", Array({physics.qpos()[0], physics.qpos()[1]}));
    obs.Set("velocity", Array({physics.qvel()[0], physics.qvel()[1]}));
    return obs;
  }

  double GetReward(const Physics& physics) const override {
    const double radius = physics.geom_size()[target_][0];
    const double distance =
        (GeomPos(physics, mass_) - GeomPos(physics, target_)).head<2>().norm();
    const double near = Tolerance(distance, 0.0, radius, radius);
    const double control = MeanTolerance(
        physics.ctrl(), {.margin = 1.0, .sigmoid = Sigmoid::kQuadratic,
                         .value_at_margin = 0.0});
    return near * (4.0 + control) / 5.0;
  }

  const Eigen::Matrix2d& gains() const { return gains_; }

 private:
  bool randomize_gains_;
  int mass_, target_;
  Eigen::Matrix2d gains_ = Eigen::Matrix2d::Identity();
};

}  // namespace

std::unique_ptr<ControlEnvironment> LoadPointMass(
    std::string_view task, std::uint64_t seed,
    const EnvironmentOptions& options) {
  if (task != "easy" && task != "hard") {
    throw LookupError("unknown point_mass task");
  }
  Physics physics(LoadModelFile("point_mass.mjcf.xml"));
  auto t = std::make_unique<PointMass>(physics.model(), task == "hard");
  return std::make_unique<ControlEnvironment>(std::move(physics), std::move(t),
                                              seed, options);
}

}  // namespace planar::domains
