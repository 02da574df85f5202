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

#ifndef PLANAR_SRC_DOMAINS_TASKS_H_
#define PLANAR_SRC_DOMAINS_TASKS_H_

#include <cstdint>
#include <memory>
#include <string_view>

#include <Eigen/Core>

#include "planar/domains/control_environment.h"

namespace planar::domains {

std::unique_ptr<ControlEnvironment> LoadPendulum(
    std::string_view task, std::uint64_t seed, const EnvironmentOptions& options);
std::unique_ptr<ControlEnvironment> LoadAcrobot(
    std::string_view task, std::uint64_t seed, const EnvironmentOptions& options);
std::unique_ptr<ControlEnvironment> LoadCartpole(
    std::string_view task, std::uint64_t seed, const EnvironmentOptions& options);
std::unique_ptr<ControlEnvironment> LoadPointMass(
    std::string_view task, std::uint64_t seed, const EnvironmentOptions& options);
std::unique_ptr<ControlEnvironment> LoadReacher(
    std::string_view task, std::uint64_t seed, const EnvironmentOptions& options);
std::unique_ptr<ControlEnvironment> LoadSwimmer(
    std::string_view task, std::uint64_t seed, const EnvironmentOptions& options);
std::unique_ptr<ControlEnvironment> LoadLqr(
    std::string_view task, std::uint64_t seed, const EnvironmentOptions& options);

// helpers shared by the task files

inline Eigen::Vector3d GeomPos(const Physics& physics, int geom) {
  return physics.kinematics().geom_xpos[geom];
}
inline Eigen::Vector3d SitePos(const Physics& physics, int site) {
  return physics.kinematics().site_xpos[site];
}
inline const Eigen::Matrix3d& BodyMat(const Physics& physics, int body) {
  return physics.kinematics().xmat[body];
}

}  // namespace planar::domains

#endif  // PLANAR_SRC_DOMAINS_TASKS_H_
