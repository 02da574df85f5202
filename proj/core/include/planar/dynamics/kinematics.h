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

#ifndef PLANAR_DYNAMICS_KINEMATICS_H_
#define PLANAR_DYNAMICS_KINEMATICS_H_

#include <span>
#include <vector>

#include <Eigen/Core>
#include <Eigen/Geometry>

#include "planar/model/compiled_model.h"

namespace planar {

using Vector6d = Eigen::Matrix<double, 6, 1>;
using Matrix6d = Eigen::Matrix<double, 6, 6>;

// Rotation matrix of a unit quaternion (w, x, y, z). Deviations of the norm
// from one up to 1e-9 are accepted silently, up to 1e-6 the quaternion is
// normalised with a warning, beyond that ParameterError is thrown.
Eigen::Matrix3d QuatToMat(const Eigen::Vector4d& quat);

// World-frame placement of every body, joint axis, geom and site for one
// configuration. Spatial vectors are (angular; linear) about the world origin.
struct Kinematics {
  std::vector<Eigen::Vector3d> xpos;   // body frame origin
  std::vector<Eigen::Matrix3d> xmat;   // body frame orientation
  std::vector<Eigen::Vector3d> xipos;  // body centre of mass
  std::vector<Eigen::Vector3d> jnt_xanchor;
  std::vector<Eigen::Vector3d> jnt_xaxis;
  std::vector<Vector6d> cdof;  // motion subspace of each dof
  std::vector<Eigen::Vector3d> geom_xpos;
  std::vector<Eigen::Matrix3d> geom_xmat;
  std::vector<Eigen::Vector3d> site_xpos;
};

// Per-instance overrides of geom placement (e.g. a task moving its target
// between episodes). Empty spans select the model values.
struct GeomOverrides {
  std::span<const Eigen::Vector3d> pos;
  std::span<const Eigen::Vector3d> size;
};

// Child frame = parent frame * body offset * joint transforms (in joint
// order). Geom and site poses are only filled when `with_geoms` is set.
void ForwardKinematics(const CompiledModel& model, std::span<const double> q,
                       Kinematics& out, bool with_geoms = true,
                       std::span<const Eigen::Vector3d> geom_pos = {});

Kinematics ForwardKinematics(const CompiledModel& model,
                             std::span<const double> q);

// Planar rotation angle of an orientation about the normal of `plane`
// (y for the xz plane, z for the xy plane).
double PlanarAngle(const Eigen::Matrix3d& xmat, CameraPlane plane);

}  // namespace planar

#endif  // PLANAR_DYNAMICS_KINEMATICS_H_
