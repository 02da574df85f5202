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

#include "planar/dynamics/kinematics.h"

#include <cmath>
#include <string>

#include <Eigen/Geometry>

#include "planar/common/error.h"
#include "planar/common/log.h"

namespace planar {

Eigen::Matrix3d QuatToMat(const Eigen::Vector4d& quat) {
  const double norm = quat.norm();
  const double deviation = std::abs(norm - 1.0);
  Eigen::Vector4d q = quat;
  if (deviation >= 1e-6 || !std::isfinite(norm)) {
    throw ParameterError("quaternion norm " + std::to_string(norm) +
                         " is not unit");
  }
  if (deviation > 1e-9) {
    Warn("normalising quaternion with norm deviation " +
         std::to_string(deviation));
  }
  q /= norm;
  const double w = q[0], x = q[1], y = q[2], z = q[3];
  Eigen::Matrix3d r;
  r << 1 - 2 * (y * y + z * z), 2 * (x * y - w * z), 2 * (x * z + w * y),
      2 * (x * y + w * z), 1 - 2 * (x * x + z * z), 2 * (y * z - w * x),
      2 * (x * z - w * y), 2 * (y * z + w * x), 1 - 2 * (x * x + y * y);
  return r;
}

void ForwardKinematics(const CompiledModel& model, std::span<const double> q,
                       Kinematics& out, bool with_geoms,
                       std::span<const Eigen::Vector3d> geom_pos) {
  if (static_cast<int>(q.size()) != model.nq) {
    throw ContractError("forward kinematics expects " +
                        std::to_string(model.nq) + " positions");
  }
  out.xpos.resize(model.nbody);
  out.xmat.resize(model.nbody);
  out.xipos.resize(model.nbody);
  out.jnt_xanchor.resize(model.njnt);
  out.jnt_xaxis.resize(model.njnt);
  out.cdof.resize(model.nv);

  out.xpos[0].setZero();
  out.xmat[0].setIdentity();
  out.xipos[0].setZero();
  for (int b = 1; b < model.nbody; ++b) {
    const int parent = model.body_parent[b];
    Eigen::Vector3d pos =
        out.xpos[parent] + out.xmat[parent] * model.body_pos[b];
    Eigen::Matrix3d mat = out.xmat[parent] * QuatToMat(model.body_quat[b]);
    const int first = model.body_jntadr[b];
    for (int j = first; j < first + model.body_jntnum[b]; ++j) {
      const Eigen::Vector3d anchor = pos + mat * model.jnt_pos[j];
      const Eigen::Vector3d axis = mat * model.jnt_axis[j];
      out.jnt_xanchor[j] = anchor;
      out.jnt_xaxis[j] = axis;
      Vector6d& s = out.cdof[j];
      if (model.jnt_type[j] == JointType::kSlide) {
        s << 0.0, 0.0, 0.0, axis;
        pos += axis * q[j];
      } else {
        s << axis, anchor.cross(axis);
        const Eigen::Matrix3d rot =
            Eigen::AngleAxisd(q[j], axis).toRotationMatrix();
        mat = rot * mat;
        pos = anchor + rot * (pos - anchor);
      }
    }
    out.xpos[b] = pos;
    out.xmat[b] = mat;
    out.xipos[b] = pos + mat * model.body_ipos[b];
  }

  if (!with_geoms) return;
  out.geom_xpos.resize(model.ngeom);
  out.geom_xmat.resize(model.ngeom);
  for (int g = 0; g < model.ngeom; ++g) {
    const int b = model.geom_body[g];
    const Eigen::Vector3d& local =
        geom_pos.empty() ? model.geom_pos[g] : geom_pos[g];
    out.geom_xpos[g] = out.xpos[b] + out.xmat[b] * local;
    out.geom_xmat[g] = out.xmat[b] * QuatToMat(model.geom_quat[g]);
  }
  out.site_xpos.resize(model.nsite);
  for (int s = 0; s < model.nsite; ++s) {
    const int b = model.site_body[s];
    out.site_xpos[s] = out.xpos[b] + out.xmat[b] * model.site_pos[s];
  }
}

Kinematics ForwardKinematics(const CompiledModel& model,
                             std::span<const double> q) {
  Kinematics out;
  ForwardKinematics(model, q, out, true);
  return out;
}

double PlanarAngle(const Eigen::Matrix3d& xmat, CameraPlane plane) {
  if (plane == CameraPlane::kXZ) {
    // Rotation about +y maps x to (cos, 0, -sin).
    return std::atan2(xmat(0, 2), xmat(2, 2));
  }
  return std::atan2(xmat(1, 0), xmat(0, 0));
}

}  // namespace planar
