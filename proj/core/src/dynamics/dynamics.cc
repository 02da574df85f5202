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

#include "planar/dynamics/dynamics.h"

#include <algorithm>
#include <cmath>
#include <string>

#include "planar/common/error.h"

namespace planar {
namespace {

Eigen::Matrix3d Skew(const Eigen::Vector3d& v) {
  Eigen::Matrix3d s;
  s << 0.0, -v.z(), v.y(), v.z(), 0.0, -v.x(), -v.y(), v.x(), 0.0;
  return s;
}

// Generalized force of a joint-limit penalty (positive pushes q down).
double LimitForce(const CompiledModel& m, int j, double q, double v) {
  if (!m.jnt_limited[j]) return 0.0;
  const double lo = m.jnt_range[j][0];
  const double hi = m.jnt_range[j][1];
  double excess = 0.0;
  if (q < lo) {
    excess = q - lo;
  } else if (q > hi) {
    excess = q - hi;
  } else {
    return 0.0;
  }
  return m.jnt_limit_stiffness[j] * excess + m.jnt_limit_damping[j] * v;
}

double LimitEnergy(const CompiledModel& m, int j, double q) {
  if (!m.jnt_limited[j]) return 0.0;
  double excess = 0.0;
  if (q < m.jnt_range[j][0]) excess = q - m.jnt_range[j][0];
  if (q > m.jnt_range[j][1]) excess = q - m.jnt_range[j][1];
  return 0.5 * m.jnt_limit_stiffness[j] * excess * excess;
}

}  // namespace

Vector6d CrossMotion(const Vector6d& v, const Vector6d& m) {
  const Eigen::Vector3d w = v.head<3>();
  const Eigen::Vector3d u = v.tail<3>();
  Vector6d out;
  out << w.cross(m.head<3>()), w.cross(m.tail<3>()) + u.cross(m.head<3>());
  return out;
}

Vector6d CrossForce(const Vector6d& v, const Vector6d& f) {
  const Eigen::Vector3d w = v.head<3>();
  const Eigen::Vector3d u = v.tail<3>();
  Vector6d out;
  out << w.cross(f.head<3>()) + u.cross(f.tail<3>()), w.cross(f.tail<3>());
  return out;
}

Matrix6d SpatialInertia(double mass, const Eigen::Vector3d& com,
                        const Eigen::Matrix3d& inertia_at_com) {
  const Eigen::Matrix3d c = Skew(com);
  Matrix6d out;
  out.topLeftCorner<3, 3>() = inertia_at_com + mass * c * c.transpose();
  out.topRightCorner<3, 3>() = mass * c;
  out.bottomLeftCorner<3, 3>() = mass * c.transpose();
  out.bottomRightCorner<3, 3>() = mass * Eigen::Matrix3d::Identity();
  return out;
}

DynamicsEvaluator::DynamicsEvaluator(const CompiledModel& model)
    : model_(&model),
      q_(model.nq, 0.0),
      v_(model.nv, 0.0),
      cinert_(model.nbody, Matrix6d::Zero()),
      crb_(model.nbody, Matrix6d::Zero()),
      cvel_(model.nbody, Vector6d::Zero()),
      cacc_(model.nbody, Vector6d::Zero()),
      cfrc_(model.nbody, Vector6d::Zero()),
      mass_(Eigen::MatrixXd::Zero(model.nv, model.nv)),
      bias_(Eigen::VectorXd::Zero(model.nv)),
      drag_(Eigen::VectorXd::Zero(model.nv)),
      rhs_(Eigen::VectorXd::Zero(model.nv)),
      llt_(model.nv) {
  kin_.cdof.resize(model.nv);
}

void DynamicsEvaluator::Prepare(std::span<const double> q,
                                std::span<const double> v, bool with_geoms,
                                std::span<const Eigen::Vector3d> geom_pos) {
  const CompiledModel& m = *model_;
  if (static_cast<int>(v.size()) != m.nv) {
    throw ContractError("expected " + std::to_string(m.nv) + " velocities");
  }
  ForwardKinematics(m, q, kin_, with_geoms, geom_pos);
  std::copy(q.begin(), q.end(), q_.begin());
  std::copy(v.begin(), v.end(), v_.begin());
  for (int b = 1; b < m.nbody; ++b) {
    const Eigen::Matrix3d& r = kin_.xmat[b];
    cinert_[b] = SpatialInertia(m.body_mass[b], kin_.xipos[b],
                                r * m.body_inertia[b] * r.transpose());
  }
  ComputeVelocities();
  ComputeMassMatrix();
  ComputeBias();
  ComputeDrag();
}

void DynamicsEvaluator::ComputeVelocities() {
  const CompiledModel& m = *model_;
  cvel_[0].setZero();
  for (int b = 1; b < m.nbody; ++b) {
    Vector6d vel = cvel_[m.body_parent[b]];
    const int first = m.body_jntadr[b];
    for (int i = first; i < first + m.body_jntnum[b]; ++i) {
      vel += kin_.cdof[i] * v_[i];
    }
    cvel_[b] = vel;
  }
}

void DynamicsEvaluator::ComputeMassMatrix() {
  const CompiledModel& m = *model_;
  for (int b = 0; b < m.nbody; ++b) crb_[b] = cinert_[b];
  for (int b = m.nbody - 1; b > 0; --b) crb_[m.body_parent[b]] += crb_[b];
  mass_.setZero();
  for (int i = 0; i < m.nv; ++i) {
    const Vector6d f = crb_[m.dof_body[i]] * kin_.cdof[i];
    for (int j = i; j >= 0; j = m.dof_parent[j]) {
      const double value = kin_.cdof[j].dot(f);
      mass_(i, j) = value;
      mass_(j, i) = value;
    }
    mass_(i, i) += m.jnt_armature[i];
  }
}

void DynamicsEvaluator::ComputeBias() {
  const CompiledModel& m = *model_;
  // Recursive Newton-Euler with zero joint acceleration; gravity enters as a
  // fictitious upward acceleration of the world.
  cacc_[0] << 0.0, 0.0, 0.0, -m.gravity;
  cfrc_[0].setZero();
  for (int b = 1; b < m.nbody; ++b) {
    Vector6d vel = cvel_[m.body_parent[b]];
    Vector6d acc = cacc_[m.body_parent[b]];
    const int first = m.body_jntadr[b];
    for (int i = first; i < first + m.body_jntnum[b]; ++i) {
      acc += CrossMotion(vel, kin_.cdof[i]) * v_[i];
      vel += kin_.cdof[i] * v_[i];
    }
    cacc_[b] = acc;
    cfrc_[b] = cinert_[b] * acc + CrossForce(vel, cinert_[b] * vel);
  }
  for (int b = m.nbody - 1; b > 0; --b) {
    const int first = m.body_jntadr[b];
    for (int i = first; i < first + m.body_jntnum[b]; ++i) {
      bias_[i] = kin_.cdof[i].dot(cfrc_[b]);
    }
    cfrc_[m.body_parent[b]] += cfrc_[b];
  }
  for (int i = 0; i < m.nv; ++i) {
    bias_[i] += m.jnt_damping[i] * v_[i] +
                m.jnt_stiffness[i] * (q_[i] - m.jnt_springref[i]) +
                LimitForce(m, i, q_[i], v_[i]);
  }
}

void DynamicsEvaluator::ComputeDrag() {
  const CompiledModel& m = *model_;
  drag_.setZero();
  bool any = false;
  for (int b = 0; b < m.nbody; ++b) cfrc_[b].setZero();
  for (int g = 0; g < m.ngeom; ++g) {
    if (!m.geom_drag[g]) continue;
    any = true;
    const int b = m.geom_body[g];
    // The geom centre is recomputed here so that drag does not depend on
    // whether geom poses were requested.
    const Eigen::Vector3d p = kin_.xpos[b] + kin_.xmat[b] * m.geom_pos[g];
    const Eigen::Vector3d axis =
        (kin_.xmat[b] * QuatToMat(m.geom_quat[g])).col(2);
    const double length = 2.0 * m.geom_size[g][1];
    const Eigen::Vector3d vp =
        cvel_[b].tail<3>() + cvel_[b].head<3>().cross(p);
    const Eigen::Vector3d vt = vp.dot(axis) * axis;
    const Eigen::Vector3d vn = vp - vt;
    const Eigen::Vector3d force = -m.drag_normal * length * vn.norm() * vn -
                                  m.drag_tangent * length * vt;
    Vector6d spatial;
    spatial << p.cross(force), force;
    cfrc_[b] += spatial;
  }
  if (!any) return;
  for (int b = m.nbody - 1; b > 0; --b) {
    const int first = m.body_jntadr[b];
    for (int i = first; i < first + m.body_jntnum[b]; ++i) {
      drag_[i] = kin_.cdof[i].dot(cfrc_[b]);
    }
    cfrc_[m.body_parent[b]] += cfrc_[b];
  }
}

void DynamicsEvaluator::Accelerate(std::span<const double> ctrl,
                                   std::span<double> qacc) {
  const CompiledModel& m = *model_;
  if (static_cast<int>(ctrl.size()) != m.nu ||
      static_cast<int>(qacc.size()) != m.nv) {
    throw ContractError("control or acceleration size mismatch");
  }
  rhs_ = drag_ - bias_;
  for (int a = 0; a < m.nu; ++a) {
    double u = ctrl[a];
    if (m.actuator_ctrllimited[a]) {
      u = std::clamp(u, m.actuator_ctrlrange[a][0], m.actuator_ctrlrange[a][1]);
    }
    rhs_[m.actuator_dof[a]] += m.actuator_gear[a] * u;
  }
  if (m.nv == 0) return;
  if (!mass_.allFinite() || !rhs_.allFinite()) {
    throw SimulationDivergence("non-finite dynamics quantities");
  }
  llt_.compute(mass_);
  if (llt_.info() != Eigen::Success) {
    throw NumericalError("mass matrix is not positive definite");
  }
  llt_.solveInPlace(rhs_);
  std::copy(rhs_.data(), rhs_.data() + m.nv, qacc.begin());
}

double DynamicsEvaluator::Energy() const {
  const CompiledModel& m = *model_;
  double energy = 0.0;
  for (int b = 1; b < m.nbody; ++b) {
    energy += 0.5 * cvel_[b].dot(cinert_[b] * cvel_[b]);
    energy -= m.body_mass[b] * m.gravity.dot(kin_.xipos[b]);
  }
  for (int i = 0; i < m.nv; ++i) {
    const double stretch = q_[i] - m.jnt_springref[i];
    energy += 0.5 * m.jnt_armature[i] * v_[i] * v_[i] +
              0.5 * m.jnt_stiffness[i] * stretch * stretch +
              LimitEnergy(m, i, q_[i]);
  }
  return energy;
}

Eigen::MatrixXd MassMatrix(const CompiledModel& model,
                           std::span<const double> q) {
  DynamicsEvaluator eval(model);
  const std::vector<double> v(model.nv, 0.0);
  eval.Prepare(q, v);
  return eval.mass_matrix();
}

Eigen::VectorXd BiasForces(const CompiledModel& model,
                           std::span<const double> q,
                           std::span<const double> v) {
  DynamicsEvaluator eval(model);
  eval.Prepare(q, v);
  return eval.bias();
}

Eigen::VectorXd DragForces(const CompiledModel& model,
                           std::span<const double> q,
                           std::span<const double> v) {
  DynamicsEvaluator eval(model);
  eval.Prepare(q, v);
  return eval.drag();
}

Eigen::VectorXd ActuatorForces(const CompiledModel& model,
                               std::span<const double> ctrl) {
  if (static_cast<int>(ctrl.size()) != model.nu) {
    throw ContractError("expected " + std::to_string(model.nu) + " controls");
  }
  Eigen::VectorXd out = Eigen::VectorXd::Zero(model.nv);
  for (int a = 0; a < model.nu; ++a) {
    double u = ctrl[a];
    if (model.actuator_ctrllimited[a]) {
      u = std::clamp(u, model.actuator_ctrlrange[a][0],
                     model.actuator_ctrlrange[a][1]);
    }
    out[model.actuator_dof[a]] += model.actuator_gear[a] * u;
  }
  return out;
}

Eigen::VectorXd ForwardDynamics(const CompiledModel& model,
                                std::span<const double> q,
                                std::span<const double> v,
                                std::span<const double> ctrl) {
  DynamicsEvaluator eval(model);
  eval.Prepare(q, v);
  Eigen::VectorXd qacc(model.nv);
  eval.Accelerate(ctrl, {qacc.data(), static_cast<std::size_t>(model.nv)});
  return qacc;
}

double Energy(const CompiledModel& model, std::span<const double> q,
              std::span<const double> v) {
  DynamicsEvaluator eval(model);
  eval.Prepare(q, v);
  return eval.Energy();
}

}  // namespace planar
