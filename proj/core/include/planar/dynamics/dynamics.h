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

#ifndef PLANAR_DYNAMICS_DYNAMICS_H_
#define PLANAR_DYNAMICS_DYNAMICS_H_

#include <span>
#include <vector>

#include <Eigen/Cholesky>
#include <Eigen/Core>

#include "planar/dynamics/kinematics.h"
#include "planar/model/compiled_model.h"

namespace planar {

// Equations of motion M(q) qacc = gear * ctrl - bias(q, v) + drag(q, v).
//
// The evaluator splits the work in two passes so that the expensive
// state-dependent part can be cached between the end of one step and the
// start of the next:
//   Prepare(q, v)   kinematics, body velocities, M, bias, drag
//   Accelerate(u)   actuator forces and the Cholesky solve
// All buffers are allocated once at construction.
class DynamicsEvaluator {
 public:
  explicit DynamicsEvaluator(const CompiledModel& model);

  void Prepare(std::span<const double> q, std::span<const double> v,
               bool with_geoms = false,
               std::span<const Eigen::Vector3d> geom_pos = {});

  // Throws NumericalError if M is not positive definite.
  void Accelerate(std::span<const double> ctrl, std::span<double> qacc);

  const Kinematics& kinematics() const { return kin_; }
  // Spatial velocity (angular; linear at the world origin) of each body.
  const std::vector<Vector6d>& cvel() const { return cvel_; }
  const Eigen::MatrixXd& mass_matrix() const { return mass_; }
  // Coriolis, centrifugal, gravity and passive joint forces.
  const Eigen::VectorXd& bias() const { return bias_; }
  // Generalized fluid drag force (already signed as an applied force).
  const Eigen::VectorXd& drag() const { return drag_; }

  // Kinetic plus potential energy (gravity, joint springs, limit springs).
  double Energy() const;

 private:
  void ComputeVelocities();
  void ComputeMassMatrix();
  void ComputeBias();
  void ComputeDrag();

  const CompiledModel* model_;
  Kinematics kin_;
  std::vector<double> q_;
  std::vector<double> v_;
  std::vector<Matrix6d> cinert_;  // body spatial inertia about the origin
  std::vector<Matrix6d> crb_;     // composite inertia of each subtree
  std::vector<Vector6d> cvel_;
  std::vector<Vector6d> cacc_;
  std::vector<Vector6d> cfrc_;
  Eigen::MatrixXd mass_;
  Eigen::VectorXd bias_;
  Eigen::VectorXd drag_;
  Eigen::VectorXd rhs_;
  Eigen::LLT<Eigen::MatrixXd> llt_;
};

// Stateless conveniences (allocate; intended for tests and tools).
Eigen::MatrixXd MassMatrix(const CompiledModel& model,
                           std::span<const double> q);
Eigen::VectorXd BiasForces(const CompiledModel& model,
                           std::span<const double> q,
                           std::span<const double> v);
Eigen::VectorXd DragForces(const CompiledModel& model,
                           std::span<const double> q,
                           std::span<const double> v);
// Generalized actuator force gear * ctrl, with ctrl clamped to ctrlrange for
// ctrllimited actuators.
Eigen::VectorXd ActuatorForces(const CompiledModel& model,
                               std::span<const double> ctrl);
Eigen::VectorXd ForwardDynamics(const CompiledModel& model,
                                std::span<const double> q,
                                std::span<const double> v,
                                std::span<const double> ctrl);
double Energy(const CompiledModel& model, std::span<const double> q,
              std::span<const double> v);

// Spatial algebra (angular; linear) about the world origin.
Vector6d CrossMotion(const Vector6d& v, const Vector6d& m);
Vector6d CrossForce(const Vector6d& v, const Vector6d& f);
Matrix6d SpatialInertia(double mass, const Eigen::Vector3d& com,
                        const Eigen::Matrix3d& inertia_at_com);

}  // namespace planar

#endif  // PLANAR_DYNAMICS_DYNAMICS_H_
