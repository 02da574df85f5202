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


#ifndef PLANAR_LQR_LQR_SOLVER_H_
#define PLANAR_LQR_LQR_SOLVER_H_

#include <span>
#include <vector>

#include <Eigen/Core>

#include "planar/dynamics/physics.h"
#include "planar/model/compiled_model.h"

namespace planar {

// x[t+1] = A x[t] + B u[t] with x = (qpos, qvel), and per-step cost
// x'Qx + u'Ru.
struct LinearSystem {
  Eigen::MatrixXd A;
  Eigen::MatrixXd B;
  Eigen::MatrixXd Q;
  Eigen::MatrixXd R;
  double h = 0.0;  // seconds per step of the map

  int state_dim() const { return static_cast<int>(A.rows()); }
  int control_dim() const { return static_cast<int>(B.cols()); }
};

struct RiccatiSolution {
  Eigen::MatrixXd P;
  Eigen::MatrixXd K;
  int iterations = 0;
  double residual = 0.0;  // Bellman residual, inf-norm
};

// Exact discrete maps of n_sub_steps integrator steps of a model whose
// dynamics are linear: slide joints only, no drag, no joint limits, no
// gravity along a slide, no control clamping. Q and R are left empty.
// Throws UnsupportedModelError otherwise.
LinearSystem Linearize(const CompiledModel& model, int n_sub_steps = 1);

// Central finite differences of the simulator around (physics state,
// ctrl). Works for any model; the physics object is not modified.
LinearSystem LinearizeNumerically(const Physics& physics,
                                  std::span<const double> ctrl,
                                  int n_sub_steps = 1, double eps = 1e-6);

// Linear system of an lqr task (positions cost 1, velocities 0, controls
// kLqrControlCost), one map per control step.
LinearSystem LqrTaskSystem(const CompiledModel& model, int n_sub_steps);

// Riccati iteration from P = Q until the inf-norm of the update falls
// below tol * max(1, |P|inf). Throws SolverError on non-convergence and
// ContractError on malformed inputs.
RiccatiSolution SolveDare(const LinearSystem& sys, double tol = 1e-12,
                          int max_iter = 1000000);

// |P - (Q + A'PA - A'PB (R + B'PB)^-1 B'PA)|inf.
double BellmanResidual(const LinearSystem& sys, const Eigen::MatrixXd& P);

// Largest eigenvalue modulus of A - BK.
double ClosedLoopSpectralRadius(const LinearSystem& sys,
                                const Eigen::MatrixXd& K);

// u = -K x (unbounded).
class LqrPolicy {
 public:
  explicit LqrPolicy(Eigen::MatrixXd K) : K_(std::move(K)) {}
  explicit LqrPolicy(const RiccatiSolution& sol) : K_(sol.K) {}

  std::vector<double> Act(std::span<const double> x) const;
  const Eigen::MatrixXd& gain() const { return K_; }

 private:
  Eigen::MatrixXd K_;
};

}  // namespace planar

#endif  // PLANAR_LQR_LQR_SOLVER_H_
