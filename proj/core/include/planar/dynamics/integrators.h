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

#ifndef PLANAR_DYNAMICS_INTEGRATORS_H_
#define PLANAR_DYNAMICS_INTEGRATORS_H_

#include <span>

#include "planar/dynamics/dynamics.h"

namespace planar {

// Scratch space for one integration step, sized for a model.
struct IntegratorWorkspace {
  explicit IntegratorWorkspace(const CompiledModel& model);
  Eigen::VectorXd q0, v0;
  Eigen::VectorXd qs, vs;   // stage state
  Eigen::VectorXd dq, dv;   // weighted derivative sums
  Eigen::VectorXd acc;
};

// v' = v + h a(q, v, u); q' = q + h v'. `eval` must already be prepared at
// (q, v); on return it is stale.
void IntegrateSemiImplicit(DynamicsEvaluator& eval, std::span<double> q,
                           std::span<double> v, std::span<const double> ctrl,
                           double h, IntegratorWorkspace& ws);

// Classic 4-stage Runge-Kutta on (q, v) with the control held constant.
// `eval` must already be prepared at (q, v); on return it is stale.
void IntegrateRk4(DynamicsEvaluator& eval, std::span<double> q,
                  std::span<double> v, std::span<const double> ctrl, double h,
                  IntegratorWorkspace& ws);

}  // namespace planar

#endif  // PLANAR_DYNAMICS_INTEGRATORS_H_
