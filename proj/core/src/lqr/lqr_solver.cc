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


#include "planar/lqr/lqr_solver.h"

#include <cmath>
#include <string>

#include <Eigen/Cholesky>
#include <Eigen/Eigenvalues>
#include <Eigen/LU>

#include "planar/common/error.h"
#include "planar/domains/generators.h"
#include "planar/dynamics/dynamics.h"
#include "planar/dynamics/kinematics.h"

namespace planar {
namespace {

double InfNorm(const Eigen::MatrixXd& m) {
  return m.size() == 0 ? 0.0 : m.cwiseAbs().rowwise().sum().maxCoeff();
}

void CheckLinear(const CompiledModel& m) {
  auto reject = [&](const std::string& why) {
    throw UnsupportedModelError("model '" + m.name + "' is not linear: " + why);
  };
  for (int j = 0; j < m.njnt; ++j) {
    if (m.jnt_type[j] != JointType::kSlide) reject("non-slide joint");
    if (m.jnt_limited[j]) reject("limited joint");
    if (m.jnt_springref[j] != 0.0) reject("nonzero spring reference");
  }
  for (int g = 0; g < m.ngeom; ++g) {
    if (m.geom_drag[g]) reject("fluid drag");
  }
  for (int a = 0; a < m.nu; ++a) {
    if (m.actuator_ctrllimited[a]) reject("control limits");
  }
  const std::vector<double> q0(m.nq, 0.0);
  const Kinematics kin = ForwardKinematics(m, q0);
  for (int i = 0; i < m.nv; ++i) {
    if (std::abs(kin.cdof[i].tail<3>().dot(m.gravity)) > 1e-12) {
      reject("gravity along a slide");
    }
  }
}

// Composes n copies of the one-step map (a, b).
void Compose(const Eigen::MatrixXd& a, const Eigen::MatrixXd& b, int n,
             LinearSystem& sys) {
  sys.A = Eigen::MatrixXd::Identity(a.rows(), a.cols());
  sys.B = Eigen::MatrixXd::Zero(b.rows(), b.cols());
  for (int k = 0; k < n; ++k) {
    sys.B = a * sys.B + b;
    sys.A = a * sys.A;
  }
}

}  // namespace

LinearSystem Linearize(const CompiledModel& m, int n_sub_steps) {
  if (n_sub_steps < 1) throw ContractError("n_sub_steps must be positive");
  CheckLinear(m);
  const int n = m.nv;
  const double h = m.timestep;
  const std::vector<double> q0(m.nq, 0.0);
  const Eigen::MatrixXd mass = MassMatrix(m, q0);
  const Eigen::LLT<Eigen::MatrixXd> llt(mass);
  if (llt.info() != Eigen::Success) {
    throw NumericalError("mass matrix is not positive definite");
  }
  Eigen::MatrixXd stiffness = Eigen::MatrixXd::Zero(n, n);
  Eigen::MatrixXd damping = Eigen::MatrixXd::Zero(n, n);
  for (int i = 0; i < n; ++i) {
    stiffness(i, i) = m.jnt_stiffness[i];
    damping(i, i) = m.jnt_damping[i];
  }
  Eigen::MatrixXd gear = Eigen::MatrixXd::Zero(n, m.nu);
  for (int a = 0; a < m.nu; ++a) {
    gear(m.actuator_dof[a], a) += m.actuator_gear[a];
  }
  // qacc = aq q + av v + bu u
  const Eigen::MatrixXd aq = -llt.solve(stiffness);
  const Eigen::MatrixXd av = -llt.solve(damping);
  const Eigen::MatrixXd bu = llt.solve(gear);
  const Eigen::MatrixXd eye = Eigen::MatrixXd::Identity(n, n);

  Eigen::MatrixXd a1(2 * n, 2 * n);
  Eigen::MatrixXd b1(2 * n, m.nu);
  if (m.integrator == Integrator::kSemiImplicitEuler) {
    // v' = v + h qacc, q' = q + h v'
    const Eigen::MatrixXd vq = h * aq;
    const Eigen::MatrixXd vv = eye + h * av;
    const Eigen::MatrixXd vu = h * bu;
    a1 << eye + h * vq, h * vv, vq, vv;
    b1 << h * vu, vu;
  } else {
    // RK4 of xdot = F x + G u with u held: exact polynomial in hF.
    Eigen::MatrixXd f(2 * n, 2 * n);
    f << Eigen::MatrixXd::Zero(n, n), eye, aq, av;
    Eigen::MatrixXd g(2 * n, m.nu);
    g << Eigen::MatrixXd::Zero(n, m.nu), bu;
    const Eigen::MatrixXd hf = h * f;
    const Eigen::MatrixXd i2 = Eigen::MatrixXd::Identity(2 * n, 2 * n);
    const Eigen::MatrixXd hf2 = hf * hf;
    const Eigen::MatrixXd hf3 = hf2 * hf;
    a1 = i2 + hf + hf2 / 2.0 + hf3 / 6.0 + hf3 * hf / 24.0;
    b1 = h * (i2 + hf / 2.0 + hf2 / 6.0 + hf3 / 24.0) * g;
  }
  LinearSystem sys;
  Compose(a1, b1, n_sub_steps, sys);
  sys.h = h * n_sub_steps;
  return sys;
}

LinearSystem LinearizeNumerically(const Physics& physics,
                                  std::span<const double> ctrl,
                                  int n_sub_steps, double eps) {
  const CompiledModel& m = physics.model();
  if (static_cast<int>(ctrl.size()) != m.nu) {
    throw ContractError("control size mismatch");
  }
  if (n_sub_steps < 1) throw ContractError("n_sub_steps must be positive");
  const int nx = m.nq + m.nv;
  Physics sim = physics;
  Physics::State base = physics.GetState();
  base.ctrl.assign(ctrl.begin(), ctrl.end());

  auto roll = [&](const Physics::State& s) {
    sim.SetState(s);
    for (int k = 0; k < n_sub_steps; ++k) sim.Step();
    Eigen::VectorXd x(nx);
    for (int i = 0; i < m.nq; ++i) x[i] = sim.qpos()[i];
    for (int i = 0; i < m.nv; ++i) x[m.nq + i] = sim.qvel()[i];
    return x;
  };
  auto perturbed = [&](int index, double delta, bool control) {
    Physics::State s = base;
    if (control) {
      s.ctrl[index] += delta;
    } else if (index < m.nq) {
      s.qpos[index] += delta;
    } else {
      s.qvel[index - m.nq] += delta;
    }
    return s;
  };

  LinearSystem sys;
  sys.A.resize(nx, nx);
  sys.B.resize(nx, m.nu);
  for (int i = 0; i < nx; ++i) {
    sys.A.col(i) = (roll(perturbed(i, eps, false)) -
                    roll(perturbed(i, -eps, false))) / (2.0 * eps);
  }
  for (int a = 0; a < m.nu; ++a) {
    sys.B.col(a) = (roll(perturbed(a, eps, true)) -
                    roll(perturbed(a, -eps, true))) / (2.0 * eps);
  }
  sys.h = m.timestep * n_sub_steps;
  return sys;
}

LinearSystem LqrTaskSystem(const CompiledModel& model, int n_sub_steps) {
  LinearSystem sys = Linearize(model, n_sub_steps);
  const int nx = sys.state_dim();
  sys.Q = Eigen::MatrixXd::Zero(nx, nx);
  sys.Q.topLeftCorner(model.nq, model.nq).setIdentity();
  sys.R = kLqrControlCost *
          Eigen::MatrixXd::Identity(sys.control_dim(), sys.control_dim());
  return sys;
}

double BellmanResidual(const LinearSystem& sys, const Eigen::MatrixXd& P) {
  const Eigen::MatrixXd& A = sys.A;
  const Eigen::MatrixXd& B = sys.B;
  const Eigen::MatrixXd bp = B.transpose() * P;
  const Eigen::MatrixXd s = sys.R + bp * B;
  const Eigen::MatrixXd next =
      sys.Q + A.transpose() * P * A -
      A.transpose() * bp.transpose() * s.ldlt().solve(bp * A);
  return InfNorm(P - next);
}

RiccatiSolution SolveDare(const LinearSystem& sys, double tol, int max_iter) {
  const int nx = sys.state_dim();
  const int nu = sys.control_dim();
  if (sys.A.cols() != nx || sys.B.rows() != nx || sys.Q.rows() != nx ||
      sys.Q.cols() != nx || sys.R.rows() != nu || sys.R.cols() != nu) {
    throw ContractError("inconsistent LinearSystem shapes");
  }
  if (!sys.Q.isApprox(sys.Q.transpose()) ||
      !sys.R.isApprox(sys.R.transpose())) {
    throw ContractError("Q and R must be symmetric");
  }
  if (nu > 0 && sys.R.llt().info() != Eigen::Success) {
    throw ContractError("R must be positive definite");
  }
  const Eigen::MatrixXd& A = sys.A;
  const Eigen::MatrixXd& B = sys.B;
  const Eigen::MatrixXd at = A.transpose();

  RiccatiSolution sol;
  Eigen::MatrixXd P = sys.Q;
  Eigen::MatrixXd K = Eigen::MatrixXd::Zero(nu, nx);
  double change = 0.0;
  for (int it = 1; it <= max_iter; ++it) {
    const Eigen::MatrixXd bp = B.transpose() * P;
    const Eigen::LDLT<Eigen::MatrixXd> s(sys.R + bp * B);
    K = s.solve(bp * A);
    // symmetrized, rounding otherwise skews P over many iterations
    Eigen::MatrixXd next = sys.Q + at * P * A - at * bp.transpose() * K;
    next = 0.5 * (next + next.transpose());
    change = InfNorm(next - P);
    P = std::move(next);
    if (!P.allFinite()) {
      throw SolverError("Riccati iteration diverged", change);
    }
    if (change <= tol * std::max(1.0, InfNorm(P))) {
      sol.iterations = it;
      break;
    }
    if (it == max_iter) {
      throw SolverError("Riccati iteration did not converge in " +
                            std::to_string(max_iter) + " iterations",
                        change);
    }
  }
  const Eigen::MatrixXd bp = B.transpose() * P;
  sol.K = (sys.R + bp * B).ldlt().solve(bp * A);
  sol.P = std::move(P);
  sol.residual = BellmanResidual(sys, sol.P);
  return sol;
}

double ClosedLoopSpectralRadius(const LinearSystem& sys,
                                const Eigen::MatrixXd& K) {
  const Eigen::MatrixXd closed = sys.A - sys.B * K;
  if (closed.size() == 0) return 0.0;
  return Eigen::EigenSolver<Eigen::MatrixXd>(closed, false)
      .eigenvalues()
      .cwiseAbs()
      .maxCoeff();
}

std::vector<double> LqrPolicy::Act(std::span<const double> x) const {
  if (static_cast<long>(x.size()) != K_.cols()) {
    throw ContractError("state size mismatch");
  }
  const Eigen::Map<const Eigen::VectorXd> xv(x.data(), K_.cols());
  const Eigen::VectorXd u = -K_ * xv;
  return {u.data(), u.data() + u.size()};
}

}  // namespace planar
