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
#include <vector>

#include <Eigen/Dense>
#include <gtest/gtest.h>

#include "planar/common/error.h"
#include "planar/domains/generators.h"
#include "planar/domains/suite.h"
#include "planar/lqr/lqr_solver.h"
#include "planar/model/parser.h"

namespace planar {
namespace {

LinearSystem Scalar(double a, double b, double q, double r) {
  LinearSystem sys;
  sys.A = Eigen::MatrixXd::Constant(1, 1, a);
  sys.B = Eigen::MatrixXd::Constant(1, 1, b);
  sys.Q = Eigen::MatrixXd::Constant(1, 1, q);
  sys.R = Eigen::MatrixXd::Constant(1, 1, r);
  sys.h = 1.0;
  return sys;
}

// Finite-horizon value recursion in Joseph form, written independently of
// the solver.
Eigen::MatrixXd DynamicProgramming(const LinearSystem& s, int horizon) {
  Eigen::MatrixXd P = Eigen::MatrixXd::Zero(s.A.rows(), s.A.cols());
  for (int k = 0; k < horizon; ++k) {
    const Eigen::MatrixXd K = (s.R + s.B.transpose() * P * s.B)
                                  .ldlt()
                                  .solve(s.B.transpose() * P * s.A);
    const Eigen::MatrixXd closed = s.A - s.B * K;
    P = s.Q + K.transpose() * s.R * K + closed.transpose() * P * closed;
  }
  return P;
}

TEST(DareTest, ScalarGoldenRatio) {
  // P = 1 + P - P^2 / (1 + P)  =>  P^2 = P + 1
  const RiccatiSolution sol = SolveDare(Scalar(1, 1, 1, 1));
  const double phi = (1 + std::sqrt(5.0)) / 2;
  EXPECT_NEAR(sol.P(0, 0), phi, 1e-10);
  EXPECT_NEAR(sol.K(0, 0), phi - 1, 1e-10);
  EXPECT_LT(sol.residual, 1e-10);
}

TEST(DareTest, ZeroStateCost) {
  const RiccatiSolution sol = SolveDare(Scalar(0.5, 1, 0, 1));
  EXPECT_EQ(sol.P(0, 0), 0.0);
  EXPECT_EQ(sol.K(0, 0), 0.0);
}

TEST(DareTest, MalformedInputs) {
  LinearSystem s = Scalar(1, 1, 1, 0);
  EXPECT_THROW(SolveDare(s), ContractError);
  s = Scalar(1, 1, 1, 1);
  s.B = Eigen::MatrixXd::Ones(2, 1);
  EXPECT_THROW(SolveDare(s), ContractError);
  s = Scalar(1, 1, 1, 1);
  s.Q = Eigen::MatrixXd::Identity(2, 2);
  s.A = Eigen::MatrixXd::Identity(2, 2);
  s.B = Eigen::MatrixXd::Ones(2, 1);
  s.Q(0, 1) = 0.5;
  EXPECT_THROW(SolveDare(s), ContractError);
}

TEST(DareTest, UnstabilizableDiverges) {
  EXPECT_THROW(SolveDare(Scalar(2, 0, 1, 1)), SolverError);
}

TEST(LinearizeTest, EulerSpringClosedForm) {
  const double h = 0.01, k = 1.0, d = 0.1;
  const auto m = LoadModel(R"(<mujoco><option timestep=".01" integrator="Euler"
      gravity="0 0 0"/><worldbody><body name="b"><joint name="j" type="slide"
      axis="1 0 0" stiffness="1" damping=".1"/><geom name="g" size=".1"
      mass="1"/></body></worldbody><actuator><motor name="u" joint="j"/>
      </actuator></mujoco>)");
  const LinearSystem sys = Linearize(*m);
  Eigen::Matrix2d A;
  A << 1 - h * h * k, h * (1 - h * d), -h * k, 1 - h * d;
  Eigen::Vector2d B(h * h, h);
  EXPECT_LT((sys.A - A).cwiseAbs().maxCoeff(), 1e-15);
  EXPECT_LT((sys.B - B).cwiseAbs().maxCoeff(), 1e-15);
  EXPECT_EQ(sys.h, h);
}

TEST(LinearizeTest, MatchesFiniteDifferences) {
  for (auto [n, mm] : {std::pair{2, 1}, std::pair{6, 2}}) {
    const auto model = GenerateLqr(n, mm);
    const LinearSystem exact = Linearize(*model, 4);
    Physics physics(model);
    const std::vector<double> ctrl(mm, 0.0);
    const LinearSystem numeric = LinearizeNumerically(physics, ctrl, 4);
    EXPECT_LT((exact.A - numeric.A).cwiseAbs().maxCoeff(), 1e-9);
    EXPECT_LT((exact.B - numeric.B).cwiseAbs().maxCoeff(), 1e-9);
    EXPECT_NEAR(exact.h, 0.02, 1e-15);
  }
}

TEST(LinearizeTest, Rk4MatchesFiniteDifferences) {
  const auto model = LoadModel(R"(<mujoco><option timestep=".05"
      integrator="RK4" gravity="0 0 0"/><worldbody><body name="a"><joint
      name="j0" type="slide" axis="1 0 0" stiffness="2" damping=".3"/><geom
      name="g0" size=".1" mass="1"/><body name="b" pos="1 0 0"><joint name="j1"
      type="slide" axis="1 0 0" stiffness="1"/><geom name="g1" size=".1"
      mass=".5"/></body></body></worldbody><actuator><motor name="u" joint="j1"
      gear="2"/></actuator></mujoco>)");
  const LinearSystem exact = Linearize(*model, 3);
  Physics physics(model);
  const LinearSystem numeric =
      LinearizeNumerically(physics, std::vector<double>{0.0}, 3);
  EXPECT_LT((exact.A - numeric.A).cwiseAbs().maxCoeff(), 1e-9);
  EXPECT_LT((exact.B - numeric.B).cwiseAbs().maxCoeff(), 1e-9);
}

TEST(LinearizeTest, RejectsNonlinearModels) {
  EXPECT_THROW(Linearize(*LoadModelFile("pendulum.mjcf.xml")),
               UnsupportedModelError);
  EXPECT_THROW(Linearize(*LoadModelFile("cartpole.mjcf.xml")),
               UnsupportedModelError);
  EXPECT_THROW(Linearize(*GenerateSwimmer(3)), UnsupportedModelError);
}

class LqrTaskTest : public testing::TestWithParam<std::pair<int, int>> {};

TEST_P(LqrTaskTest, RiccatiSolution) {
  const auto [n, m] = GetParam();
  const LinearSystem sys = LqrTaskSystem(*GenerateLqr(n, m), 4);
  ASSERT_EQ(sys.state_dim(), 2 * n);
  ASSERT_EQ(sys.control_dim(), m);
  const RiccatiSolution sol = SolveDare(sys);
  EXPECT_LT(BellmanResidual(sys, sol.P), 1e-8);
  EXPECT_LT((sol.P - sol.P.transpose()).cwiseAbs().maxCoeff(), 1e-12);
  EXPECT_GE(Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd>(sol.P)
                .eigenvalues()
                .minCoeff(),
            -1e-9);
  EXPECT_LT(ClosedLoopSpectralRadius(sys, sol.K), 1.0);
  const Eigen::MatrixXd dp = DynamicProgramming(sys, 20000);
  EXPECT_LT((dp - sol.P).cwiseAbs().maxCoeff(),
            1e-6 * std::max(1.0, sol.P.cwiseAbs().maxCoeff()));
}

TEST_P(LqrTaskTest, ValueMatchesRollout) {
  const auto [n, m] = GetParam();
  const LinearSystem sys = LqrTaskSystem(*GenerateLqr(n, m), 4);
  const RiccatiSolution sol = SolveDare(sys);
  Eigen::VectorXd x = Eigen::VectorXd::Zero(sys.state_dim());
  x.head(n).setConstant(1.0 / std::sqrt(double(n)));
  const double predicted = x.dot(sol.P * x);
  double cost = 0.0;
  for (int t = 0; t < 20000; ++t) {
    const Eigen::VectorXd u = -sol.K * x;
    cost += x.dot(sys.Q * x) + u.dot(sys.R * u);
    x = sys.A * x + sys.B * u;
  }
  EXPECT_NEAR(cost, predicted, 0.01 * predicted);
  EXPECT_LT(x.norm(), 1e-8);
}

INSTANTIATE_TEST_SUITE_P(Sizes, LqrTaskTest,
                         testing::Values(std::pair{2, 1}, std::pair{6, 2}));

double EpisodeReturn(ControlEnvironment& env, const LqrPolicy* policy,
                     Rng& rng) {
  TimeStep ts = env.Reset();
  double total = 0.0;
  while (!ts.last()) {
    std::vector<double> a;
    if (policy) {
      a = policy->Act(Flatten(ts.observation));
    } else {
      a.resize(env.action_spec().size());
      for (double& x : a) x = Uniform(rng, -1, 1);
    }
    ts = env.Step(a);
    total += *ts.reward;
  }
  return total;
}

TEST(LqrPolicyTest, BeatsRandomActions) {
  auto env = Load("lqr", "lqr_2_1", 0);
  const LinearSystem sys = LqrTaskSystem(env->physics().model(), 4);
  const LqrPolicy policy(SolveDare(sys));
  Rng rng(3);
  double lqr = 0.0, random = 0.0;
  for (int i = 0; i < 20; ++i) {
    lqr += EpisodeReturn(*env, &policy, rng);
    random += EpisodeReturn(*env, nullptr, rng);
  }
  EXPECT_GT(lqr / 20, random / 20);
  const std::vector<double> u = policy.Act(std::vector<double>{1, 0, 0, 0});
  EXPECT_DOUBLE_EQ(u[0], -policy.gain()(0, 0));
}

}  // namespace
}  // namespace planar
