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
#include <memory>
#include <random>
#include <vector>

#include <Eigen/Eigenvalues>
#include <gtest/gtest.h>

#include "planar/common/error.h"
#include "planar/domains/generators.h"
#include "planar/dynamics/dynamics.h"
#include "planar/dynamics/integrators.h"
#include "planar/dynamics/kinematics.h"
#include "planar/dynamics/physics.h"
#include "planar/model/parser.h"

namespace planar {
namespace {

constexpr double kG = 9.81;

// Unit mass on an x slide, no gravity, unbounded unit motor.
std::string SlideXml(double timestep, const char* integrator,
                     double stiffness = 0.0) {
  return "<mujoco><option timestep=\"" + std::to_string(timestep) +
         "\" gravity=\"0 0 0\" integrator=\"" + integrator +
         "\"/><worldbody><body name=\"m\">"
         "<joint name=\"x\" type=\"slide\" axis=\"1 0 0\" stiffness=\"" +
         std::to_string(stiffness) +
         "\"/><inertial pos=\"0 0 0\" mass=\"1\" diaginertia=\"1 1 1\"/>"
         "<geom name=\"g\" size=\".1\" mass=\"0\"/></body></worldbody>"
         "<actuator><motor name=\"u\" joint=\"x\"/></actuator></mujoco>";
}

// Closed-form acrobot terms: unit links, centres of mass at 0.5, unit
// masses, inertia 1/12 about the centre; q1 absolute, q2 relative.
Eigen::Matrix2d AcrobotMass(double q2) {
  const double i = 1.0 / 12.0;
  Eigen::Matrix2d m;
  m(0, 0) = 2 * i + 0.25 + 1.0 + 0.25 + std::cos(q2);
  m(0, 1) = m(1, 0) = i + 0.25 + 0.5 * std::cos(q2);
  m(1, 1) = i + 0.25;
  return m;
}

Eigen::Vector2d AcrobotBias(double q1, double q2, double v1, double v2) {
  const double h = -0.5 * std::sin(q2);
  Eigen::Vector2d c;
  c[0] = h * (2 * v1 * v2 + v2 * v2);
  c[1] = -h * v1 * v1;
  // gradient of the potential g (z1 + z2), z up, q = 0 upright
  c[0] += -kG * (1.5 * std::sin(q1) + 0.5 * std::sin(q1 + q2));
  c[1] += -kG * 0.5 * std::sin(q1 + q2);
  return c;
}

TEST(MassMatrixTest, PendulumIsMl2) {
  const auto m = LoadModelFile("pendulum.mjcf.xml");
  const double q[] = {0.7};
  EXPECT_NEAR(MassMatrix(*m, q)(0, 0), 1.0, 1e-14);
}

TEST(MassMatrixTest, AcrobotMatchesLagrangian) {
  const auto m = LoadModelFile("acrobot.mjcf.xml");
  std::mt19937_64 rng(1);
  std::uniform_real_distribution<double> u(-M_PI, M_PI);
  for (int i = 0; i < 50; ++i) {
    const double q[] = {u(rng), u(rng)};
    EXPECT_LT((MassMatrix(*m, q) - AcrobotMass(q[1])).cwiseAbs().maxCoeff(),
              1e-12);
  }
}

TEST(MassMatrixTest, CartpoleMatchesLagrangian) {
  // cart 1 kg, pole 0.1 kg capsule of half-length .5 centred at .5
  const auto m = LoadModelFile("cartpole.mjcf.xml");
  const double q[] = {0.0, 0.3};
  const Eigen::MatrixXd mm = MassMatrix(*m, q);
  const double mp = m->body_mass[2];
  const double lc = m->body_ipos[2].z();
  EXPECT_NEAR(mm(0, 0), m->body_mass[1] + mp, 1e-12);
  EXPECT_NEAR(mm(0, 1), mp * lc * std::cos(0.3), 1e-12);
  EXPECT_NEAR(mp, 0.1, 1e-12);
  EXPECT_NEAR(lc, 0.5, 1e-12);
}

TEST(MassMatrixTest, SymmetricPositiveDefiniteEverywhere) {
  std::mt19937_64 rng(2);
  std::uniform_real_distribution<double> u(-3.0, 3.0);
  for (auto model : {GenerateSwimmer(6), GenerateCartKPole(3),
                     LoadModelFile("reacher.mjcf.xml"),
                     LoadModelFile("acrobot.mjcf.xml")}) {
    for (int i = 0; i < 200; ++i) {
      std::vector<double> q(model->nq);
      for (double& x : q) x = u(rng);
      const Eigen::MatrixXd mm = MassMatrix(*model, q);
      EXPECT_LT((mm - mm.transpose()).cwiseAbs().maxCoeff(), 1e-12);
      EXPECT_GT(Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd>(mm)
                    .eigenvalues()
                    .minCoeff(),
                0.0);
    }
  }
}

TEST(BiasTest, PendulumGravity) {
  const auto m = LoadModelFile("pendulum.mjcf.xml");
  const double zero[] = {0.0};
  const double down[] = {M_PI};
  const double horizontal[] = {M_PI / 2};
  EXPECT_NEAR(BiasForces(*m, down, zero)[0], 0.0, 1e-12);
  EXPECT_NEAR(std::abs(BiasForces(*m, horizontal, zero)[0]), kG, 1e-12);
  const double u[] = {0.0};
  EXPECT_NEAR(std::abs(ForwardDynamics(*m, horizontal, zero, u)[0]), kG, 1e-12);
  EXPECT_NEAR(ForwardDynamics(*m, down, zero, u)[0], 0.0, 1e-12);
}

TEST(BiasTest, AcrobotMatchesLagrangian) {
  const auto m = LoadModelFile("acrobot.mjcf.xml");
  std::mt19937_64 rng(4);
  std::uniform_real_distribution<double> u(-3.0, 3.0);
  for (int i = 0; i < 50; ++i) {
    const double q[] = {u(rng), u(rng)};
    const double v[] = {u(rng), u(rng)};
    const Eigen::Vector2d expected = AcrobotBias(q[0], q[1], v[0], v[1]);
    EXPECT_LT((BiasForces(*m, q, v) - expected).cwiseAbs().maxCoeff(), 1e-10);
  }
}

TEST(BiasTest, DampingAndStiffnessAdd) {
  const auto m = LoadModel(R"(<mujoco><option gravity="0 0 0"/><worldbody>
      <body name="b"><joint name="j" type="slide" axis="1 0 0" damping="2"
      stiffness="3"/><geom name="g" size=".1"/></body></worldbody></mujoco>)");
  const double q[] = {0.5};
  const double v[] = {0.25};
  EXPECT_NEAR(BiasForces(*m, q, v)[0], 2 * 0.25 + 3 * 0.5, 1e-12);
}

TEST(ForwardDynamicsTest, ResidualAndLinearity) {
  const auto m = GenerateSwimmer(6);
  std::mt19937_64 rng(5);
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  std::vector<double> q(m->nq), v(m->nv), ctrl(m->nu), ctrl2(m->nu);
  for (double& x : q) x = u(rng);
  for (double& x : v) x = u(rng);
  for (int i = 0; i < m->nu; ++i) {
    ctrl[i] = 0.4 * u(rng);
    ctrl2[i] = 2 * ctrl[i];
  }
  const Eigen::VectorXd a = ForwardDynamics(*m, q, v, ctrl);
  const Eigen::VectorXd rhs =
      ActuatorForces(*m, ctrl) - BiasForces(*m, q, v) + DragForces(*m, q, v);
  EXPECT_LT((MassMatrix(*m, q) * a - rhs).cwiseAbs().maxCoeff(), 1e-10);
  const std::vector<double> none(m->nu, 0.0);
  const Eigen::VectorXd a0 = ForwardDynamics(*m, q, v, none);
  const Eigen::VectorXd a2 = ForwardDynamics(*m, q, v, ctrl2);
  EXPECT_LT(((a2 - a0) - 2 * (a - a0)).cwiseAbs().maxCoeff(), 1e-10);
}

TEST(ForwardDynamicsTest, ControlIsClamped) {
  const auto m = LoadModelFile("pendulum.mjcf.xml");
  const double big[] = {10.0};
  const double one[] = {1.0};
  EXPECT_EQ(ActuatorForces(*m, big), ActuatorForces(*m, one));
}

TEST(DragTest, StationaryIsZero) {
  const auto m = GenerateSwimmer(6);
  std::vector<double> q(m->nq, 0.3), v(m->nv, 0.0);
  EXPECT_EQ(DragForces(*m, q, v).cwiseAbs().maxCoeff(), 0.0);
}

TEST(DragTest, TangentialMotionOpposesVelocity) {
  // straight swimmer, links along x, moving along x
  const auto m = GenerateSwimmer(6);
  std::vector<double> q(m->nq, 0.0), v(m->nv, 0.0);
  v[0] = 1.0;
  const Eigen::VectorXd f = DragForces(*m, q, v);
  const double length = 2 * m->geom_size[m->Id(ObjectType::kGeom, "head")][1];
  EXPECT_NEAR(f[0], -6 * m->drag_tangent * length * 1.0, 1e-12);
  EXPECT_NEAR(f[1], 0.0, 1e-12);
  EXPECT_NEAR(f[2], 0.0, 1e-12);
}

TEST(DragTest, Dissipative) {
  const auto m = GenerateSwimmer(6);
  std::mt19937_64 rng(6);
  std::uniform_real_distribution<double> u(-2.0, 2.0);
  for (int i = 0; i < 1000; ++i) {
    std::vector<double> q(m->nq), v(m->nv);
    for (double& x : q) x = u(rng);
    for (double& x : v) x = u(rng);
    const Eigen::VectorXd f = DragForces(*m, q, v);
    EXPECT_LE(f.dot(Eigen::Map<Eigen::VectorXd>(v.data(), m->nv)), 1e-15);
  }
}

TEST(IntegratorTest, SemiImplicitFormula) {
  Physics physics = Physics::FromXml(SlideXml(0.1, "Euler"));
  physics.Reset([](Physics::StateEditor& s) {
    s.qvel()[0] = 1.0;
    s.ctrl()[0] = 1.0;
  });
  physics.Step();
  EXPECT_NEAR(physics.qvel()[0], 1.1, 1e-15);
  EXPECT_NEAR(physics.qpos()[0], 0.11, 1e-15);
  EXPECT_NEAR(physics.qacc()[0], 1.0, 1e-15);
}

TEST(IntegratorTest, UniformMotionWithoutForce) {
  Physics physics = Physics::FromXml(SlideXml(0.1, "RK4"));
  physics.Reset([](Physics::StateEditor& s) { s.qvel()[0] = 2.0; });
  physics.Step();
  EXPECT_NEAR(physics.qpos()[0], 0.2, 1e-15);
  EXPECT_NEAR(physics.qvel()[0], 2.0, 1e-15);
}

TEST(IntegratorTest, Rk4OscillatorIsFifthOrderLocally) {
  auto error = [](double h) {
    Physics physics = Physics::FromXml(SlideXml(h, "RK4", 1.0));
    physics.Reset([](Physics::StateEditor& s) { s.qpos()[0] = 1.0; });
    physics.Step();
    return std::hypot(physics.qpos()[0] - std::cos(h),
                      physics.qvel()[0] + std::sin(h));
  };
  const double e1 = error(0.1), e2 = error(0.05);
  EXPECT_LT(e1, 1e-6);
  const double order = std::log2(e1 / e2);
  EXPECT_GT(order, 4.5);
  EXPECT_LT(order, 5.5);
}

TEST(IntegratorTest, SemiImplicitCloseToExplicitEuler) {
  // local difference between the two Euler flavours is O(h^2)
  for (double h : {0.01, 0.005}) {
    Physics physics = Physics::FromXml(SlideXml(h, "Euler", 1.0));
    physics.Reset([](Physics::StateEditor& s) {
      s.qpos()[0] = 1.0;
      s.qvel()[0] = 0.5;
    });
    physics.Step();
    const double explicit_q = 1.0 + h * 0.5;
    EXPECT_NEAR(physics.qpos()[0], explicit_q, 2 * h * h);
  }
}

std::shared_ptr<CompiledModel> WithTimestep(const CompiledModel& m, double h) {
  auto copy = std::make_shared<CompiledModel>(m);
  copy->timestep = h;
  return copy;
}

double EnergyDrift(std::shared_ptr<const CompiledModel> model,
                   std::vector<double> q0) {
  Physics physics(model);
  physics.Reset([&](Physics::StateEditor& s) {
    std::copy(q0.begin(), q0.end(), s.qpos().begin());
  });
  const double e0 = physics.Energy();
  double worst = 0.0;
  for (int i = 0; i < 1000; ++i) {
    physics.Step();
    worst = std::max(worst, std::abs(physics.Energy() - e0) / std::abs(e0));
  }
  return worst;
}

TEST(EnergyTest, Rk4ConservesPendulumAndAcrobot) {
  const auto pendulum =
      WithTimestep(*LoadModelFile("pendulum.mjcf.xml"), 0.02);
  const auto acrobot = WithTimestep(*LoadModelFile("acrobot.mjcf.xml"), 0.02);
  EXPECT_LT(EnergyDrift(pendulum, {1.0}), 1e-4);
  // A release near the upright reaches elbow rates close to 30 rad/s, where
  // h = 0.02 is too coarse for any fixed-step scheme; swing from one radian
  // off the bottom instead.
  EXPECT_LT(EnergyDrift(acrobot, {M_PI - 1.0, 0.5}), 1e-4);
}

TEST(EnergyTest, AcrobotEnergyClosedForm) {
  const auto m = LoadModelFile("acrobot.mjcf.xml");
  const double q[] = {0.4, -1.1};
  const double v[] = {0.7, 1.3};
  const Eigen::Vector2d vv(v[0], v[1]);
  const double kinetic = 0.5 * vv.dot(AcrobotMass(q[1]) * vv);
  const double z1 = 2 + 0.5 * std::cos(q[0]);
  const double z2 = 2 + std::cos(q[0]) + 0.5 * std::cos(q[0] + q[1]);
  EXPECT_NEAR(Energy(*m, q, v), kinetic + kG * (z1 + z2), 1e-10);
}

TEST(EnergyTest, DragDissipatesWithoutControl) {
  Physics physics(GenerateSwimmer(6));
  std::mt19937_64 rng(9);
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  physics.Reset([&](Physics::StateEditor& s) {
    for (double& x : s.qvel()) x = u(rng);
  });
  double previous = physics.Energy();
  for (int i = 0; i < 2000; ++i) {
    physics.Step();
    const double e = physics.Energy();
    EXPECT_LE(e, previous + 1e-6) << "step " << i;
    previous = e;
  }
}

TEST(PhysicsTest, DerivedQuantitiesFollowTheState) {
  Physics physics(LoadModelFile("acrobot.mjcf.xml"));
  physics.Reset([](Physics::StateEditor& s) {
    s.qpos()[0] = 0.3;
    s.qvel()[1] = 2.0;
  });
  for (int i = 0; i < 10; ++i) {
    physics.Step();
    const Kinematics fresh = ForwardKinematics(physics.model(), physics.qpos());
    for (int g = 0; g < physics.model().ngeom; ++g) {
      EXPECT_EQ(physics.kinematics().geom_xpos[g], fresh.geom_xpos[g]);
    }
  }
}

TEST(PhysicsTest, EquilibriumIsStationary) {
  Physics physics(LoadModelFile("pendulum.mjcf.xml"));
  physics.Reset([](Physics::StateEditor& s) { s.qpos()[0] = M_PI; });
  for (int i = 0; i < 100; ++i) physics.Step();
  EXPECT_NEAR(physics.qpos()[0], M_PI, 1e-12);
  EXPECT_NEAR(physics.qvel()[0], 0.0, 1e-12);
}

TEST(PhysicsTest, StepsAreDeterministic) {
  Physics a(GenerateSwimmer(6)), b(GenerateSwimmer(6));
  auto init = [](Physics::StateEditor& s) {
    for (int i = 0; i < static_cast<int>(s.qvel().size()); ++i) {
      s.qvel()[i] = 0.1 * i;
    }
    for (double& u : s.ctrl()) u = 0.5;
  };
  a.Reset(init);
  b.Reset(init);
  for (int i = 0; i < 100; ++i) {
    a.Step();
    b.Step();
  }
  EXPECT_TRUE(std::equal(a.qpos().begin(), a.qpos().end(), b.qpos().begin()));
  EXPECT_TRUE(std::equal(a.qvel().begin(), a.qvel().end(), b.qvel().begin()));
}

TEST(PhysicsTest, SubstepsAccumulateTime) {
  Physics physics(LoadModelFile("cartpole.mjcf.xml"));
  for (int i = 0; i < 4; ++i) physics.Step();
  EXPECT_NEAR(physics.time(), 4 * physics.timestep(), 1e-15);
}

TEST(PhysicsTest, SetStateMatchesFreshPhysics) {
  Physics a(LoadModelFile("reacher.mjcf.xml"));
  Physics::State state = a.GetState();
  state.qpos = {0.4, -0.9};
  state.qvel = {1.0, 2.0};
  a.SetState(state);
  Physics b(LoadModelFile("reacher.mjcf.xml"));
  b.Reset([](Physics::StateEditor& s) {
    s.qpos()[0] = 0.4;
    s.qpos()[1] = -0.9;
    s.qvel()[0] = 1.0;
    s.qvel()[1] = 2.0;
  });
  for (int g = 0; g < a.model().ngeom; ++g) {
    EXPECT_EQ(a.kinematics().geom_xpos[g], b.kinematics().geom_xpos[g]);
  }
  state.qpos.push_back(0.0);
  EXPECT_THROW(a.SetState(state), ContractError);
}

TEST(PhysicsTest, DivergenceIsReported) {
  Physics physics = Physics::FromXml(SlideXml(0.1, "Euler"));
  physics.Reset([](Physics::StateEditor& s) { s.qvel()[0] = 1e308; });
  physics.SetControl(std::vector<double>{1e308});
  EXPECT_THROW(
      {
        for (int i = 0; i < 10; ++i) physics.Step();
      },
      SimulationDivergence);
}

TEST(NamedViewTest, AliasesIndexedStorage) {
  Physics physics(GenerateSwimmer(6));
  const auto& m = physics.model();
  std::mt19937_64 rng(8);
  std::uniform_int_distribution<int> pick(0, m.njnt - 1);
  physics.Reset([](Physics::StateEditor& s) {
    for (std::size_t i = 0; i < s.qpos().size(); ++i) s.qpos()[i] = 0.01 * i;
  });
  for (int i = 0; i < 20; ++i) {
    const int j = pick(rng);
    EXPECT_EQ(physics.named_qpos()[m.Name(ObjectType::kJoint, j)],
              physics.qpos()[j]);
  }
  const int b = 3;
  const auto row = physics.named_xpos().row(m.Name(ObjectType::kBody, b));
  EXPECT_EQ(row[0], physics.kinematics().xpos[b].x());
  EXPECT_EQ(physics.named_xpos().at(m.Name(ObjectType::kBody, b), "y"),
            physics.kinematics().xpos[b].y());
  EXPECT_THROW(physics.named_qpos()["nope"], LookupError);
  EXPECT_THROW(physics.named_xpos().at("head", "w"), LookupError);
}

}  // namespace
}  // namespace planar
