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
#include <numbers>
#include <set>
#include <vector>

#include <gtest/gtest.h>

#include "planar/common/error.h"
#include "planar/domains/suite.h"

namespace planar {
namespace {

constexpr double kDeg = std::numbers::pi / 180.0;

double RewardAt(ControlEnvironment& env,
                const std::function<void(Physics::StateEditor&)>& edit) {
  env.mutable_physics().Modify(edit);
  return env.task().GetReward(env.physics());
}

TEST(SuiteTest, Catalog) {
  EXPECT_EQ(BenchmarkingTasks().size(), 12u);
  EXPECT_EQ(ExtraTasks().size(), 5u);
  EXPECT_EQ(AllTasks().size(), 17u);
  std::set<TaskId> unique(AllTasks().begin(), AllTasks().end());
  EXPECT_EQ(unique.size(), 17u);
  EXPECT_TRUE(IsBenchmarking({"reacher", "hard"}));
  EXPECT_FALSE(IsBenchmarking({"point_mass", "hard"}));
  EXPECT_THROW(Load("pendulum", "balance", 0), LookupError);
  EXPECT_THROW(Load("humanoid", "walk", 0), LookupError);
}

TEST(SuiteTest, Dimensions) {
  const std::vector<std::pair<TaskId, TaskDims>> expected = {
      {{"pendulum", "swingup"}, {2, 1, 3}},
      {{"acrobot", "swingup"}, {4, 1, 6}},
      {{"cartpole", "balance"}, {4, 1, 5}},
      {{"cartpole", "two_poles"}, {6, 1, 8}},
      {{"cartpole", "three_poles"}, {8, 1, 11}},
      {{"point_mass", "easy"}, {4, 2, 4}},
      {{"reacher", "hard"}, {4, 2, 7}},
      {{"swimmer", "swimmer6"}, {16, 5, 25}},
      {{"swimmer", "swimmer15"}, {34, 14, 61}},
      {{"lqr", "lqr_2_1"}, {4, 1, 4}},
      {{"lqr", "lqr_6_2"}, {12, 2, 12}},
  };
  for (const auto& [id, dims] : expected) {
    EXPECT_EQ(Dimensions(*Load(id.domain, id.task, 0)), dims) << id.ToString();
  }
}

TEST(SuiteTest, ActionsBounded) {
  for (const TaskId& id : AllTasks()) {
    if (id.domain == "lqr") continue;
    const ArraySpec spec = Load(id.domain, id.task, 0)->action_spec();
    ASSERT_TRUE(spec.bounded()) << id.ToString();
    for (int i = 0; i < spec.size(); ++i) {
      EXPECT_EQ((*spec.minimum)[i], -1.0);
      EXPECT_EQ((*spec.maximum)[i], 1.0);
    }
  }
}

TEST(PendulumTest, RewardWithinThirtyDegrees) {
  auto env = Load("pendulum", "swingup", 0);
  env->Reset();
  auto at = [&](double angle) {
    return RewardAt(*env, [&](auto& s) { s.qpos()[0] = angle; });
  };
  EXPECT_EQ(at(0.0), 1.0);
  EXPECT_EQ(at(29 * kDeg), 1.0);
  EXPECT_EQ(at(-29 * kDeg), 1.0);
  EXPECT_EQ(at(31 * kDeg), 0.0);
  EXPECT_EQ(at(std::numbers::pi), 0.0);
}

TEST(PendulumTest, InitialAngleIsUniform) {
  auto env = Load("pendulum", "swingup", 11);
  int upright = 0;
  const int n = 3000;
  for (int i = 0; i < n; ++i) {
    env->Reset();
    if (std::cos(env->physics().qpos()[0]) > std::cos(30 * kDeg)) ++upright;
  }
  // 1/6 of the circle, binomial sd ~ 0.0068
  EXPECT_NEAR(upright / double(n), 1.0 / 6.0, 0.03);
}

TEST(AcrobotTest, RewardAtTarget) {
  auto env = Load("acrobot", "swingup", 0);
  env->Reset();
  EXPECT_EQ(RewardAt(*env, [](auto& s) {
              s.qpos()[0] = 0.0;
              s.qpos()[1] = 0.0;
            }),
            1.0);
  const double hanging = RewardAt(*env, [](auto& s) {
    s.qpos()[0] = std::numbers::pi;
    s.qpos()[1] = 0.0;
  });
  EXPECT_GT(hanging, 0.0);
  EXPECT_LT(hanging, 0.1);
  auto sparse = Load("acrobot", "swingup_sparse", 0);
  sparse->Reset();
  EXPECT_EQ(RewardAt(*sparse, [](auto& s) {
              s.qpos()[0] = 0.5;
              s.qpos()[1] = 0.0;
            }),
            0.0);
}

TEST(CartpoleTest, RewardAndInit) {
  auto env = Load("cartpole", "balance", 0);
  env->Reset();
  EXPECT_NEAR(RewardAt(*env, [](auto& s) {
                for (double& q : s.qpos()) q = 0.0;
                s.ctrl()[0] = 0.0;
              }),
              1.0, 1e-12);
  EXPECT_EQ(RewardAt(*env, [](auto& s) { s.qpos()[1] = std::numbers::pi; }),
            0.0);
  for (int i = 0; i < 50; ++i) {
    env->Reset();
    EXPECT_LE(std::abs(env->physics().qpos()[0]), 0.1);
    EXPECT_LE(std::abs(env->physics().qpos()[1]), 0.034);
  }
  auto swingup = Load("cartpole", "swingup", 0);
  for (int i = 0; i < 50; ++i) {
    swingup->Reset();
    EXPECT_NEAR(swingup->physics().qpos()[1], std::numbers::pi, 0.1);
  }
}

TEST(ReacherTest, RewardInsideTarget) {
  auto env = Load("reacher", "easy", 0);
  env->Reset();
  const Observation obs = env->task().GetObservation(env->physics());
  const double size = obs.at("target_size").doubles()[0];
  EXPECT_NEAR(size, 0.05, 1e-12);
  EXPECT_NEAR(Load("reacher", "hard", 0)->Reset().observation.at(
                  "target_size").doubles()[0],
              0.015, 1e-12);
  // put the finger on the target by moving the target
  const CompiledModel& m = env->physics().model();
  const int target = m.Id(ObjectType::kGeom, "target");
  const int finger = m.Id(ObjectType::kGeom, "finger");
  const Eigen::Vector3d tip = env->physics().kinematics().geom_xpos[finger];
  EXPECT_EQ(RewardAt(*env, [&](auto& s) { s.SetGeomPos(target, tip); }), 1.0);
  EXPECT_EQ(RewardAt(*env,
                     [&](auto& s) {
                       s.SetGeomPos(target, tip + Eigen::Vector3d(0.3, 0, 0));
                     }),
            0.0);
}

TEST(SwimmerTest, RewardShape) {
  auto env = Load("swimmer", "swimmer6", 0);
  env->Reset();
  const CompiledModel& m = env->physics().model();
  const int target = m.Id(ObjectType::kGeom, "target");
  const int nose = m.Id(ObjectType::kSite, "nose");
  const double size = env->physics().geom_size()[target][0];
  const Eigen::Vector3d tip = env->physics().kinematics().site_xpos[nose];
  EXPECT_NEAR(RewardAt(*env, [&](auto& s) { s.SetGeomPos(target, tip); }), 1.0,
              1e-12);
  EXPECT_NEAR(RewardAt(*env,
                       [&](auto& s) {
                         s.SetGeomPos(target, tip + Eigen::Vector3d(
                                                        6 * size, 0, 0));
                       }),
              0.1, 1e-9);
  const Observation obs = env->task().GetObservation(env->physics());
  // expressed in the head frame, so only the length is frame independent
  const auto to_target = obs.at("to_target").doubles();
  EXPECT_NEAR(std::hypot(to_target[0], to_target[1]), 6 * size, 1e-9);
}

TEST(PointMassTest, HardRandomizesActuation) {
  auto easy = Load("point_mass", "easy", 2);
  auto hard = Load("point_mass", "hard", 2);
  const std::vector<double> action = {0.5, -0.25};
  easy->Reset();
  easy->Step(action);
  EXPECT_EQ(easy->physics().ctrl()[0], 0.5);
  EXPECT_EQ(easy->physics().ctrl()[1], -0.25);
  std::set<std::pair<double, double>> seen;
  for (int i = 0; i < 5; ++i) {
    hard->Reset();
    hard->Step(action);
    seen.insert({hard->physics().ctrl()[0], hard->physics().ctrl()[1]});
  }
  EXPECT_EQ(seen.size(), 5u);
}

TEST(LqrTest, QuadraticCostAndTermination) {
  auto env = Load("lqr", "lqr_2_1", 0);
  TimeStep ts = env->Reset();
  const auto q = ts.observation.at("position").doubles();
  EXPECT_NEAR(std::hypot(q[0], q[1]), std::sqrt(2.0), 1e-12);
  ts = env->Step(std::vector<double>{0.7});
  double expected = 0.1 * 0.7 * 0.7;
  for (double x : env->physics().qpos()) expected += x * x;
  EXPECT_NEAR(*ts.reward, -expected, 1e-12);
  EXPECT_EQ(*ts.discount, 1.0);
  env->mutable_physics().Modify([](auto& s) {
    for (double& x : s.qpos()) x = 1e-7;
    for (double& x : s.qvel()) x = 0.0;
  });
  ts = env->Step(std::vector<double>{0.0});
  EXPECT_TRUE(ts.last());
  EXPECT_EQ(*ts.discount, 0.0);
}

TEST(DomainsTest, RewardRangesAndSparsity) {
  for (const TaskId& id : AllTasks()) {
    if (id.domain == "lqr") continue;
    auto env = Load(id.domain, id.task, 5);
    Rng rng(5);
    const bool sparse = id.task.ends_with("_sparse");
    env->Reset();
    for (int i = 0; i < 300; ++i) {
      std::vector<double> a(env->action_spec().size());
      for (double& x : a) x = Uniform(rng, -1, 1);
      const TimeStep ts = env->Step(a);
      ASSERT_GE(*ts.reward, 0.0) << id.ToString();
      ASSERT_LE(*ts.reward, 1.0) << id.ToString();
      if (sparse) {
        ASSERT_TRUE(*ts.reward == 0.0 || *ts.reward == 1.0) << id.ToString();
      }
    }
  }
}

TEST(DomainsTest, SeedsDetermineEpisodes) {
  for (const TaskId& id : AllTasks()) {
    auto a = Load(id.domain, id.task, 9);
    auto b = Load(id.domain, id.task, 9);
    auto c = Load(id.domain, id.task, 10);
    const TimeStep ta = a->Reset();
    EXPECT_EQ(ta, b->Reset()) << id.ToString();
    EXPECT_NE(ta.observation, c->Reset().observation) << id.ToString();
    const std::vector<double> action(a->action_spec().size(), 0.3);
    for (int i = 0; i < 20; ++i) {
      ASSERT_EQ(a->Step(action), b->Step(action)) << id.ToString();
    }
  }
}

}  // namespace
}  // namespace planar
