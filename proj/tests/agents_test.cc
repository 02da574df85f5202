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


#include <algorithm>
#include <cmath>
#include <sstream>
#include <vector>

#include <gtest/gtest.h>

#include "planar/agents/adam.h"
#include "planar/agents/agent.h"
#include "planar/agents/ddpg.h"
#include "planar/agents/mlp.h"
#include "planar/agents/ou_noise.h"
#include "planar/agents/replay_buffer.h"
#include "planar/common/error.h"

namespace planar {
namespace {

using MlpD = Mlp<double>;

ArraySpec TwoDimSpec() {
  ArraySpec spec = MakeArraySpec("action", {2});
  spec.minimum = std::vector<double>{-1.0, 0.0};
  spec.maximum = std::vector<double>{1.0, 4.0};
  return spec;
}

TEST(RandomAgentTest, UniformWithinBounds) {
  RandomAgent agent(TwoDimSpec(), 1);
  double sum0 = 0, sum1 = 0;
  const int n = 20000;
  for (int i = 0; i < n; ++i) {
    const std::vector<double> a = agent.Act({}, true);
    ASSERT_GE(a[0], -1.0);
    ASSERT_LE(a[0], 1.0);
    ASSERT_GE(a[1], 0.0);
    ASSERT_LE(a[1], 4.0);
    sum0 += a[0];
    sum1 += a[1];
  }
  // sd of the mean: 0.58/sqrt(n) and 1.15/sqrt(n)
  EXPECT_NEAR(sum0 / n, 0.0, 0.02);
  EXPECT_NEAR(sum1 / n, 2.0, 0.04);
}

TEST(RandomAgentTest, DegenerateAndUnbounded) {
  RandomAgent fixed(MakeBoundedSpec("a", {3}, 0.5, 0.5), 0);
  EXPECT_EQ(fixed.Sample(), (std::vector<double>{0.5, 0.5, 0.5}));
  EXPECT_THROW(RandomAgent(MakeArraySpec("a", {1}), 0), ParameterError);
}

TEST(RandomAgentTest, Reproducible) {
  RandomAgent a(TwoDimSpec(), 7), b(TwoDimSpec(), 7), c(TwoDimSpec(), 8);
  const auto first = a.Sample();
  EXPECT_EQ(first, b.Sample());
  EXPECT_NE(first, c.Sample());
}

TEST(MlpTest, ZeroNetworkOutputsZero) {
  MlpD net({.sizes = {3, 5, 2}});
  MlpD::Matrix x = MlpD::Matrix::Random(3, 4);
  EXPECT_EQ(net.Forward(x).cwiseAbs().maxCoeff(), 0.0);
  EXPECT_EQ(net.num_params(), 3 * 5 + 5 + 5 * 2 + 2);
}

TEST(MlpTest, SingleLinearLayer) {
  MlpD net({.sizes = {3, 2}});
  net.mutable_weight(0) << 1, 2, 3, 4, 5, 6;
  net.mutable_bias(0) << 0.5, -1;
  MlpD::Matrix x(3, 1);
  x << 1, 0, -1;
  const MlpD::Matrix y = net.Forward(x);
  EXPECT_DOUBLE_EQ(y(0, 0), 1 - 3 + 0.5);
  EXPECT_DOUBLE_EQ(y(1, 0), 4 - 6 - 1);
}

TEST(MlpTest, ActivationNames) {
  for (Activation a :
       {Activation::kLinear, Activation::kRelu, Activation::kTanh}) {
    EXPECT_EQ(ActivationFromName(ActivationName(a)), a);
  }
  EXPECT_THROW(ActivationFromName("gelu"), ParameterError);
}

// Loss sum(c .* output) so dL/doutput = c.
void CheckGradients(MlpD& net, int batch, Rng& rng) {
  MlpD::Matrix x = MlpD::Matrix::Random(net.input_dim(), batch);
  MlpD::Matrix e;
  if (net.inject_dim() > 0) e = MlpD::Matrix::Random(net.inject_dim(), batch);
  const MlpD::Matrix c = MlpD::Matrix::Random(net.output_dim(), batch);
  auto loss = [&]() { return net.Forward(x, e).cwiseProduct(c).sum(); };
  net.ZeroGrad();
  loss();
  net.Backward(c);
  const MlpD::Vector analytic = net.grads();
  const MlpD::Matrix dx = net.input_grad();
  const MlpD::Matrix de = net.extra_grad();
  const double h = 1e-6;
  auto rel = [](double a, double b) {
    return std::abs(a - b) / std::max(1e-8, std::abs(a) + std::abs(b));
  };
  std::uniform_int_distribution<int> pick(0, net.num_params() - 1);
  for (int k = 0; k < 100; ++k) {
    const int i = pick(rng);
    const double saved = net.params()[i];
    net.params()[i] = saved + h;
    const double up = loss();
    net.params()[i] = saved - h;
    const double down = loss();
    net.params()[i] = saved;
    EXPECT_LT(rel((up - down) / (2 * h), analytic[i]), 1e-6) << "param " << i;
  }
  for (int i = 0; i < x.size(); ++i) {
    const double saved = x(i);
    x(i) = saved + h;
    const double up = loss();
    x(i) = saved - h;
    const double down = loss();
    x(i) = saved;
    EXPECT_LT(rel((up - down) / (2 * h), dx(i)), 1e-6);
  }
  for (int i = 0; i < e.size(); ++i) {
    const double saved = e(i);
    e(i) = saved + h;
    const double up = loss();
    e(i) = saved - h;
    const double down = loss();
    e(i) = saved;
    EXPECT_LT(rel((up - down) / (2 * h), de(i)), 1e-6);
  }
}

TEST(MlpTest, GradientsMatchFiniteDifferences) {
  Rng rng(3);
  MlpD plain({.sizes = {4, 8, 2}, .hidden = Activation::kTanh});
  plain.InitFanIn(rng);
  CheckGradients(plain, 5, rng);
  MlpD injected({.sizes = {3, 6, 5, 1},
                 .hidden = Activation::kTanh,
                 .output = Activation::kTanh,
                 .inject_dim = 2,
                 .inject_layer = 1});
  injected.InitFanIn(rng, 0.5);
  CheckGradients(injected, 4, rng);
}

TEST(MlpTest, InitRanges) {
  Rng rng(4);
  MlpD net({.sizes = {16, 32, 3}});
  net.InitFanIn(rng, 3e-3);
  EXPECT_LE(net.weight(0).cwiseAbs().maxCoeff(), 1 / std::sqrt(16.0));
  EXPECT_GT(net.weight(0).cwiseAbs().maxCoeff(), 0.5 / std::sqrt(16.0));
  EXPECT_LE(net.weight(1).cwiseAbs().maxCoeff(), 3e-3);
  EXPECT_LE(net.bias(1).cwiseAbs().maxCoeff(), 3e-3);
}

TEST(AdamTest, StepSizes) {
  Adam<double> adam(2, {.learning_rate = 0.01});
  Adam<double>::Vector p(2), g(2);
  p << 1, 2;
  g << 0, 0;
  adam.Step(p, g);
  EXPECT_EQ(p, Adam<double>::Vector((Adam<double>::Vector(2) << 1, 2).finished()));
  Adam<double> fresh(2, {.learning_rate = 0.01});
  g << 5, -1e-3;
  fresh.Step(p, g);
  EXPECT_NEAR(p[0], 1 - 0.01, 1e-6);
  EXPECT_NEAR(p[1], 2 + 0.01, 1e-4);
  EXPECT_THROW(fresh.Step(p, Adam<double>::Vector(3)), ContractError);
}

TEST(AdamTest, MinimizesQuadratic) {
  Adam<double> adam(1, {.learning_rate = 0.05});
  Adam<double>::Vector x = Adam<double>::Vector::Zero(1);
  for (int i = 0; i < 3000; ++i) {
    adam.Step(x, (x.array() - 3.0).matrix());
  }
  EXPECT_NEAR(x[0], 3.0, 1e-3);
  EXPECT_EQ(adam.step_count(), 3000);
}

TEST(ReplayBufferTest, FifoEviction) {
  ReplayBuffer buffer(3, 1, 1);
  for (int i = 0; i < 5; ++i) {
    const double o = i, a = -i, n = i + 1;
    buffer.Add({&o, 1}, {&a, 1}, i, 1.0, {&n, 1});
  }
  EXPECT_EQ(buffer.size(), 3);
  EXPECT_EQ(buffer.added(), 5);
  std::vector<double> rewards;
  for (int i = 0; i < 3; ++i) {
    rewards.push_back(buffer.reward(i));
    EXPECT_EQ(buffer.observation(i)[0], buffer.reward(i));
    EXPECT_EQ(buffer.next_observation(i)[0], buffer.reward(i) + 1);
  }
  std::sort(rewards.begin(), rewards.end());
  EXPECT_EQ(rewards, (std::vector<double>{2, 3, 4}));
  EXPECT_EQ(buffer.cursor(), 2);
}

TEST(ReplayBufferTest, UniformSampling) {
  ReplayBuffer buffer(10, 1, 1);
  Rng rng(5);
  TransitionBatch batch;
  EXPECT_THROW(buffer.Sample(4, rng, batch), ContractError);
  for (int i = 0; i < 10; ++i) {
    const double x = i;
    buffer.Add({&x, 1}, {&x, 1}, x, 1.0, {&x, 1});
  }
  std::vector<int> counts(10, 0);
  const int n = 100000;
  for (int i : buffer.SampleIndices(n, rng)) ++counts[i];
  double chi2 = 0.0;
  for (int c : counts) chi2 += (c - n / 10.0) * (c - n / 10.0) / (n / 10.0);
  EXPECT_LT(chi2, 27.88);  // 9 dof, p = 0.001
  buffer.Sample(8, rng, batch);
  EXPECT_EQ(batch.size, 8);
  for (int i = 0; i < 8; ++i) EXPECT_EQ(batch.observation[i], batch.reward[i]);
}

TEST(OuNoiseTest, DecaysWithoutDiffusion) {
  OuNoise noise(2, {.theta = 0.15, .sigma = 0.0});
  noise.mutable_state() = {1.0, -2.0};
  Rng rng(0);
  for (int i = 0; i < 10; ++i) noise.Sample(rng);
  EXPECT_NEAR(noise.state()[0], std::pow(0.85, 10), 1e-12);
  EXPECT_NEAR(noise.state()[1], -2 * std::pow(0.85, 10), 1e-12);
  noise.Reset();
  EXPECT_EQ(noise.state(), (std::vector<double>{0.0, 0.0}));
}

TEST(OuNoiseTest, StationaryVariance) {
  // Var = sigma^2 / (1 - (1 - theta)^2) for the discrete recursion
  OuNoise noise(1);
  Rng rng(1);
  double sum = 0, sq = 0;
  const int n = 200000;
  for (int i = 0; i < 1000; ++i) noise.Sample(rng);
  for (int i = 0; i < n; ++i) {
    const double x = noise.Sample(rng)[0];
    sum += x;
    sq += x * x;
  }
  const double var = sq / n - (sum / n) * (sum / n);
  EXPECT_NEAR(var, 0.09 / (1 - 0.85 * 0.85), 0.03);
}

DdpgConfig SmallConfig() {
  DdpgConfig c;
  c.actor_hidden = {16, 16};
  c.critic_hidden = {16, 16};
  c.batch_size = 8;
  c.min_replay_size = 8;
  c.replay_capacity = 1000;
  return c;
}

TransitionBatch RandomBatch(int n, int obs, int act, Rng& rng) {
  TransitionBatch b;
  b.size = n;
  for (int i = 0; i < n * obs; ++i) {
    b.observation.push_back(Uniform(rng, -1, 1));
    b.next_observation.push_back(Uniform(rng, -1, 1));
  }
  for (int i = 0; i < n * act; ++i) b.action.push_back(Uniform(rng, -1, 1));
  for (int i = 0; i < n; ++i) {
    b.reward.push_back(Uniform(rng, 0, 1));
    b.discount.push_back(1.0);
  }
  return b;
}

TEST(DdpgTest, ConfigValidation) {
  DdpgConfig c;
  EXPECT_NO_THROW(c.Validate());
  c.tau = 1.5;
  EXPECT_THROW(c.Validate(), ParameterError);
  c = DdpgConfig();
  c.batch_size = 0;
  EXPECT_THROW(c.Validate(), ParameterError);
  c = DdpgConfig();
  c.discount = 1.1;
  EXPECT_THROW(c.Validate(), ParameterError);
  EXPECT_THROW(Ddpg(3, MakeArraySpec("a", {1}), DdpgConfig(), 0),
               ParameterError);
}

TEST(DdpgTest, ZeroDiscountRegressesOnReward) {
  DdpgConfig c = SmallConfig();
  c.discount = 0.0;
  Ddpg agent(3, MakeBoundedSpec("a", {2}, -1, 1), c, 0);
  Rng rng(1);
  const TransitionBatch b = RandomBatch(8, 3, 2, rng);
  double expected = 0.0;
  for (int i = 0; i < 8; ++i) {
    const double q = agent.QValue({&b.observation[i * 3], 3},
                                  {&b.action[i * 2], 2});
    expected += (q - b.reward[i]) * (q - b.reward[i]);
  }
  EXPECT_NEAR(agent.Update(b).critic_loss, expected / 8, 1e-5);
}

TEST(DdpgTest, TargetUpdateRate) {
  DdpgConfig c = SmallConfig();
  c.tau = 1.0;
  Ddpg copy(3, MakeBoundedSpec("a", {1}, -1, 1), c, 0);
  c.tau = 0.5;
  Ddpg half(3, MakeBoundedSpec("a", {1}, -1, 1), c, 0);
  const Ddpg::Net::Vector before = half.target_actor().params();
  Rng rng(2);
  const TransitionBatch b = RandomBatch(8, 3, 1, rng);
  copy.Update(b);
  half.Update(b);
  EXPECT_EQ(copy.target_actor().params(), copy.actor().params());
  EXPECT_EQ(copy.target_critic().params(), copy.critic().params());
  const Ddpg::Net::Vector mid = 0.5f * (before + half.actor().params());
  EXPECT_LT((half.target_actor().params() - mid).cwiseAbs().maxCoeff(), 1e-6);
  EXPECT_NE(half.actor().params(), before);
  c.tau = 0.0;
  EXPECT_THROW(c.Validate(), ParameterError);
}

TEST(DdpgTest, LearnsBanditOptimum) {
  // one state, reward -(a - 0.5)^2, episodes of length one
  DdpgConfig c = SmallConfig();
  c.discount = 0.0;
  c.actor_learning_rate = 1e-3;
  c.critic_learning_rate = 1e-2;
  c.batch_size = 32;
  c.min_replay_size = 32;
  Ddpg agent(1, MakeBoundedSpec("a", {1}, -1, 1), c, 3);
  Observation obs;
  obs.Set("x", Array(std::vector<double>{1.0}));
  for (int i = 0; i < 3000; ++i) {
    agent.BeginEpisode(true);
    const std::vector<double> a = agent.Act(obs, true);
    ASSERT_GE(a[0], -1.0);
    ASSERT_LE(a[0], 1.0);
    TimeStep next;
    next.step_type = StepType::kLast;
    next.reward = -(a[0] - 0.5) * (a[0] - 0.5);
    next.discount = 0.0;
    next.observation = obs;
    agent.Observe(obs, a, next);
  }
  EXPECT_GT(agent.update_count(), 2900);
  EXPECT_NEAR(agent.Policy(std::vector<double>{1.0})[0], 0.5, 0.1);
}

TEST(DdpgTest, CheckpointRoundTripIsBitExact) {
  const ArraySpec spec = MakeBoundedSpec("a", {2}, -2, 2);
  Ddpg a(3, spec, SmallConfig(), 4);
  Rng rng(5);
  for (int i = 0; i < 5; ++i) a.Update(RandomBatch(8, 3, 2, rng));
  Observation obs;
  obs.Set("x", Array(std::vector<double>{0.1, 0.2, 0.3}));
  a.Act(obs, true);
  std::stringstream saved;
  a.Save(saved);
  Ddpg b(3, spec, SmallConfig(), 99);
  b.Load(saved);
  std::stringstream resaved;
  b.Save(resaved);
  EXPECT_EQ(saved.str(), resaved.str());
  const TransitionBatch batch = RandomBatch(8, 3, 2, rng);
  a.Update(batch);
  b.Update(batch);
  EXPECT_EQ(a.actor().params(), b.actor().params());
  EXPECT_EQ(a.critic().params(), b.critic().params());
  EXPECT_EQ(a.Act(obs, true), b.Act(obs, true));
  std::stringstream bad("planar-ddpg-checkpoint 1\ndims 4 2\n");
  EXPECT_THROW(b.Load(bad), ConfigError);
}

}  // namespace
}  // namespace planar
