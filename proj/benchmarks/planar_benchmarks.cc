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


#include <memory>
#include <string>
#include <vector>

#include <benchmark/benchmark.h>

#include "planar/agents/agent.h"
#include "planar/agents/ddpg.h"
#include "planar/common/random.h"
#include "planar/domains/generators.h"
#include "planar/domains/suite.h"
#include "planar/dynamics/dynamics.h"
#include "planar/lqr/lqr_solver.h"
#include "planar/render/rasterizer.h"

namespace planar {
namespace {

void BM_ControlStep(benchmark::State& state, std::string domain,
                    std::string task) {
  auto env = Load(domain, task, 0);
  RandomAgent agent(env->action_spec(), 1);
  TimeStep ts = env->Reset();
  for (auto _ : state) {
    if (ts.last()) ts = env->Reset();
    ts = env->Step(agent.Act(ts.observation, true));
    benchmark::DoNotOptimize(ts.reward);
  }
  state.SetItemsProcessed(state.iterations());
}
BENCHMARK_CAPTURE(BM_ControlStep, pendulum, "pendulum", "swingup");
BENCHMARK_CAPTURE(BM_ControlStep, cartpole, "cartpole", "swingup");
BENCHMARK_CAPTURE(BM_ControlStep, acrobot, "acrobot", "swingup");
BENCHMARK_CAPTURE(BM_ControlStep, point_mass, "point_mass", "easy");
BENCHMARK_CAPTURE(BM_ControlStep, reacher, "reacher", "easy");
BENCHMARK_CAPTURE(BM_ControlStep, swimmer6, "swimmer", "swimmer6");
BENCHMARK_CAPTURE(BM_ControlStep, swimmer15, "swimmer", "swimmer15");

void BM_MassMatrix(benchmark::State& state) {
  const auto model = GenerateSwimmer(static_cast<int>(state.range(0)));
  std::vector<double> q(model->nq, 0.1);
  for (auto _ : state) benchmark::DoNotOptimize(MassMatrix(*model, q));
}
BENCHMARK(BM_MassMatrix)->Arg(3)->Arg(6)->Arg(15);

void BM_SolveDare(benchmark::State& state) {
  const LinearSystem sys =
      LqrTaskSystem(*GenerateLqr(static_cast<int>(state.range(0)),
                                 static_cast<int>(state.range(1))),
                    4);
  for (auto _ : state) benchmark::DoNotOptimize(SolveDare(sys).P);
}
BENCHMARK(BM_SolveDare)->Args({2, 1})->Args({6, 2})->Unit(benchmark::kMillisecond);

void BM_Render(benchmark::State& state) {
  auto env = Load("swimmer", "swimmer6", 0);
  env->Reset();
  const int size = static_cast<int>(state.range(0));
  for (auto _ : state) {
    benchmark::DoNotOptimize(
        RenderFrame(env->physics(), {.width = size, .height = size}));
  }
}
BENCHMARK(BM_Render)->Arg(84)->Arg(240);

void BM_DdpgUpdate(benchmark::State& state) {
  auto env = Load("point_mass", "easy", 0);
  const int obs_dim = 4;
  Ddpg agent(obs_dim, env->action_spec(), DdpgConfig{}, 0);
  Rng rng(0);
  for (int i = 0; i < 1000; ++i) {
    std::vector<double> o(obs_dim), n(obs_dim), a(2);
    for (double& x : o) x = Uniform(rng, -1, 1);
    for (double& x : n) x = Uniform(rng, -1, 1);
    for (double& x : a) x = Uniform(rng, -1, 1);
    agent.replay().Add(o, a, Uniform(rng, 0, 1), 1.0, n);
  }
  for (auto _ : state) benchmark::DoNotOptimize(agent.Update());
}
BENCHMARK(BM_DdpgUpdate)->Unit(benchmark::kMillisecond);

}  // namespace
}  // namespace planar

BENCHMARK_MAIN();
