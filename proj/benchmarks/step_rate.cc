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


// Measures pendulum:swingup control steps per second under a random agent
// through the episode harness and fails below --min-rate.

#include <chrono>
#include <cstdio>

#include "CLI11.hpp"
#include "planar/agents/agent.h"
#include "planar/bench/harness.h"
#include "planar/common/random.h"
#include "planar/domains/suite.h"

int main(int argc, char** argv) {
  CLI::App app{"pendulum step-rate check"};
  double min_rate = 1e5;
  int episodes = 50;
  app.add_option("--min-rate", min_rate, "required control steps per second");
  app.add_option("--episodes", episodes, "episodes of 1000 steps")
      ->check(CLI::PositiveNumber);
  CLI11_PARSE(app, argc, argv);

  auto env = planar::Load("pendulum", "swingup", 0);
  planar::RandomAgent agent(env->action_spec(), planar::DeriveSeed(0, 2));
  planar::RunEpisode(*env, agent);  // warm up
  long steps = 0;
  const auto start = std::chrono::steady_clock::now();
  for (int i = 0; i < episodes; ++i) {
    steps += planar::RunEpisode(*env, agent).steps;
  }
  const double seconds = std::chrono::duration<double>(
                             std::chrono::steady_clock::now() - start)
                             .count();
  const double rate = steps / seconds;
  std::printf("%s pendulum step rate %.0f steps/s (minimum %.0f)\n",
              rate >= min_rate ? "PASS" : "FAIL", rate, min_rate);
  return rate >= min_rate ? 0 : 1;
}
