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
#include <vector>

#include "planar/common/error.h"
#include "planar/domains/generators.h"
#include "tasks.h"

namespace planar::domains {
namespace {

constexpr double kTerminalNorm = 1e-4;

class Lqr : public Task {
 public:
  void InitializeEpisode(Physics& physics, Rng& rng) override {
    physics.Reset([&](Physics::StateEditor& s) {
      auto q = s.qpos();
      double norm = 0.0;
      do {
        norm = 0.0;
        for (double& x : q) {
          x = Normal(rng);
          norm += x * x;
        }
        norm = std::sqrt(norm);
      } while (norm < 1e-6);
      for (double& x : q) x *= std::sqrt(2.0) / norm;
    });
  }

  Observation GetObservation(const Physics& physics) const override {
    Observation obs;
    obs.Set("position", Array(std::vector<double>(physics.qpos().begin(),
                                                  physics.qpos().end())));
    obs.Set("velocity", Array(std::vector<double>(physics.qvel().begin(),
                                                  physics.qvel().end())));
    return obs;
  }

  double GetReward(const Physics& physics) const override {
    double cost = 0.0;
    for (double q : physics.qpos()) cost += q * q;
    for (double u : physics.ctrl()) cost += kLqrControlCost * u * u;
    return -cost;
  }

  std::optional<double> GetTermination(const Physics& physics) const override {
    double norm = 0.0;
    for (double q : physics.qpos()) norm = std::max(norm, std::abs(q));
    for (double v : physics.qvel()) norm = std::max(norm, std::abs(v));
    if (norm < kTerminalNorm) return 0.0;
    return std::nullopt;
  }
};

}  // namespace

std::unique_ptr<ControlEnvironment> LoadLqr(
    std::string_view task, std::uint64_t seed,
    const EnvironmentOptions& options) {
  int n = 0, m = 0;
  if (task == "lqr_2_1") {
    n = 2;
    m = 1;
  } else if (task == "lqr_6_2") {
    n = 6;
    m = 2;
  } else {
    throw LookupError("unknown lqr task");
  }
  Physics physics(GenerateLqr(n, m));
  return std::make_unique<ControlEnvironment>(
      std::move(physics), std::make_unique<Lqr>(), seed, options);
}

}  // namespace planar::domains
