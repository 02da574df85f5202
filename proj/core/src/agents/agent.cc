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


#include "planar/agents/agent.h"

#include <cmath>

#include "planar/common/error.h"

namespace planar {

RandomAgent::RandomAgent(const ArraySpec& action_spec, std::uint64_t seed)
    : rng_(seed) {
  if (!action_spec.bounded()) {
    throw ParameterError("the random agent needs a bounded action spec");
  }
  minimum_ = *action_spec.minimum;
  maximum_ = *action_spec.maximum;
  for (std::size_t i = 0; i < minimum_.size(); ++i) {
    if (!std::isfinite(minimum_[i]) || !std::isfinite(maximum_[i])) {
      throw ParameterError("the random agent needs finite action bounds");
    }
  }
}

std::vector<double> RandomAgent::Sample() {
  std::vector<double> out(minimum_.size());
  for (std::size_t i = 0; i < out.size(); ++i) {
    // uniform_real_distribution(a, a) is undefined
    out[i] = minimum_[i] == maximum_[i] ? minimum_[i]
                                        : Uniform(rng_, minimum_[i], maximum_[i]);
  }
  return out;
}

std::vector<double> RandomAgent::Act(const Observation&, bool) {
  return Sample();
}

std::vector<double> LqrAgent::Act(const Observation& observation, bool) {
  return policy_.Act(Flatten(observation));
}

}  // namespace planar
