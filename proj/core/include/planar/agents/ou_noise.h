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


#ifndef PLANAR_AGENTS_OU_NOISE_H_
#define PLANAR_AGENTS_OU_NOISE_H_

#include <cmath>
#include <vector>

#include "planar/common/random.h"

namespace planar {

struct OuOptions {
  double theta = 0.15;
  double sigma = 0.3;
  double mu = 0.0;
  double dt = 1.0;
};

// Ornstein-Uhlenbeck process, x <- x + theta (mu - x) dt + sigma sqrt(dt) N.
class OuNoise {
 public:
  OuNoise(int dim, OuOptions options = {})
      : options_(options), x_(dim, options.mu) {}

  const std::vector<double>& Sample(Rng& rng) {
    const double root_dt = std::sqrt(options_.dt);
    for (double& x : x_) {
      x += options_.theta * (options_.mu - x) * options_.dt +
           options_.sigma * root_dt * Normal(rng);
    }
    return x_;
  }
  void Reset() { x_.assign(x_.size(), options_.mu); }

  const std::vector<double>& state() const { return x_; }
  std::vector<double>& mutable_state() { return x_; }
  const OuOptions& options() const { return options_; }

 private:
  OuOptions options_;
  std::vector<double> x_;
};

}  // namespace planar

#endif  // PLANAR_AGENTS_OU_NOISE_H_
