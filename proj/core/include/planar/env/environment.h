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

#ifndef PLANAR_ENV_ENVIRONMENT_H_
#define PLANAR_ENV_ENVIRONMENT_H_

#include <optional>
#include <span>
#include <string_view>

#include "planar/env/array.h"

namespace planar {

enum class StepType { kFirst, kMid, kLast };

std::string_view StepTypeName(StepType type);

// One transition record. FIRST steps carry neither reward nor discount; every
// other step carries both.
struct TimeStep {
  StepType step_type = StepType::kFirst;
  std::optional<double> reward;
  std::optional<double> discount;
  Observation observation;

  bool first() const { return step_type == StepType::kFirst; }
  bool mid() const { return step_type == StepType::kMid; }
  bool last() const { return step_type == StepType::kLast; }

  bool operator==(const TimeStep& other) const = default;
};

// Discount of an exponentially decaying horizon with time constant `tau` at
// control interval `dt`, gamma = exp(-dt / tau). Suite tasks themselves
// always report discount 1; agents choose their own gamma.
double DiscountFromTimeConstant(double dt, double tau);

// Episodic environment. Reset() must precede the first Step(); stepping
// after a LAST step requires another Reset().
class Environment {
 public:
  virtual ~Environment() = default;

  virtual TimeStep Reset() = 0;
  virtual TimeStep Step(std::span<const double> action) = 0;

  virtual ArraySpec action_spec() const = 0;
  virtual ObservationSpec observation_spec() const = 0;

  // RGB image of the current state as a uint8 [height, width, 3] array.
  // Throws ConfigError for environments without a renderer.
  virtual Array Render(int width, int height, int camera = 0) const;
  virtual bool can_render() const { return false; }
};

}  // namespace planar

#endif  // PLANAR_ENV_ENVIRONMENT_H_
