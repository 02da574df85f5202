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

#include "planar/env/environment.h"

#include <cmath>

#include "planar/common/error.h"

namespace planar {

std::string_view StepTypeName(StepType type) {
  switch (type) {
    case StepType::kFirst: return "FIRST";
    case StepType::kMid: return "MID";
    case StepType::kLast: return "LAST";
  }
  return "?";
}

double DiscountFromTimeConstant(double dt, double tau) {
  if (!(dt > 0.0) || !(tau > 0.0)) {
    throw ParameterError("time step and time constant must be positive");
  }
  return std::exp(-dt / tau);
}

Array Environment::Render(int, int, int) const {
  throw ConfigError("this environment cannot render");
}

}  // namespace planar
