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

#ifndef PLANAR_REWARDS_TOLERANCE_H_
#define PLANAR_REWARDS_TOLERANCE_H_

#include <span>
#include <string_view>

namespace planar {

// Shapes available for the decay of tolerance() outside its bounds. The first
// three never reach zero; the last three reach exactly zero at r >= 1 when
// value_at_margin is 0.
enum class Sigmoid {
  kGaussian,
  kHyperbolic,
  kLongTail,
  kLinear,
  kCosine,
  kQuadratic,
};

bool HasInfiniteSupport(Sigmoid kind);
std::string_view SigmoidName(Sigmoid kind);
// Throws ParameterError for an unknown name.
Sigmoid SigmoidFromName(std::string_view name);

struct ToleranceParams {
  double lower = 0.0;
  double upper = 0.0;
  double margin = 0.0;
  Sigmoid sigmoid = Sigmoid::kGaussian;
  double value_at_margin = 0.1;
};

// Throws ParameterError unless lower <= upper, margin >= 0 and
// value_at_margin lies in (0, 1) for infinite-support kinds or [0, 1) for
// finite-support kinds.
void ValidateToleranceParams(const ToleranceParams& params);

// Unit sigmoid with S(0) = 1 and S(1) = value_at_margin, non-increasing in
// r >= 0.
double SigmoidValue(double r, Sigmoid kind, double value_at_margin);

// 1 inside [lower, upper]. Outside, 0 when margin is 0, otherwise
// S(distance / margin).
double Tolerance(double x, const ToleranceParams& params);

// Convenience overload mirroring the keyword form used by task code.
inline double Tolerance(double x, double lower, double upper,
                        double margin = 0.0,
                        Sigmoid sigmoid = Sigmoid::kGaussian,
                        double value_at_margin = 0.1) {
  return Tolerance(x, ToleranceParams{lower, upper, margin, sigmoid,
                                      value_at_margin});
}

// Mean of Tolerance over a vector of values; 1 for an empty input.
double MeanTolerance(std::span<const double> xs, const ToleranceParams& params);

}  // namespace planar

#endif  // PLANAR_REWARDS_TOLERANCE_H_
