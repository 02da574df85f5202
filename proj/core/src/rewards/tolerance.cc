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

#include "planar/rewards/tolerance.h"

#include <cmath>
#include <numbers>
#include <string>

#include "planar/common/error.h"

namespace planar {
namespace {

void CheckValueAtMargin(Sigmoid kind, double value_at_margin) {
  if (HasInfiniteSupport(kind)) {
    if (!(value_at_margin > 0.0 && value_at_margin < 1.0)) {
      throw ParameterError(std::string(SigmoidName(kind)) +
                           " sigmoid requires 0 < value_at_margin < 1, got " +
                           std::to_string(value_at_margin));
    }
  } else if (!(value_at_margin >= 0.0 && value_at_margin < 1.0)) {
    throw ParameterError(std::string(SigmoidName(kind)) +
                         " sigmoid requires 0 <= value_at_margin < 1, got " +
                         std::to_string(value_at_margin));
  }
}

}  // namespace

bool HasInfiniteSupport(Sigmoid kind) {
  return kind == Sigmoid::kGaussian || kind == Sigmoid::kHyperbolic ||
         kind == Sigmoid::kLongTail;
}

std::string_view SigmoidName(Sigmoid kind) {
  switch (kind) {
    case Sigmoid::kGaussian:
      return "gaussian";
    case Sigmoid::kHyperbolic:
      return "hyperbolic";
    case Sigmoid::kLongTail:
      return "long_tail";
    case Sigmoid::kLinear:
      return "linear";
    case Sigmoid::kCosine:
      return "cosine";
    case Sigmoid::kQuadratic:
      return "quadratic";
  }
  return "unknown";
}

Sigmoid SigmoidFromName(std::string_view name) {
  for (Sigmoid kind : {Sigmoid::kGaussian, Sigmoid::kHyperbolic,
                       Sigmoid::kLongTail, Sigmoid::kLinear, Sigmoid::kCosine,
                       Sigmoid::kQuadratic}) {
    if (SigmoidName(kind) == name) return kind;
  }
  throw ParameterError("unknown sigmoid '" + std::string(name) + "'");
}

void ValidateToleranceParams(const ToleranceParams& params) {
  if (!(params.lower <= params.upper)) {
    throw ParameterError("tolerance bounds require lower <= upper");
  }
  if (!(params.margin >= 0.0)) {
    throw ParameterError("tolerance margin must be non-negative");
  }
  CheckValueAtMargin(params.sigmoid, params.value_at_margin);
}

double SigmoidValue(double r, Sigmoid kind, double value_at_margin) {
  if (!(r >= 0.0)) throw ParameterError("sigmoid argument must be >= 0");
  CheckValueAtMargin(kind, value_at_margin);
  const double v = value_at_margin;
  switch (kind) {
    case Sigmoid::kGaussian: {
      const double c = std::sqrt(-2.0 * std::log(v));
      const double s = r * c;
      return std::exp(-0.5 * s * s);
    }
    case Sigmoid::kHyperbolic: {
      const double c = std::acosh(1.0 / v);
      return 1.0 / std::cosh(r * c);
    }
    case Sigmoid::kLongTail: {
      const double c = std::sqrt(1.0 / v - 1.0);
      const double s = r * c;
      return 1.0 / (s * s + 1.0);
    }
    case Sigmoid::kLinear: {
      const double s = r * (1.0 - v);
      return s < 1.0 ? 1.0 - s : 0.0;
    }
    case Sigmoid::kCosine: {
      const double s = r * std::acos(2.0 * v - 1.0) / std::numbers::pi;
      return s < 1.0 ? 0.5 * (1.0 + std::cos(std::numbers::pi * s)) : 0.0;
    }
    case Sigmoid::kQuadratic: {
      const double s = r * std::sqrt(1.0 - v);
      return s < 1.0 ? 1.0 - s * s : 0.0;
    }
  }
  return 0.0;
}

double Tolerance(double x, const ToleranceParams& params) {
  ValidateToleranceParams(params);
  if (params.lower <= x && x <= params.upper) return 1.0;
  if (params.margin == 0.0) return 0.0;
  const double distance =
      x < params.lower ? params.lower - x : x - params.upper;
  return SigmoidValue(distance / params.margin, params.sigmoid,
                      params.value_at_margin);
}

double MeanTolerance(std::span<const double> xs,
                     const ToleranceParams& params) {
  if (xs.empty()) return 1.0;
  double sum = 0.0;
  for (double x : xs) sum += Tolerance(x, params);
  return sum / static_cast<double>(xs.size());
}

}  // namespace planar
