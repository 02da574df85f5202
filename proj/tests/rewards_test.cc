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


#include <cmath>
#include <random>

#include <gtest/gtest.h>

#include "planar/common/error.h"
#include "planar/rewards/tolerance.h"

namespace planar {
namespace {

constexpr Sigmoid kAll[] = {Sigmoid::kGaussian, Sigmoid::kHyperbolic,
                            Sigmoid::kLongTail, Sigmoid::kLinear,
                            Sigmoid::kCosine,   Sigmoid::kQuadratic};

TEST(ToleranceTest, InsideAndOutsideWithoutMargin) {
  EXPECT_EQ(Tolerance(0.5, 0.0, 1.0), 1.0);
  EXPECT_EQ(Tolerance(0.0, 0.0, 1.0), 1.0);
  EXPECT_EQ(Tolerance(1.0, 0.0, 1.0), 1.0);
  EXPECT_EQ(Tolerance(2.0, 0.0, 1.0), 0.0);
  EXPECT_EQ(Tolerance(-1e-12, 0.0, 1.0), 0.0);
}

TEST(ToleranceTest, ValueAtMarginForEveryKind) {
  for (Sigmoid kind : kAll) {
    EXPECT_NEAR(Tolerance(1.0 + 0.3, 0.0, 1.0, 0.3, kind, 0.1), 0.1, 1e-12)
        << SigmoidName(kind);
    EXPECT_NEAR(Tolerance(-0.3, 0.0, 1.0, 0.3, kind, 0.1), 0.1, 1e-12)
        << SigmoidName(kind);
  }
}

TEST(ToleranceTest, GaussianHalfMarginClosedForm) {
  const double c = std::sqrt(-2.0 * std::log(0.1));
  const double expected = std::exp(-0.5 * (0.5 * c) * (0.5 * c));
  EXPECT_NEAR(Tolerance(1.5, 0.0, 1.0, 1.0, Sigmoid::kGaussian, 0.1), expected,
              1e-14);
}

TEST(ToleranceTest, ClosedFormsOfTheOtherKinds) {
  const double v = 0.25, r = 0.4;
  // hyperbolic: 1 / cosh(c r), cosh(c) = 1 / v
  const double ch = std::acosh(1.0 / v);
  EXPECT_NEAR(SigmoidValue(r, Sigmoid::kHyperbolic, v), 1.0 / std::cosh(ch * r),
              1e-14);
  // long tail: 1 / (1 + (c r)^2), 1 + c^2 = 1 / v
  const double cl = std::sqrt(1.0 / v - 1.0);
  EXPECT_NEAR(SigmoidValue(r, Sigmoid::kLongTail, v),
              1.0 / (1.0 + cl * cl * r * r), 1e-14);
  // linear with value_at_margin 0
  EXPECT_NEAR(SigmoidValue(0.25, Sigmoid::kLinear, 0.0), 0.75, 1e-15);
  EXPECT_EQ(SigmoidValue(1.5, Sigmoid::kLinear, 0.0), 0.0);
  EXPECT_EQ(SigmoidValue(1.0, Sigmoid::kCosine, 0.0), 0.0);
  EXPECT_EQ(SigmoidValue(2.0, Sigmoid::kQuadratic, 0.0), 0.0);
  EXPECT_NEAR(SigmoidValue(0.5, Sigmoid::kCosine, 0.0), 0.5, 1e-15);
  EXPECT_NEAR(SigmoidValue(0.5, Sigmoid::kQuadratic, 0.0), 0.75, 1e-15);
}

TEST(ToleranceTest, SigmoidIsOneAtZero) {
  for (Sigmoid kind : kAll) {
    EXPECT_EQ(SigmoidValue(0.0, kind, 0.1), 1.0) << SigmoidName(kind);
  }
}

TEST(ToleranceTest, RejectsInvalidParameters) {
  EXPECT_THROW(Tolerance(0.0, 1.0, 0.0), ParameterError);
  EXPECT_THROW(Tolerance(0.0, 0.0, 1.0, -1.0), ParameterError);
  EXPECT_THROW(Tolerance(2.0, 0.0, 1.0, 1.0, Sigmoid::kGaussian, 0.0),
               ParameterError);
  EXPECT_THROW(Tolerance(2.0, 0.0, 1.0, 1.0, Sigmoid::kLongTail, 1.0),
               ParameterError);
  EXPECT_NO_THROW(Tolerance(2.0, 0.0, 1.0, 1.0, Sigmoid::kLinear, 0.0));
  EXPECT_THROW(SigmoidFromName("logistic"), ParameterError);
}

TEST(ToleranceTest, NamesRoundTrip) {
  for (Sigmoid kind : kAll) {
    EXPECT_EQ(SigmoidFromName(SigmoidName(kind)), kind);
  }
}

TEST(ToleranceTest, RandomCompositionsStayInUnitInterval) {
  std::mt19937_64 rng(7);
  std::uniform_real_distribution<double> u(-3.0, 3.0);
  std::uniform_real_distribution<double> pos(0.01, 0.99);
  std::uniform_int_distribution<int> pick(0, 5);
  for (int i = 0; i < 2000; ++i) {
    double product = 1.0, sum = 0.0;
    for (int k = 0; k < 3; ++k) {
      const double a = u(rng), b = u(rng);
      const double t = Tolerance(u(rng), std::min(a, b), std::max(a, b),
                                 std::abs(u(rng)), kAll[pick(rng)], pos(rng));
      product *= t;
      sum += t;
    }
    EXPECT_GE(product, 0.0);
    EXPECT_LE(product, 1.0);
    EXPECT_GE(sum / 3.0, 0.0);
    EXPECT_LE(sum / 3.0, 1.0);
  }
}

TEST(ToleranceTest, MeanToleranceOfEmptyIsOne) {
  EXPECT_EQ(MeanTolerance({}, ToleranceParams{}), 1.0);
  const double xs[] = {0.0, 5.0};
  EXPECT_DOUBLE_EQ(MeanTolerance(xs, ToleranceParams{0.0, 1.0}), 0.5);
}

}  // namespace
}  // namespace planar
