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


#ifndef PLANAR_AGENTS_ADAM_H_
#define PLANAR_AGENTS_ADAM_H_

#include <cmath>

#include <Eigen/Core>

#include "planar/common/error.h"

namespace planar {

struct AdamOptions {
  double learning_rate = 1e-4;
  double beta1 = 0.9;
  double beta2 = 0.999;
  double epsilon = 1e-8;
};

template <typename Scalar>
class Adam {
 public:
  using Vector = Eigen::Matrix<Scalar, Eigen::Dynamic, 1>;

  Adam() = default;
  Adam(int size, AdamOptions options)
      : options_(options), m_(Vector::Zero(size)), v_(Vector::Zero(size)) {}

  // params -= lr * mhat / (sqrt(vhat) + eps), with bias-corrected moments.
  void Step(Vector& params, const Vector& grads) {
    if (params.size() != m_.size() || grads.size() != m_.size()) {
      throw ContractError("Adam parameter size mismatch");
    }
    ++t_;
    const Scalar b1 = static_cast<Scalar>(options_.beta1);
    const Scalar b2 = static_cast<Scalar>(options_.beta2);
    m_ = b1 * m_ + (Scalar(1) - b1) * grads;
    v_ = b2 * v_ + (Scalar(1) - b2) * grads.cwiseProduct(grads);
    const double c1 = 1.0 - std::pow(options_.beta1, static_cast<double>(t_));
    const double c2 = 1.0 - std::pow(options_.beta2, static_cast<double>(t_));
    const Scalar step = static_cast<Scalar>(options_.learning_rate / c1);
    const Scalar root_c2 = static_cast<Scalar>(std::sqrt(c2));
    const Scalar eps = static_cast<Scalar>(options_.epsilon);
    params.array() -=
        step * m_.array() / (v_.array().sqrt() / root_c2 + eps);
  }

  const AdamOptions& options() const { return options_; }
  long step_count() const { return t_; }

  // exposed for checkpoints
  Vector& first_moment() { return m_; }
  Vector& second_moment() { return v_; }
  const Vector& first_moment() const { return m_; }
  const Vector& second_moment() const { return v_; }
  void set_step_count(long t) { t_ = t; }

 private:
  AdamOptions options_;
  Vector m_;
  Vector v_;
  long t_ = 0;
};

}  // namespace planar

#endif  // PLANAR_AGENTS_ADAM_H_
