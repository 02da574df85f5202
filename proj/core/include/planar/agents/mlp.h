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


#ifndef PLANAR_AGENTS_MLP_H_
#define PLANAR_AGENTS_MLP_H_

#include <span>
#include <string_view>
#include <vector>

#include <Eigen/Core>

#include "planar/common/random.h"

namespace planar {

enum class Activation { kLinear, kRelu, kTanh };

std::string_view ActivationName(Activation activation);
Activation ActivationFromName(std::string_view name);

// Fully connected network over column batches (one sample per column).
// Optionally a second input is concatenated to the input of layer
// `inject_layer`; the critic uses this to bring the action in at its second
// layer. Parameters live in one flat vector so optimizers, target updates
// and checkpoints can treat them uniformly.
template <typename Scalar>
class Mlp {
 public:
  using Matrix = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>;
  using Vector = Eigen::Matrix<Scalar, Eigen::Dynamic, 1>;

  struct Options {
    std::vector<int> sizes;  // input, hidden..., output
    Activation hidden = Activation::kRelu;
    Activation output = Activation::kLinear;
    int inject_dim = 0;
    int inject_layer = 0;  // layer whose input gets the extra block
  };

  Mlp() = default;
  // Zero parameters; see InitFanIn.
  explicit Mlp(Options options);

  // Weights and biases ~ U(-1/sqrt(fan_in), 1/sqrt(fan_in)); the output
  // layer uses U(-final_scale, final_scale) when final_scale > 0.
  void InitFanIn(Rng& rng, double final_scale = 0.0);

  int num_layers() const { return static_cast<int>(layers_.size()); }
  int input_dim() const { return options_.sizes.front(); }
  int output_dim() const { return options_.sizes.back(); }
  int inject_dim() const { return options_.inject_dim; }
  const Options& options() const { return options_; }

  // Forward pass over a batch; caches what Backward needs. `extra` must be
  // empty unless inject_dim > 0.
  const Matrix& Forward(const Matrix& input, const Matrix& extra = Matrix());

  // Backpropagates dL/d(output) of the last Forward. Parameter gradients
  // are accumulated into grads(); gradients with respect to the input and
  // the injected block are stored in input_grad() / extra_grad().
  void Backward(const Matrix& output_grad);

  const Matrix& input_grad() const { return input_grad_; }
  const Matrix& extra_grad() const { return extra_grad_; }

  Vector& params() { return params_; }
  const Vector& params() const { return params_; }
  Vector& grads() { return grads_; }
  const Vector& grads() const { return grads_; }
  void ZeroGrad() { grads_.setZero(); }
  int num_params() const { return static_cast<int>(params_.size()); }

  Eigen::Map<const Matrix> weight(int layer) const;
  Eigen::Map<const Vector> bias(int layer) const;
  Eigen::Map<Matrix> mutable_weight(int layer);
  Eigen::Map<Vector> mutable_bias(int layer);

 private:
  struct Layer {
    int in = 0;
    int out = 0;
    int w_offset = 0;
    int b_offset = 0;
    Activation activation = Activation::kLinear;
  };

  Options options_;
  std::vector<Layer> layers_;
  Vector params_;
  Vector grads_;
  // cache of the last forward pass
  std::vector<Matrix> inputs_;   // input of each layer (after injection)
  std::vector<Matrix> outputs_;  // activation of each layer
  Matrix input_grad_;
  Matrix extra_grad_;
};

extern template class Mlp<float>;
extern template class Mlp<double>;

}  // namespace planar

#endif  // PLANAR_AGENTS_MLP_H_
