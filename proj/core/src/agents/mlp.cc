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


#include "planar/agents/mlp.h"

#include <cmath>
#include <string>

#include "planar/common/error.h"

namespace planar {

std::string_view ActivationName(Activation activation) {
  switch (activation) {
    case Activation::kLinear:
      return "linear";
    case Activation::kRelu:
      return "relu";
    case Activation::kTanh:
      return "tanh";
  }
  return "linear";
}

Activation ActivationFromName(std::string_view name) {
  if (name == "linear") return Activation::kLinear;
  if (name == "relu") return Activation::kRelu;
  if (name == "tanh") return Activation::kTanh;
  throw ParameterError("unknown activation '" + std::string(name) + "'");
}

template <typename Scalar>
Mlp<Scalar>::Mlp(Options options) : options_(std::move(options)) {
  const std::vector<int>& sizes = options_.sizes;
  if (sizes.size() < 2) throw ParameterError("an Mlp needs at least 2 sizes");
  for (int s : sizes) {
    if (s <= 0) throw ParameterError("layer sizes must be positive");
  }
  const int n = static_cast<int>(sizes.size()) - 1;
  if (options_.inject_dim < 0 ||
      (options_.inject_dim > 0 &&
       (options_.inject_layer < 0 || options_.inject_layer >= n))) {
    throw ParameterError("bad injection layer");
  }
  int offset = 0;
  for (int l = 0; l < n; ++l) {
    Layer layer;
    layer.in = sizes[l] + (l == options_.inject_layer ? options_.inject_dim : 0);
    layer.out = sizes[l + 1];
    layer.w_offset = offset;
    offset += layer.in * layer.out;
    layer.b_offset = offset;
    offset += layer.out;
    layer.activation = l + 1 == n ? options_.output : options_.hidden;
    layers_.push_back(layer);
  }
  params_ = Vector::Zero(offset);
  grads_ = Vector::Zero(offset);
  inputs_.resize(n);
  outputs_.resize(n);
}

template <typename Scalar>
void Mlp<Scalar>::InitFanIn(Rng& rng, double final_scale) {
  for (int l = 0; l < num_layers(); ++l) {
    const Layer& layer = layers_[l];
    double bound = 1.0 / std::sqrt(static_cast<double>(layer.in));
    if (l + 1 == num_layers() && final_scale > 0.0) bound = final_scale;
    const int count = layer.in * layer.out + layer.out;
    for (int i = 0; i < count; ++i) {
      params_[layer.w_offset + i] = static_cast<Scalar>(Uniform(rng, -bound, bound));
    }
  }
}

template <typename Scalar>
Eigen::Map<const typename Mlp<Scalar>::Matrix> Mlp<Scalar>::weight(
    int l) const {
  const Layer& layer = layers_.at(l);
  return {params_.data() + layer.w_offset, layer.out, layer.in};
}

template <typename Scalar>
Eigen::Map<const typename Mlp<Scalar>::Vector> Mlp<Scalar>::bias(int l) const {
  const Layer& layer = layers_.at(l);
  return {params_.data() + layer.b_offset, layer.out};
}

template <typename Scalar>
Eigen::Map<typename Mlp<Scalar>::Matrix> Mlp<Scalar>::mutable_weight(int l) {
  const Layer& layer = layers_.at(l);
  return {params_.data() + layer.w_offset, layer.out, layer.in};
}

template <typename Scalar>
Eigen::Map<typename Mlp<Scalar>::Vector> Mlp<Scalar>::mutable_bias(int l) {
  const Layer& layer = layers_.at(l);
  return {params_.data() + layer.b_offset, layer.out};
}

template <typename Scalar>
const typename Mlp<Scalar>::Matrix& Mlp<Scalar>::Forward(const Matrix& input,
                                                         const Matrix& extra) {
  if (input.rows() != input_dim()) {
    throw ContractError("Mlp input has " + std::to_string(input.rows()) +
                        " rows, expected " + std::to_string(input_dim()));
  }
  const bool injects = options_.inject_dim > 0;
  if (injects && (extra.rows() != options_.inject_dim ||
                  extra.cols() != input.cols())) {
    throw ContractError("Mlp injected input has the wrong shape");
  }
  if (!injects && extra.size() != 0) {
    throw ContractError("Mlp does not take an injected input");
  }
  const Eigen::Index batch = input.cols();
  for (int l = 0; l < num_layers(); ++l) {
    const Layer& layer = layers_[l];
    const Matrix& prev = l == 0 ? input : outputs_[l - 1];
    Matrix& in = inputs_[l];
    if (injects && l == options_.inject_layer) {
      in.resize(layer.in, batch);
      in.topRows(prev.rows()) = prev;
      in.bottomRows(options_.inject_dim) = extra;
    } else {
      in = prev;
    }
    Matrix& out = outputs_[l];
    out.noalias() = weight(l) * in;
    out.colwise() += bias(l);
    switch (layer.activation) {
      case Activation::kLinear:
        break;
      case Activation::kRelu:
        out = out.cwiseMax(Scalar(0));
        break;
      case Activation::kTanh:
        out = out.array().tanh().matrix();
        break;
    }
  }
  return outputs_.back();
}

template <typename Scalar>
void Mlp<Scalar>::Backward(const Matrix& output_grad) {
  if (output_grad.rows() != output_dim() ||
      output_grad.cols() != outputs_.back().cols()) {
    throw ContractError("Mlp output gradient has the wrong shape");
  }
  Matrix grad = output_grad;
  for (int l = num_layers() - 1; l >= 0; --l) {
    const Layer& layer = layers_[l];
    const Matrix& out = outputs_[l];
    switch (layer.activation) {
      case Activation::kLinear:
        break;
      case Activation::kRelu:
        grad = (out.array() > Scalar(0)).select(grad, Scalar(0));
        break;
      case Activation::kTanh:
        grad = (grad.array() * (Scalar(1) - out.array().square())).matrix();
        break;
    }
    Eigen::Map<Matrix> dw(grads_.data() + layer.w_offset, layer.out, layer.in);
    Eigen::Map<Vector> db(grads_.data() + layer.b_offset, layer.out);
    dw.noalias() += grad * inputs_[l].transpose();
    db += grad.rowwise().sum();
    Matrix down = weight(l).transpose() * grad;
    if (options_.inject_dim > 0 && l == options_.inject_layer) {
      extra_grad_ = down.bottomRows(options_.inject_dim);
      grad = down.topRows(layer.in - options_.inject_dim);
    } else {
      grad = std::move(down);
    }
  }
  input_grad_ = std::move(grad);
}

template class Mlp<float>;
template class Mlp<double>;

}  // namespace planar
