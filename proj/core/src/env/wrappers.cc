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

#include "planar/env/wrappers.h"

#include <utility>

#include "planar/common/error.h"

namespace planar {

PixelWrapper::PixelWrapper(std::unique_ptr<Environment> env, int width,
                           int height, bool pixels_only, int camera)
    : env_(std::move(env)),
      width_(width),
      height_(height),
      pixels_only_(pixels_only),
      camera_(camera) {
  if (!env_ || !env_->can_render()) {
    throw ConfigError("pixel observations require a renderable environment");
  }
  if (width <= 0 || height <= 0) {
    throw ParameterError("image size must be positive");
  }
  if (!pixels_only_) spec_ = env_->observation_spec();
  if (spec_.Contains(kPixelsKey)) {
    throw ConfigError("observation already contains 'pixels'");
  }
  spec_.Set(kPixelsKey,
            MakeArraySpec(kPixelsKey, {height_, width_, 3}, DType::kUint8));
}

TimeStep PixelWrapper::AddPixels(TimeStep step) const {
  if (pixels_only_) step.observation = Observation();
  step.observation.Set(kPixelsKey, env_->Render(width_, height_, camera_));
  return step;
}

TimeStep PixelWrapper::Reset() { return AddPixels(env_->Reset()); }

TimeStep PixelWrapper::Step(std::span<const double> action) {
  return AddPixels(env_->Step(action));
}

FrameStack::FrameStack(std::unique_ptr<Environment> env, int num_frames,
                       std::string key)
    : env_(std::move(env)), num_frames_(num_frames), key_(std::move(key)) {
  if (num_frames_ < 1) throw ParameterError("num_frames must be >= 1");
  spec_ = env_->observation_spec();
  const ArraySpec* frame = spec_.Find(key_);
  if (!frame || frame->dtype != DType::kUint8 || frame->shape.size() != 3) {
    throw ConfigError("frame stacking needs a uint8 [H, W, C] observation '" +
                      key_ + "'");
  }
  ArraySpec stacked = *frame;
  stacked.shape[2] *= num_frames_;
  spec_.Set(key_, stacked);
}

TimeStep FrameStack::Stack(TimeStep step) {
  const std::vector<int>& shape = step.observation.at(key_).shape();
  const int pixels = shape[0] * shape[1];
  const int channels = shape[2];
  std::vector<std::uint8_t> out(static_cast<std::size_t>(pixels) * channels *
                                num_frames_);
  int f = 0;
  for (const Array& frame : frames_) {
    const auto src = frame.bytes();
    for (int p = 0; p < pixels; ++p) {
      for (int c = 0; c < channels; ++c) {
        out[(static_cast<std::size_t>(p) * num_frames_ + f) * channels + c] =
            src[static_cast<std::size_t>(p) * channels + c];
      }
    }
    ++f;
  }
  step.observation.Set(
      key_, Array::Bytes({shape[0], shape[1], channels * num_frames_},
                         std::move(out)));
  return step;
}

TimeStep FrameStack::Reset() {
  TimeStep step = env_->Reset();
  frames_.assign(num_frames_, step.observation.at(key_));
  return Stack(std::move(step));
}

TimeStep FrameStack::Step(std::span<const double> action) {
  if (frames_.empty()) throw ContractError("Step() called before Reset()");
  TimeStep step = env_->Step(action);
  frames_.pop_front();
  frames_.push_back(step.observation.at(key_));
  return Stack(std::move(step));
}

}  // namespace planar
