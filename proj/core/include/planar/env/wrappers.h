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

#ifndef PLANAR_ENV_WRAPPERS_H_
#define PLANAR_ENV_WRAPPERS_H_

#include <deque>
#include <memory>
#include <string>

#include "planar/env/environment.h"

namespace planar {

// Adds a "pixels" observation, uint8 [height, width, 3], rendered after
// every reset and step. With `pixels_only` the feature observations are
// dropped.
class PixelWrapper : public Environment {
 public:
  static constexpr const char* kPixelsKey = "pixels";

  // Throws ConfigError if `env` cannot render.
  PixelWrapper(std::unique_ptr<Environment> env, int width, int height,
               bool pixels_only, int camera = 0);

  TimeStep Reset() override;
  TimeStep Step(std::span<const double> action) override;
  ArraySpec action_spec() const override { return env_->action_spec(); }
  ObservationSpec observation_spec() const override { return spec_; }
  Array Render(int width, int height, int camera) const override {
    return env_->Render(width, height, camera);
  }
  bool can_render() const override { return true; }

  Environment& inner() { return *env_; }

 private:
  TimeStep AddPixels(TimeStep step) const;

  std::unique_ptr<Environment> env_;
  int width_;
  int height_;
  bool pixels_only_;
  int camera_;
  ObservationSpec spec_;
};

// Replaces one uint8 [H, W, C] observation by the channel-wise concatenation
// of its last `num_frames` values, [H, W, C * num_frames]. After a reset the
// first frame is repeated.
class FrameStack : public Environment {
 public:
  FrameStack(std::unique_ptr<Environment> env, int num_frames = 3,
             std::string key = PixelWrapper::kPixelsKey);

  TimeStep Reset() override;
  TimeStep Step(std::span<const double> action) override;
  ArraySpec action_spec() const override { return env_->action_spec(); }
  ObservationSpec observation_spec() const override { return spec_; }
  Array Render(int width, int height, int camera) const override {
    return env_->Render(width, height, camera);
  }
  bool can_render() const override { return env_->can_render(); }

 private:
  TimeStep Stack(TimeStep step);

  std::unique_ptr<Environment> env_;
  int num_frames_;
  std::string key_;
  ObservationSpec spec_;
  std::deque<Array> frames_;
};

}  // namespace planar

#endif  // PLANAR_ENV_WRAPPERS_H_
