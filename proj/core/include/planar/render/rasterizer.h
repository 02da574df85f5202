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

#ifndef PLANAR_RENDER_RASTERIZER_H_
#define PLANAR_RENDER_RASTERIZER_H_

#include <array>
#include <cstdint>
#include <filesystem>
#include <optional>
#include <vector>

#include "planar/dynamics/physics.h"

namespace planar {

// RGB bytes, row-major from the top-left pixel.
struct FrameBuffer {
  int width = 0;
  int height = 0;
  std::vector<std::uint8_t> rgb;

  FrameBuffer() = default;
  FrameBuffer(int width, int height, std::array<std::uint8_t, 3> fill);

  std::uint8_t* pixel(int x, int y) {
    return &rgb[(static_cast<std::size_t>(y) * width + x) * 3];
  }
  const std::uint8_t* pixel(int x, int y) const {
    return &rgb[(static_cast<std::size_t>(y) * width + x) * 3];
  }
  bool operator==(const FrameBuffer& other) const = default;
};

inline constexpr std::array<std::uint8_t, 3> kBackground = {25, 38, 51};

struct RenderOptions {
  int width = 84;
  int height = 84;
  int camera = 0;
  // Scales every non-plane geom colour by (0.25 + 0.75 * tint), tint in
  // [0, 1], so the scene brightens with the current reward.
  std::optional<double> reward_tint;
};

// Orthographic projection of all geoms onto the camera plane, painted far
// to near. Models without cameras use an xz view of width 2 m centred on the
// origin. Throws LookupError for an unknown camera index.
FrameBuffer RenderFrame(const Physics& physics, const RenderOptions& options);

// Binary PPM (P6).
void WritePpm(const FrameBuffer& frame, const std::filesystem::path& path);

}  // namespace planar

#endif  // PLANAR_RENDER_RASTERIZER_H_
