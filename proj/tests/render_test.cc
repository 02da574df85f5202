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


#include <filesystem>
#include <fstream>
#include <set>
#include <string>

#include <gtest/gtest.h>

#include "planar/common/error.h"
#include "planar/domains/suite.h"
#include "planar/model/parser.h"
#include "planar/render/rasterizer.h"

namespace planar {
namespace {

bool IsBackground(const std::uint8_t* p) {
  return p[0] == kBackground[0] && p[1] == kBackground[1] &&
         p[2] == kBackground[2];
}

TEST(RasterizerTest, DefaultSize) {
  auto env = Load("cartpole", "balance", 0);
  env->Reset();
  const FrameBuffer frame = RenderFrame(env->physics(), {});
  EXPECT_EQ(frame.width, 84);
  EXPECT_EQ(frame.height, 84);
  EXPECT_EQ(frame.rgb.size(), 84u * 84u * 3u);
}

TEST(RasterizerTest, EmptySceneIsBackground) {
  Physics physics(LoadModel("<mujoco><worldbody/></mujoco>"));
  const FrameBuffer frame = RenderFrame(physics, {.width = 16, .height = 8});
  EXPECT_EQ(frame, FrameBuffer(16, 8, kBackground));
}

TEST(RasterizerTest, DrawsGeomsAtProjectedPositions) {
  // 0.5 m sphere at the origin of the default 2 m wide xz view
  Physics physics(LoadModel(R"(<mujoco><worldbody><geom name="s"
      type="sphere" size=".5" rgba="1 0 0 1"/></worldbody></mujoco>)"));
  const FrameBuffer frame = RenderFrame(physics, {.width = 40, .height = 40});
  EXPECT_FALSE(IsBackground(frame.pixel(20, 20)));
  EXPECT_EQ(frame.pixel(20, 20)[1], 0);
  EXPECT_TRUE(IsBackground(frame.pixel(1, 1)));
  EXPECT_TRUE(IsBackground(frame.pixel(20, 3)));
  EXPECT_FALSE(IsBackground(frame.pixel(20, 12)));
}

TEST(RasterizerTest, MovingBodiesChangeTheImage) {
  auto env = Load("pendulum", "swingup", 0);
  env->Reset();
  env->mutable_physics().Modify([](auto& s) { s.qpos()[0] = 0.0; });
  const FrameBuffer up = RenderFrame(env->physics(), {});
  env->mutable_physics().Modify([](auto& s) { s.qpos()[0] = 3.0; });
  const FrameBuffer down = RenderFrame(env->physics(), {});
  EXPECT_NE(up, down);
}

TEST(RasterizerTest, TintScalesGeomsNotBackground) {
  auto env = Load("reacher", "easy", 0);
  env->Reset();
  const FrameBuffer dark =
      RenderFrame(env->physics(), {.reward_tint = 0.0});
  const FrameBuffer bright =
      RenderFrame(env->physics(), {.reward_tint = 1.0});
  const FrameBuffer plain = RenderFrame(env->physics(), {});
  EXPECT_EQ(bright, plain);
  int changed = 0;
  for (int y = 0; y < 84; ++y) {
    for (int x = 0; x < 84; ++x) {
      if (IsBackground(plain.pixel(x, y))) {
        EXPECT_TRUE(IsBackground(dark.pixel(x, y)));
      }
      for (int c = 0; c < 3; ++c) {
        EXPECT_LE(dark.pixel(x, y)[c], plain.pixel(x, y)[c]);
      }
      if (dark.pixel(x, y)[0] != plain.pixel(x, y)[0]) ++changed;
    }
  }
  EXPECT_GT(changed, 10);
}

TEST(RasterizerTest, Deterministic) {
  auto a = Load("swimmer", "swimmer6", 4);
  auto b = Load("swimmer", "swimmer6", 4);
  a->Reset();
  b->Reset();
  EXPECT_EQ(RenderFrame(a->physics(), {}), RenderFrame(b->physics(), {}));
}

TEST(RasterizerTest, UnknownCamera) {
  auto env = Load("point_mass", "easy", 0);
  env->Reset();
  EXPECT_THROW(RenderFrame(env->physics(), {.camera = 5}), LookupError);
  EXPECT_THROW(RenderFrame(env->physics(), {.camera = -1}), LookupError);
}

TEST(RasterizerTest, PpmHeader) {
  const FrameBuffer frame(3, 2, {1, 2, 3});
  const auto path =
      std::filesystem::temp_directory_path() / "planar_render_test.ppm";
  WritePpm(frame, path);
  std::ifstream in(path, std::ios::binary);
  std::string magic;
  int w = 0, h = 0, max = 0;
  in >> magic >> w >> h >> max;
  in.get();
  std::string body((std::istreambuf_iterator<char>(in)), {});
  EXPECT_EQ(magic, "P6");
  EXPECT_EQ(w, 3);
  EXPECT_EQ(h, 2);
  EXPECT_EQ(max, 255);
  EXPECT_EQ(body.size(), 18u);
  EXPECT_EQ(body[2], 3);
  std::filesystem::remove(path);
}

}  // namespace
}  // namespace planar
