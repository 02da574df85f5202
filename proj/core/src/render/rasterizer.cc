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

#include "planar/render/rasterizer.h"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <numeric>
#include <string>

#include <Eigen/Core>

#include "planar/common/error.h"

namespace planar {
namespace {

struct View {
  CameraPlane plane = CameraPlane::kXZ;
  Eigen::Vector2d center = Eigen::Vector2d::Zero();
  double extent = 2.0;
};

// Image-plane coordinates and depth (larger is farther) of a world point.
Eigen::Vector2d Project(const View& view, const Eigen::Vector3d& p) {
  return view.plane == CameraPlane::kXZ ? Eigen::Vector2d(p.x(), p.z())
                                        : Eigen::Vector2d(p.x(), p.y());
}

double Depth(const View& view, const Eigen::Vector3d& p) {
  return view.plane == CameraPlane::kXZ ? p.y() : -p.z();
}

Eigen::Vector3d ViewDirection(const View& view) {
  return view.plane == CameraPlane::kXZ ? Eigen::Vector3d(0, 1, 0)
                                        : Eigen::Vector3d(0, 0, -1);
}

double Cross2(const Eigen::Vector2d& a, const Eigen::Vector2d& b) {
  return a.x() * b.y() - a.y() * b.x();
}

// Monotone chain; counter-clockwise, no collinear points.
std::vector<Eigen::Vector2d> ConvexHull(std::vector<Eigen::Vector2d> pts) {
  std::sort(pts.begin(), pts.end(), [](const auto& a, const auto& b) {
    return a.x() < b.x() || (a.x() == b.x() && a.y() < b.y());
  });
  if (pts.size() < 3) return pts;
  std::vector<Eigen::Vector2d> hull(2 * pts.size());
  std::size_t k = 0;
  for (std::size_t i = 0; i < pts.size(); ++i) {
    while (k >= 2 && Cross2(hull[k - 1] - hull[k - 2], pts[i] - hull[k - 2]) <= 0) --k;
    hull[k++] = pts[i];
  }
  for (std::size_t i = pts.size() - 1, t = k + 1; i > 0; --i) {
    while (k >= t && Cross2(hull[k - 1] - hull[k - 2], pts[i - 1] - hull[k - 2]) <= 0) --k;
    hull[k++] = pts[i - 1];
  }
  hull.resize(k - 1);
  return hull;
}

bool InsideConvex(const std::vector<Eigen::Vector2d>& hull,
                  const Eigen::Vector2d& p) {
  if (hull.size() < 3) return false;
  for (std::size_t i = 0; i < hull.size(); ++i) {
    const auto& a = hull[i];
    const auto& b = hull[(i + 1) % hull.size()];
    if (Cross2(b - a, p - a) < 0) return false;
  }
  return true;
}

double SegmentDistance(const Eigen::Vector2d& a, const Eigen::Vector2d& b,
                       const Eigen::Vector2d& p) {
  const Eigen::Vector2d ab = b - a;
  const double len2 = ab.squaredNorm();
  double t = len2 > 0.0 ? (p - a).dot(ab) / len2 : 0.0;
  t = std::clamp(t, 0.0, 1.0);
  return (a + t * ab - p).norm();
}

// Coverage test for one projected geom plus its image-plane bounding box.
struct Shape {
  enum Kind { kDisc, kStadium, kPolygon, kHalfPlane } kind = kDisc;
  Eigen::Vector2d a = Eigen::Vector2d::Zero();
  Eigen::Vector2d b = Eigen::Vector2d::Zero();
  double radius = 0.0;
  std::vector<Eigen::Vector2d> hull;
  Eigen::Vector2d normal = Eigen::Vector2d::Zero();  // half-plane
  double half_width = 0.0;                            // half-plane
  Eigen::Vector2d lo, hi;

  bool Contains(const Eigen::Vector2d& p) const {
    switch (kind) {
      case kDisc: return (p - a).squaredNorm() <= radius * radius;
      case kStadium: return SegmentDistance(a, b, p) <= radius;
      case kPolygon: return InsideConvex(hull, p);
      case kHalfPlane: {
        const Eigen::Vector2d d = p - a;
        const Eigen::Vector2d tangent(-normal.y(), normal.x());
        return d.dot(normal) <= 0.0 && std::abs(d.dot(tangent)) <= half_width;
      }
    }
    return false;
  }
};

Shape MakeShape(const View& view, GeomType type, const Eigen::Vector3d& pos,
                const Eigen::Matrix3d& mat, const Eigen::Vector3d& size) {
  Shape s;
  const Eigen::Vector2d c = Project(view, pos);
  switch (type) {
    case GeomType::kSphere:
      s.kind = Shape::kDisc;
      s.a = c;
      s.radius = size[0];
      s.lo = c.array() - s.radius;
      s.hi = c.array() + s.radius;
      break;
    case GeomType::kCapsule: {
      s.kind = Shape::kStadium;
      const Eigen::Vector3d axis = mat.col(2) * size[1];
      s.a = Project(view, pos - axis);
      s.b = Project(view, pos + axis);
      s.radius = size[0];
      s.lo = s.a.cwiseMin(s.b).array() - s.radius;
      s.hi = s.a.cwiseMax(s.b).array() + s.radius;
      break;
    }
    case GeomType::kBox: {
      s.kind = Shape::kPolygon;
      std::vector<Eigen::Vector2d> corners;
      for (int i = 0; i < 8; ++i) {
        const Eigen::Vector3d local((i & 1 ? 1 : -1) * size[0],
                                    (i & 2 ? 1 : -1) * size[1],
                                    (i & 4 ? 1 : -1) * size[2]);
        corners.push_back(Project(view, pos + mat * local));
      }
      s.hull = ConvexHull(corners);
      s.lo = s.hi = corners[0];
      for (const auto& p : corners) {
        s.lo = s.lo.cwiseMin(p);
        s.hi = s.hi.cwiseMax(p);
      }
      break;
    }
    case GeomType::kPlane: {
      const Eigen::Vector3d normal = mat.col(2);
      if (std::abs(normal.dot(ViewDirection(view))) > 0.5) {
        // Seen face-on: a finite rectangle.
        s.kind = Shape::kPolygon;
        std::vector<Eigen::Vector2d> corners;
        for (int i = 0; i < 4; ++i) {
          const Eigen::Vector3d local((i & 1 ? 1 : -1) * size[0],
                                      (i & 2 ? 1 : -1) * size[1], 0.0);
          corners.push_back(Project(view, pos + mat * local));
        }
        s.hull = ConvexHull(corners);
        s.lo = s.hi = corners[0];
        for (const auto& p : corners) {
          s.lo = s.lo.cwiseMin(p);
          s.hi = s.hi.cwiseMax(p);
        }
      } else {
        // Seen edge-on: fill everything behind the surface.
        s.kind = Shape::kHalfPlane;
        s.a = c;
        Eigen::Vector2d n = Project(view, normal);
        s.normal = n.norm() > 0.0 ? Eigen::Vector2d(n / n.norm())
                                  : Eigen::Vector2d(0.0, 1.0);
        s.half_width = std::max(size[0], size[1]);
        s.lo.setConstant(-1e300);
        s.hi.setConstant(1e300);
      }
      break;
    }
  }
  return s;
}

std::uint8_t ToByte(double v) {
  return static_cast<std::uint8_t>(std::lround(std::clamp(v, 0.0, 1.0) * 255.0));
}

}  // namespace

FrameBuffer::FrameBuffer(int width, int height,
                         std::array<std::uint8_t, 3> fill)
    : width(width), height(height),
      rgb(static_cast<std::size_t>(width) * height * 3) {
  for (std::size_t i = 0; i < rgb.size(); i += 3) {
    rgb[i] = fill[0];
    rgb[i + 1] = fill[1];
    rgb[i + 2] = fill[2];
  }
}

FrameBuffer RenderFrame(const Physics& physics, const RenderOptions& options) {
  if (options.width <= 0 || options.height <= 0) {
    throw ParameterError("image size must be positive");
  }
  const CompiledModel& m = physics.model();
  View view;
  if (m.ncam == 0) {
    if (options.camera != 0) {
      throw LookupError("unknown camera " + std::to_string(options.camera));
    }
  } else {
    if (options.camera < 0 || options.camera >= m.ncam) {
      throw LookupError("unknown camera " + std::to_string(options.camera));
    }
    view.plane = m.cam_plane[options.camera];
    view.center = m.cam_center[options.camera];
    view.extent = m.cam_extent[options.camera];
  }

  FrameBuffer frame(options.width, options.height, kBackground);
  const Kinematics& kin = physics.kinematics();

  // Planes first, then far to near; ties keep model order.
  std::vector<int> order(m.ngeom);
  std::iota(order.begin(), order.end(), 0);
  std::vector<double> depth(m.ngeom);
  for (int g = 0; g < m.ngeom; ++g) depth[g] = Depth(view, kin.geom_xpos[g]);
  std::stable_sort(order.begin(), order.end(), [&](int a, int b) {
    const bool pa = m.geom_type[a] == GeomType::kPlane;
    const bool pb = m.geom_type[b] == GeomType::kPlane;
    if (pa != pb) return pa;
    return depth[a] > depth[b];
  });

  const double scale = options.width / view.extent;  // pixels per metre
  const double height_m = options.height / scale;
  for (int g : order) {
    const Shape shape = MakeShape(view, m.geom_type[g], kin.geom_xpos[g],
                                  kin.geom_xmat[g], physics.geom_size()[g]);
    Eigen::Vector3d color = m.geom_rgba[g].head<3>();
    const double alpha = std::clamp(m.geom_rgba[g][3], 0.0, 1.0);
    if (options.reward_tint && m.geom_type[g] != GeomType::kPlane) {
      color *= 0.25 + 0.75 * std::clamp(*options.reward_tint, 0.0, 1.0);
    }
    // Pixel range covered by the bounding box.
    const double left = view.center.x() - 0.5 * view.extent;
    const double top = view.center.y() + 0.5 * height_m;
    auto pixel_index = [](double v, int limit) {
      return static_cast<int>(std::clamp(v, 0.0, static_cast<double>(limit)));
    };
    const int x0 = pixel_index(std::floor((shape.lo.x() - left) * scale), options.width - 1);
    const int x1 = pixel_index(std::ceil((shape.hi.x() - left) * scale), options.width - 1);
    const int y0 = pixel_index(std::floor((top - shape.hi.y()) * scale), options.height - 1);
    const int y1 = pixel_index(std::ceil((top - shape.lo.y()) * scale), options.height - 1);
    for (int y = y0; y <= y1; ++y) {
      for (int x = x0; x <= x1; ++x) {
        const Eigen::Vector2d p(left + (x + 0.5) / scale, top - (y + 0.5) / scale);
        if (!shape.Contains(p)) continue;
        std::uint8_t* px = frame.pixel(x, y);
        for (int c = 0; c < 3; ++c) {
          px[c] = ToByte(alpha * color[c] + (1.0 - alpha) * px[c] / 255.0);
        }
      }
    }
  }
  return frame;
}

void WritePpm(const FrameBuffer& frame, const std::filesystem::path& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw ConfigError("cannot open " + path.string());
  out << "P6\n" << frame.width << ' ' << frame.height << "\n255\n";
  out.write(reinterpret_cast<const char*>(frame.rgb.data()),
            static_cast<std::streamsize>(frame.rgb.size()));
  if (!out) throw ConfigError("failed writing " + path.string());
}

}  // namespace planar
