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

#ifndef PLANAR_MODEL_MODEL_SPEC_H_
#define PLANAR_MODEL_MODEL_SPEC_H_

#include <array>
#include <optional>
#include <string>
#include <vector>

namespace planar {

using Vec2 = std::array<double, 2>;
using Vec3 = std::array<double, 3>;
using Vec4 = std::array<double, 4>;

enum class JointType { kHinge, kSlide };
enum class GeomType { kPlane, kSphere, kCapsule, kBox };
enum class Integrator { kSemiImplicitEuler, kRk4 };
enum class CameraPlane { kXZ, kXY };

// Where an element was declared. Locations never take part in equality, so a
// re-parsed canonical serialization compares equal to the original.
struct SourceLocation {
  int line = 0;
  int column = 0;
  bool operator==(const SourceLocation&) const { return true; }
};

struct OptionSpec {
  double timestep = 0.005;
  Vec3 gravity = {0.0, 0.0, -9.81};
  Integrator integrator = Integrator::kSemiImplicitEuler;
  // Fluid drag coefficients per unit link length (normal, tangential).
  Vec2 drag = {1.0, 0.1};
  bool operator==(const OptionSpec&) const = default;
};

struct InertialSpec {
  Vec3 pos = {0.0, 0.0, 0.0};
  double mass = 0.0;
  Vec3 diaginertia = {0.0, 0.0, 0.0};
  bool operator==(const InertialSpec&) const = default;
};

// Body 0 is the world body; every other body has a parent with a smaller
// index (document order).
struct BodySpec {
  std::string name;
  int parent = -1;
  Vec3 pos = {0.0, 0.0, 0.0};
  Vec4 quat = {1.0, 0.0, 0.0, 0.0};  // w, x, y, z
  std::optional<InertialSpec> inertial;
  SourceLocation location;
  bool operator==(const BodySpec&) const = default;
};

struct JointSpec {
  std::string name;
  int body = 0;
  JointType type = JointType::kHinge;
  Vec3 pos = {0.0, 0.0, 0.0};
  Vec3 axis = {0.0, 0.0, 1.0};
  std::optional<Vec2> range;  // degrees for hinges, metres for slides
  bool limited = false;
  double damping = 0.0;
  double stiffness = 0.0;
  double armature = 0.0;
  double springref = 0.0;
  SourceLocation location;
  bool operator==(const JointSpec&) const = default;
};

struct GeomSpec {
  std::string name;
  int body = 0;
  GeomType type = GeomType::kSphere;
  std::vector<double> size;
  Vec3 pos = {0.0, 0.0, 0.0};
  Vec4 quat = {1.0, 0.0, 0.0, 0.0};
  std::optional<std::array<double, 6>> fromto;
  Vec4 rgba = {0.5, 0.5, 0.5, 1.0};
  std::optional<double> mass;
  double density = 1000.0;
  bool drag = false;
  SourceLocation location;
  bool operator==(const GeomSpec&) const = default;
};

struct SiteSpec {
  std::string name;
  int body = 0;
  Vec3 pos = {0.0, 0.0, 0.0};
  double size = 0.01;
  Vec4 rgba = {0.5, 0.5, 0.5, 1.0};
  SourceLocation location;
  bool operator==(const SiteSpec&) const = default;
};

struct ActuatorSpec {
  std::string name;
  std::string joint;
  double gear = 1.0;
  std::optional<Vec2> ctrlrange;
  bool ctrllimited = false;
  SourceLocation location;
  bool operator==(const ActuatorSpec&) const = default;
};

// Orthographic viewport onto one of the world coordinate planes.
struct CameraSpec {
  std::string name;
  CameraPlane plane = CameraPlane::kXZ;
  Vec2 center = {0.0, 0.0};
  double extent = 2.0;  // visible width in metres
  SourceLocation location;
  bool operator==(const CameraSpec&) const = default;
};

struct LightSpec {
  std::string name;
  int body = 0;
  Vec3 pos = {0.0, 0.0, 0.0};
  SourceLocation location;
  bool operator==(const LightSpec&) const = default;
};

struct ModelSpec {
  std::string model;
  OptionSpec option;
  std::vector<BodySpec> bodies;  // bodies[0] is "world"
  std::vector<JointSpec> joints;
  std::vector<GeomSpec> geoms;
  std::vector<SiteSpec> sites;
  std::vector<ActuatorSpec> actuators;
  std::vector<CameraSpec> cameras;
  std::vector<LightSpec> lights;
  bool operator==(const ModelSpec&) const = default;
};

}  // namespace planar

#endif  // PLANAR_MODEL_MODEL_SPEC_H_
