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

#ifndef PLANAR_MODEL_COMPILED_MODEL_H_
#define PLANAR_MODEL_COMPILED_MODEL_H_

#include <array>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include <Eigen/Core>

#include "planar/model/model_spec.h"

namespace planar {

enum class ObjectType { kBody, kJoint, kGeom, kSite, kActuator, kCamera };
inline constexpr int kNumObjectTypes = 6;

std::string_view ObjectTypeName(ObjectType type);
// Accepts "body", "joint", "geom", "site", "actuator", "camera".
ObjectType ObjectTypeFromName(std::string_view name);

// Bijection between element names and dense ids for one category. Unnamed
// elements occupy an id but cannot be looked up by name.
class NameTable {
 public:
  NameTable() = default;
  explicit NameTable(std::vector<std::string> names);

  int size() const { return static_cast<int>(names_.size()); }
  // Throws LookupError for unknown names.
  int Id(std::string_view name) const;
  // Returns -1 instead of throwing.
  int Find(std::string_view name) const;
  // Throws LookupError for out-of-range ids.
  const std::string& Name(int id) const;
  const std::vector<std::string>& names() const { return names_; }

  bool operator==(const NameTable& other) const {
    return names_ == other.names_;
  }

 private:
  std::vector<std::string> names_;
  std::unordered_map<std::string, int> index_;
};

// Immutable, index-ordered arrays produced by Compile(). All per-element
// quantities are expressed in the frame of the owning body; angles are in
// radians.
struct CompiledModel {
  std::string name;

  // options
  double timestep = 0.005;
  Eigen::Vector3d gravity = Eigen::Vector3d(0.0, 0.0, -9.81);
  Integrator integrator = Integrator::kSemiImplicitEuler;
  double drag_normal = 1.0;
  double drag_tangent = 0.1;

  int nq = 0;
  int nv = 0;
  int nu = 0;
  int nbody = 0;
  int njnt = 0;
  int ngeom = 0;
  int nsite = 0;
  int ncam = 0;

  // bodies
  std::vector<int> body_parent;
  std::vector<int> body_jntadr;
  std::vector<int> body_jntnum;
  std::vector<Eigen::Vector3d> body_pos;
  std::vector<Eigen::Vector4d> body_quat;
  std::vector<double> body_mass;
  std::vector<Eigen::Vector3d> body_ipos;     // centre of mass
  std::vector<Eigen::Matrix3d> body_inertia;  // about the centre of mass

  // joints (one dof each)
  std::vector<JointType> jnt_type;
  std::vector<int> jnt_body;
  std::vector<Eigen::Vector3d> jnt_pos;
  std::vector<Eigen::Vector3d> jnt_axis;  // unit length
  std::vector<bool> jnt_limited;
  std::vector<Eigen::Vector2d> jnt_range;
  std::vector<double> jnt_damping;
  std::vector<double> jnt_stiffness;
  std::vector<double> jnt_armature;
  std::vector<double> jnt_springref;
  // Penalty spring and damper engaged outside the range of limited joints.
  std::vector<double> jnt_limit_stiffness;
  std::vector<double> jnt_limit_damping;

  // dofs: dof i belongs to joint i; dof_parent is the previous dof on the
  // path to the root, or -1.
  std::vector<int> dof_body;
  std::vector<int> dof_parent;

  // geoms
  std::vector<GeomType> geom_type;
  std::vector<int> geom_body;
  std::vector<Eigen::Vector3d> geom_pos;
  std::vector<Eigen::Vector4d> geom_quat;
  std::vector<Eigen::Vector3d> geom_size;
  std::vector<Eigen::Vector4d> geom_rgba;
  std::vector<bool> geom_drag;

  // sites
  std::vector<int> site_body;
  std::vector<Eigen::Vector3d> site_pos;
  std::vector<double> site_size;
  std::vector<Eigen::Vector4d> site_rgba;

  // actuators: generalized force gear * ctrl on one dof
  std::vector<int> actuator_dof;
  std::vector<double> actuator_gear;
  std::vector<bool> actuator_ctrllimited;
  std::vector<Eigen::Vector2d> actuator_ctrlrange;

  // cameras
  std::vector<CameraPlane> cam_plane;
  std::vector<Eigen::Vector2d> cam_center;
  std::vector<double> cam_extent;

  std::array<NameTable, kNumObjectTypes> names;

  const NameTable& table(ObjectType type) const {
    return names[static_cast<int>(type)];
  }
  int Id(ObjectType type, std::string_view name) const {
    return table(type).Id(name);
  }
  const std::string& Name(ObjectType type, int id) const {
    return table(type).Name(id);
  }

  bool operator==(const CompiledModel&) const = default;
};

// Deterministic compilation in document order. The spec is assumed to come
// from ParseModel (or equivalent validation); structural problems that slipped
// through raise ConfigError.
CompiledModel Compile(const ModelSpec& spec);

}  // namespace planar

#endif  // PLANAR_MODEL_COMPILED_MODEL_H_
