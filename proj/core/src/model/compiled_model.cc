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

#include "planar/model/compiled_model.h"

#include <cmath>
#include <numbers>
#include <string>
#include <utility>

#include <Eigen/Dense>

#include "planar/common/error.h"
#include "planar/dynamics/dynamics.h"
#include "planar/dynamics/kinematics.h"

namespace planar {
namespace {

constexpr std::string_view kObjectTypeNames[kNumObjectTypes] = {
    "body", "joint", "geom", "site", "actuator", "camera"};

// Limit springs oscillate with a period of this many physics steps.
constexpr double kLimitPeriodSteps = 20.0;

Eigen::Vector3d ToVec(const Vec3& v) { return {v[0], v[1], v[2]}; }
Eigen::Vector4d ToVec(const Vec4& v) { return {v[0], v[1], v[2], v[3]}; }

Eigen::Vector4d NormalizedQuat(const Vec4& quat) {
  Eigen::Vector4d q = ToVec(quat);
  QuatToMat(q);  // validates the norm
  return q / q.norm();
}

// Rotation taking +z onto the unit vector `dir`.
Eigen::Vector4d QuatFromZ(const Eigen::Vector3d& dir) {
  if (dir.z() < -1.0 + 1e-12) return {0.0, 1.0, 0.0, 0.0};
  Eigen::Vector4d q(1.0 + dir.z(), -dir.y(), dir.x(), 0.0);
  return q / q.norm();
}

struct MassProperties {
  double mass = 0.0;
  Eigen::Matrix3d inertia = Eigen::Matrix3d::Zero();  // about the geom centre
};

// Solid of uniform density in its own frame.
MassProperties GeomMass(GeomType type, const Eigen::Vector3d& size,
                        double density, std::optional<double> mass) {
  const double pi = std::numbers::pi;
  MassProperties out;
  double volume = 0.0;
  Eigen::Vector3d unit_inertia = Eigen::Vector3d::Zero();  // per unit mass
  switch (type) {
    case GeomType::kPlane:
      return out;
    case GeomType::kSphere: {
      const double r = size[0];
      volume = 4.0 / 3.0 * pi * r * r * r;
      unit_inertia.setConstant(0.4 * r * r);
      break;
    }
    case GeomType::kCapsule: {
      const double r = size[0];
      const double h = size[1];
      const double v_cyl = pi * r * r * 2.0 * h;
      const double v_sph = 4.0 / 3.0 * pi * r * r * r;
      volume = v_cyl + v_sph;
      const double axial = v_cyl * r * r / 2.0 + v_sph * 0.4 * r * r;
      const double transverse =
          v_cyl * (3.0 * r * r + 4.0 * h * h) / 12.0 +
          v_sph * (0.4 * r * r + h * h + 0.75 * r * h);
      unit_inertia << transverse / volume, transverse / volume, axial / volume;
      break;
    }
    case GeomType::kBox: {
      const double a = size[0], b = size[1], c = size[2];
      volume = 8.0 * a * b * c;
      unit_inertia << (b * b + c * c) / 3.0, (a * a + c * c) / 3.0,
          (a * a + b * b) / 3.0;
      break;
    }
  }
  out.mass = mass ? *mass : density * volume;
  out.inertia = (out.mass * unit_inertia).asDiagonal();
  return out;
}

Eigen::Matrix3d ParallelAxis(double mass, const Eigen::Vector3d& d) {
  return mass * (d.squaredNorm() * Eigen::Matrix3d::Identity() - d * d.transpose());
}

void CheckBody(int body, int nbody, const std::string& what) {
  if (body < 0 || body >= nbody) {
    throw ConfigError(what + " refers to missing body " + std::to_string(body));
  }
}

}  // namespace

std::string_view ObjectTypeName(ObjectType type) {
  return kObjectTypeNames[static_cast<int>(type)];
}

ObjectType ObjectTypeFromName(std::string_view name) {
  for (int i = 0; i < kNumObjectTypes; ++i) {
    if (kObjectTypeNames[i] == name) return static_cast<ObjectType>(i);
  }
  throw LookupError("unknown object type '" + std::string(name) + "'");
}

NameTable::NameTable(std::vector<std::string> names)
    : names_(std::move(names)) {
  for (int i = 0; i < size(); ++i) {
    if (names_[i].empty()) continue;
    if (!index_.emplace(names_[i], i).second) {
      throw ConfigError("duplicate name '" + names_[i] + "'");
    }
  }
}

int NameTable::Id(std::string_view name) const {
  const int id = Find(name);
  if (id < 0) throw LookupError("no element named '" + std::string(name) + "'");
  return id;
}

int NameTable::Find(std::string_view name) const {
  auto it = index_.find(std::string(name));
  return it == index_.end() ? -1 : it->second;
}

const std::string& NameTable::Name(int id) const {
  if (id < 0 || id >= size()) {
    throw LookupError("id " + std::to_string(id) + " out of range");
  }
  return names_[id];
}

CompiledModel Compile(const ModelSpec& spec) {
  CompiledModel m;
  m.name = spec.model;
  m.timestep = spec.option.timestep;
  m.gravity = ToVec(spec.option.gravity);
  m.integrator = spec.option.integrator;
  m.drag_normal = spec.option.drag[0];
  m.drag_tangent = spec.option.drag[1];
  if (!(m.timestep > 0.0)) throw ConfigError("timestep must be positive");

  // bodies
  m.nbody = static_cast<int>(spec.bodies.size());
  if (m.nbody == 0) throw ConfigError("model has no world body");
  std::vector<std::string> body_names;
  for (int b = 0; b < m.nbody; ++b) {
    const BodySpec& body = spec.bodies[b];
    if (b == 0 ? body.parent != -1 : (body.parent < 0 || body.parent >= b)) {
      throw ConfigError("body " + std::to_string(b) + " has invalid parent");
    }
    m.body_parent.push_back(body.parent);
    m.body_pos.push_back(ToVec(body.pos));
    m.body_quat.push_back(NormalizedQuat(body.quat));
    m.body_mass.push_back(0.0);
    m.body_ipos.push_back(Eigen::Vector3d::Zero());
    m.body_inertia.push_back(Eigen::Matrix3d::Zero());
    m.body_jntadr.push_back(0);
    m.body_jntnum.push_back(0);
    body_names.push_back(b == 0 && body.name.empty() ? "world" : body.name);
  }

  // joints, grouped by body
  m.njnt = m.nq = m.nv = static_cast<int>(spec.joints.size());
  std::vector<std::string> joint_names;
  for (int j = 0; j < m.njnt; ++j) {
    const JointSpec& joint = spec.joints[j];
    CheckBody(joint.body, m.nbody, "joint");
    if (joint.body == 0) throw ConfigError("joints cannot attach to world");
    if (j > 0 && joint.body < spec.joints[j - 1].body) {
      throw ConfigError("joints are not grouped by body");
    }
    if (m.body_jntnum[joint.body]++ == 0) m.body_jntadr[joint.body] = j;
    const Eigen::Vector3d axis = ToVec(joint.axis);
    if (!(axis.norm() > 1e-12)) throw ConfigError("joint axis is zero");
    m.jnt_type.push_back(joint.type);
    m.jnt_body.push_back(joint.body);
    m.jnt_pos.push_back(ToVec(joint.pos));
    m.jnt_axis.push_back(axis / axis.norm());
    m.jnt_limited.push_back(joint.limited);
    Eigen::Vector2d range = Eigen::Vector2d::Zero();
    if (joint.range) {
      range << (*joint.range)[0], (*joint.range)[1];
      if (joint.type == JointType::kHinge) range *= std::numbers::pi / 180.0;
    }
    m.jnt_range.push_back(range);
    m.jnt_damping.push_back(joint.damping);
    m.jnt_stiffness.push_back(joint.stiffness);
    m.jnt_armature.push_back(joint.armature);
    m.jnt_springref.push_back(joint.springref);
    m.jnt_limit_stiffness.push_back(0.0);
    m.jnt_limit_damping.push_back(0.0);
    m.dof_body.push_back(joint.body);
    joint_names.push_back(joint.name);
  }
  for (int j = 0; j < m.njnt; ++j) {
    const int b = m.jnt_body[j];
    int parent = -1;
    if (j > m.body_jntadr[b]) {
      parent = j - 1;
    } else {
      for (int a = m.body_parent[b]; a > 0; a = m.body_parent[a]) {
        if (m.body_jntnum[a] > 0) {
          parent = m.body_jntadr[a] + m.body_jntnum[a] - 1;
          break;
        }
      }
    }
    m.dof_parent.push_back(parent);
  }

  // geoms
  m.ngeom = static_cast<int>(spec.geoms.size());
  std::vector<std::string> geom_names;
  std::vector<std::vector<std::pair<Eigen::Vector3d, MassProperties>>>
      body_parts(m.nbody);
  for (const GeomSpec& geom : spec.geoms) {
    CheckBody(geom.body, m.nbody, "geom");
    Eigen::Vector3d pos = ToVec(geom.pos);
    Eigen::Vector4d quat = NormalizedQuat(geom.quat);
    Eigen::Vector3d size = Eigen::Vector3d::Zero();
    for (std::size_t i = 0; i < geom.size.size() && i < 3; ++i) {
      size[i] = geom.size[i];
    }
    if (geom.fromto) {
      const auto& ft = *geom.fromto;
      const Eigen::Vector3d from(ft[0], ft[1], ft[2]);
      const Eigen::Vector3d to(ft[3], ft[4], ft[5]);
      const Eigen::Vector3d d = to - from;
      if (!(d.norm() > 1e-12)) throw ConfigError("capsule fromto has zero length");
      pos = 0.5 * (from + to);
      quat = QuatFromZ(d / d.norm());
      size[1] = 0.5 * d.norm();
    }
    m.geom_type.push_back(geom.type);
    m.geom_body.push_back(geom.body);
    m.geom_pos.push_back(pos);
    m.geom_quat.push_back(quat);
    m.geom_size.push_back(size);
    m.geom_rgba.push_back(ToVec(geom.rgba));
    m.geom_drag.push_back(geom.drag);
    geom_names.push_back(geom.name);

    if (geom.body == 0 || spec.bodies[geom.body].inertial) continue;
    MassProperties part = GeomMass(geom.type, size, geom.density, geom.mass);
    const Eigen::Matrix3d rot = QuatToMat(quat);
    part.inertia = rot * part.inertia * rot.transpose();
    body_parts[geom.body].emplace_back(pos, part);
  }

  // body mass properties
  for (int b = 1; b < m.nbody; ++b) {
    if (const auto& inertial = spec.bodies[b].inertial) {
      m.body_mass[b] = inertial->mass;
      m.body_ipos[b] = ToVec(inertial->pos);
      m.body_inertia[b] = ToVec(inertial->diaginertia).asDiagonal();
      continue;
    }
    double mass = 0.0;
    Eigen::Vector3d com = Eigen::Vector3d::Zero();
    for (const auto& [pos, part] : body_parts[b]) {
      mass += part.mass;
      com += part.mass * pos;
    }
    if (mass > 0.0) com /= mass;
    Eigen::Matrix3d inertia = Eigen::Matrix3d::Zero();
    for (const auto& [pos, part] : body_parts[b]) {
      inertia += part.inertia + ParallelAxis(part.mass, pos - com);
    }
    m.body_mass[b] = mass;
    m.body_ipos[b] = com;
    m.body_inertia[b] = inertia;
  }

  // sites
  m.nsite = static_cast<int>(spec.sites.size());
  std::vector<std::string> site_names;
  for (const SiteSpec& site : spec.sites) {
    CheckBody(site.body, m.nbody, "site");
    m.site_body.push_back(site.body);
    m.site_pos.push_back(ToVec(site.pos));
    m.site_size.push_back(site.size);
    m.site_rgba.push_back(ToVec(site.rgba));
    site_names.push_back(site.name);
  }

  // actuators
  m.nu = static_cast<int>(spec.actuators.size());
  NameTable joint_table(joint_names);
  std::vector<std::string> actuator_names;
  for (const ActuatorSpec& actuator : spec.actuators) {
    const int dof = joint_table.Find(actuator.joint);
    if (dof < 0) {
      throw ConfigError("actuator refers to unknown joint '" + actuator.joint +
                        "'");
    }
    m.actuator_dof.push_back(dof);
    m.actuator_gear.push_back(actuator.gear);
    m.actuator_ctrllimited.push_back(actuator.ctrllimited);
    Eigen::Vector2d range = Eigen::Vector2d::Zero();
    if (actuator.ctrlrange) range << (*actuator.ctrlrange)[0], (*actuator.ctrlrange)[1];
    m.actuator_ctrlrange.push_back(range);
    actuator_names.push_back(actuator.name);
  }

  // cameras
  m.ncam = static_cast<int>(spec.cameras.size());
  std::vector<std::string> camera_names;
  for (const CameraSpec& camera : spec.cameras) {
    m.cam_plane.push_back(camera.plane);
    m.cam_center.emplace_back(camera.center[0], camera.center[1]);
    m.cam_extent.push_back(camera.extent);
    camera_names.push_back(camera.name);
  }

  m.names[static_cast<int>(ObjectType::kBody)] = NameTable(std::move(body_names));
  m.names[static_cast<int>(ObjectType::kJoint)] = std::move(joint_table);
  m.names[static_cast<int>(ObjectType::kGeom)] = NameTable(std::move(geom_names));
  m.names[static_cast<int>(ObjectType::kSite)] = NameTable(std::move(site_names));
  m.names[static_cast<int>(ObjectType::kActuator)] =
      NameTable(std::move(actuator_names));
  m.names[static_cast<int>(ObjectType::kCamera)] =
      NameTable(std::move(camera_names));

  // Limit springs scale with the effective inertia at the reference pose so
  // every limited joint rings at the same frequency.
  bool any_limited = false;
  for (int j = 0; j < m.njnt; ++j) any_limited = any_limited || m.jnt_limited[j];
  if (any_limited) {
    const std::vector<double> q0(m.nq, 0.0);
    // Effective inertia seen by each dof with the rest of the tree free.
    const Eigen::MatrixXd inv_mass = MassMatrix(m, q0).inverse();
    const double omega =
        2.0 * std::numbers::pi / (kLimitPeriodSteps * m.timestep);
    for (int j = 0; j < m.njnt; ++j) {
      if (!m.jnt_limited[j]) continue;
      const double inertia = 1.0 / inv_mass(j, j);
      m.jnt_limit_stiffness[j] = inertia * omega * omega;
      m.jnt_limit_damping[j] = 2.0 * inertia * omega;
    }
  }
  return m;
}

}  // namespace planar
