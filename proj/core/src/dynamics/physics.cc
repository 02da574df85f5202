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

#include "planar/dynamics/physics.h"

#include <algorithm>
#include <cmath>
#include <sstream>
#include <string>
#include <utility>

#include "planar/common/error.h"
#include "planar/model/parser.h"

namespace planar {
namespace {

const NameTable& Table(const CompiledModel& m, ObjectType type) {
  return m.table(type);
}

std::span<const double> Flat(const std::vector<Eigen::Vector3d>& v) {
  return {v.empty() ? nullptr : v.front().data(), 3 * v.size()};
}

}  // namespace

NamedView<double> Physics::StateEditor::named_qpos() {
  return {physics_->qpos_, &Table(model(), ObjectType::kJoint), 1};
}
NamedView<double> Physics::StateEditor::named_qvel() {
  return {physics_->qvel_, &Table(model(), ObjectType::kJoint), 1};
}
NamedView<double> Physics::StateEditor::named_ctrl() {
  return {physics_->ctrl_, &Table(model(), ObjectType::kActuator), 1};
}

void Physics::StateEditor::SetGeomPos(int geom, const Eigen::Vector3d& pos) {
  physics_->geom_pos_.at(geom) = pos;
}

void Physics::StateEditor::SetGeomSize(int geom, const Eigen::Vector3d& size) {
  physics_->geom_size_.at(geom) = size;
}

Physics::Physics(std::shared_ptr<const CompiledModel> model)
    : model_(std::move(model)),
      qpos_(model_->nq, 0.0),
      qvel_(model_->nv, 0.0),
      ctrl_(model_->nu, 0.0),
      qacc_(model_->nv, 0.0),
      geom_pos_(model_->geom_pos),
      geom_size_(model_->geom_size),
      eval_(*model_),
      workspace_(*model_) {
  Forward();
}

Physics Physics::FromXml(std::string_view xml) {
  return Physics(LoadModel(xml));
}

NamedView<const double> Physics::named_qpos() const {
  return {qpos_, &Table(*model_, ObjectType::kJoint), 1};
}
NamedView<const double> Physics::named_qvel() const {
  return {qvel_, &Table(*model_, ObjectType::kJoint), 1};
}
NamedView<const double> Physics::named_ctrl() const {
  return {ctrl_, &Table(*model_, ObjectType::kActuator), 1};
}
NamedView<const double> Physics::named_xpos() const {
  return {Flat(kinematics().xpos), &Table(*model_, ObjectType::kBody), 3};
}
NamedView<const double> Physics::named_geom_xpos() const {
  return {Flat(kinematics().geom_xpos), &Table(*model_, ObjectType::kGeom), 3};
}
NamedView<const double> Physics::named_site_xpos() const {
  return {Flat(kinematics().site_xpos), &Table(*model_, ObjectType::kSite), 3};
}

void Physics::Reset(const std::function<void(StateEditor&)>& edit) {
  std::fill(qpos_.begin(), qpos_.end(), 0.0);
  std::fill(qvel_.begin(), qvel_.end(), 0.0);
  std::fill(ctrl_.begin(), ctrl_.end(), 0.0);
  std::fill(qacc_.begin(), qacc_.end(), 0.0);
  time_ = 0.0;
  geom_pos_ = model_->geom_pos;
  geom_size_ = model_->geom_size;
  Modify(edit);
}

void Physics::Modify(const std::function<void(StateEditor&)>& edit) {
  if (edit) {
    StateEditor editor(this);
    edit(editor);
  }
  Forward();
}

void Physics::SetState(const State& state) {
  if (state.qpos.size() != qpos_.size() || state.qvel.size() != qvel_.size() ||
      state.ctrl.size() != ctrl_.size()) {
    throw ContractError("state size does not match the model");
  }
  qpos_ = state.qpos;
  qvel_ = state.qvel;
  ctrl_ = state.ctrl;
  time_ = state.time;
  Forward();
}

Physics::State Physics::GetState() const {
  return {qpos_, qvel_, ctrl_, time_};
}

void Physics::SetControl(std::span<const double> ctrl) {
  if (ctrl.size() != ctrl_.size()) {
    throw ContractError("expected " + std::to_string(ctrl_.size()) +
                        " controls, got " + std::to_string(ctrl.size()));
  }
  std::copy(ctrl.begin(), ctrl.end(), ctrl_.begin());
}

void Physics::Forward() {
  eval_.Prepare(qpos_, qvel_, true, geom_pos_);
}

void Physics::Step() {
  const double h = model_->timestep;
  if (model_->integrator == Integrator::kRk4) {
    IntegrateRk4(eval_, qpos_, qvel_, ctrl_, h, workspace_);
  } else {
    IntegrateSemiImplicit(eval_, qpos_, qvel_, ctrl_, h, workspace_);
  }
  const Eigen::VectorXd& acc = model_->integrator == Integrator::kRk4
                                   ? (workspace_.dv /= 6.0)
                                   : workspace_.acc;
  std::copy(acc.data(), acc.data() + model_->nv, qacc_.begin());
  time_ += h;
  auto finite = [](double x) { return std::isfinite(x); };
  if (!std::all_of(qpos_.begin(), qpos_.end(), finite) ||
      !std::all_of(qvel_.begin(), qvel_.end(), finite)) {
    std::ostringstream msg;
    msg << "non-finite state at t=" << time_ << " in model '" << model_->name
        << "'";
    throw SimulationDivergence(msg.str());
  }
  Forward();
}

}  // namespace planar
