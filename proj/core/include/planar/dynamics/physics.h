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

#ifndef PLANAR_DYNAMICS_PHYSICS_H_
#define PLANAR_DYNAMICS_PHYSICS_H_

#include <functional>
#include <memory>
#include <span>
#include <string_view>
#include <vector>

#include <Eigen/Core>

#include "planar/dynamics/dynamics.h"
#include "planar/dynamics/integrators.h"
#include "planar/dynamics/named_view.h"
#include "planar/model/compiled_model.h"

namespace planar {

// Simulation state of one model plus every quantity derived from it.
//
// Derived quantities (kinematics, body velocities, M, bias forces) always
// match the current (qpos, qvel): the only ways to change the state are
// Reset/Modify, which recompute them when the edit callback returns, SetState,
// and Step, which integrates and then recomputes them for the new state.
// Controls do not enter any derived quantity and may be set freely.
class Physics {
 public:
  struct State {
    std::vector<double> qpos;
    std::vector<double> qvel;
    std::vector<double> ctrl;
    double time = 0.0;
  };

  // Mutable access handed to Reset/Modify callbacks.
  class StateEditor {
   public:
    const CompiledModel& model() const { return physics_->model(); }
    std::span<double> qpos() { return physics_->qpos_; }
    std::span<double> qvel() { return physics_->qvel_; }
    std::span<double> ctrl() { return physics_->ctrl_; }
    NamedView<double> named_qpos();
    NamedView<double> named_qvel();
    NamedView<double> named_ctrl();
    void set_time(double time) { physics_->time_ = time; }
    // Per-instance geom placement in the owning body frame.
    void SetGeomPos(int geom, const Eigen::Vector3d& pos);
    void SetGeomSize(int geom, const Eigen::Vector3d& size);

   private:
    friend class Physics;
    explicit StateEditor(Physics* physics) : physics_(physics) {}
    Physics* physics_;
  };

  explicit Physics(std::shared_ptr<const CompiledModel> model);
  static Physics FromXml(std::string_view xml);

  const CompiledModel& model() const { return *model_; }
  const std::shared_ptr<const CompiledModel>& model_ptr() const {
    return model_;
  }

  double time() const { return time_; }
  double timestep() const { return model_->timestep; }
  std::span<const double> qpos() const { return qpos_; }
  std::span<const double> qvel() const { return qvel_; }
  std::span<const double> ctrl() const { return ctrl_; }
  // Effective acceleration of the most recent step ((v' - v) / h).
  std::span<const double> qacc() const { return qacc_; }

  NamedView<const double> named_qpos() const;
  NamedView<const double> named_qvel() const;
  NamedView<const double> named_ctrl() const;
  NamedView<const double> named_xpos() const;       // body origins
  NamedView<const double> named_geom_xpos() const;  // geom centres
  NamedView<const double> named_site_xpos() const;

  const Kinematics& kinematics() const { return eval_.kinematics(); }
  const std::vector<Vector6d>& body_velocities() const { return eval_.cvel(); }
  const Eigen::MatrixXd& mass_matrix() const { return eval_.mass_matrix(); }
  const Eigen::VectorXd& bias() const { return eval_.bias(); }
  double Energy() const { return eval_.Energy(); }

  const std::vector<Eigen::Vector3d>& geom_pos() const { return geom_pos_; }
  const std::vector<Eigen::Vector3d>& geom_size() const { return geom_size_; }

  // Zeroes the state and time, restores model geom placement, applies `edit`
  // and recomputes derived quantities.
  void Reset(const std::function<void(StateEditor&)>& edit = {});
  // Applies `edit` to the current state and recomputes derived quantities.
  void Modify(const std::function<void(StateEditor&)>& edit);

  void SetState(const State& state);
  State GetState() const;
  void SetControl(std::span<const double> ctrl);

  // Advances by one timestep. Throws SimulationDivergence when the new
  // state is not finite; the state is then left at the non-finite values.
  void Step();

 private:
  void Forward();

  std::shared_ptr<const CompiledModel> model_;
  std::vector<double> qpos_;
  std::vector<double> qvel_;
  std::vector<double> ctrl_;
  std::vector<double> qacc_;
  double time_ = 0.0;
  std::vector<Eigen::Vector3d> geom_pos_;
  std::vector<Eigen::Vector3d> geom_size_;
  DynamicsEvaluator eval_;
  IntegratorWorkspace workspace_;
};

}  // namespace planar

#endif  // PLANAR_DYNAMICS_PHYSICS_H_
