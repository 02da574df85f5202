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

#include "planar/dynamics/integrators.h"

namespace planar {
namespace {

std::span<double> Span(Eigen::VectorXd& v) {
  return {v.data(), static_cast<std::size_t>(v.size())};
}
std::span<const double> ConstSpan(const Eigen::VectorXd& v) {
  return {v.data(), static_cast<std::size_t>(v.size())};
}
Eigen::Map<Eigen::VectorXd> Map(std::span<double> s) {
  return {s.data(), static_cast<Eigen::Index>(s.size())};
}

}  // namespace

IntegratorWorkspace::IntegratorWorkspace(const CompiledModel& model)
    : q0(model.nq),
      v0(model.nv),
      qs(model.nq),
      vs(model.nv),
      dq(model.nq),
      dv(model.nv),
      acc(model.nv) {}

void IntegrateSemiImplicit(DynamicsEvaluator& eval, std::span<double> q,
                           std::span<double> v, std::span<const double> ctrl,
                           double h, IntegratorWorkspace& ws) {
  eval.Accelerate(ctrl, Span(ws.acc));
  auto qm = Map(q);
  auto vm = Map(v);
  vm += h * ws.acc;
  qm += h * vm;
}

void IntegrateRk4(DynamicsEvaluator& eval, std::span<double> q,
                  std::span<double> v, std::span<const double> ctrl, double h,
                  IntegratorWorkspace& ws) {
  auto qm = Map(q);
  auto vm = Map(v);
  ws.q0 = qm;
  ws.v0 = vm;

  // stage 1 (eval already prepared at the start state)
  eval.Accelerate(ctrl, Span(ws.acc));
  ws.dq = ws.v0;
  ws.dv = ws.acc;
  ws.qs = ws.q0 + 0.5 * h * ws.v0;
  ws.vs = ws.v0 + 0.5 * h * ws.acc;

  constexpr double kWeight[3] = {2.0, 2.0, 1.0};
  for (int stage = 0; stage < 3; ++stage) {
    eval.Prepare(ConstSpan(ws.qs), ConstSpan(ws.vs));
    eval.Accelerate(ctrl, Span(ws.acc));
    ws.dq += kWeight[stage] * ws.vs;
    ws.dv += kWeight[stage] * ws.acc;
    if (stage < 2) {
      const double c = stage == 0 ? 0.5 : 1.0;
      ws.qs = ws.q0 + c * h * ws.vs;
      ws.vs = ws.v0 + c * h * ws.acc;
    }
  }
  qm = ws.q0 + (h / 6.0) * ws.dq;
  vm = ws.v0 + (h / 6.0) * ws.dv;
}

}  // namespace planar
