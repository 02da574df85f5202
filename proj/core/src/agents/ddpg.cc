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


#include "planar/agents/ddpg.h"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <fstream>
#include <iomanip>
#include <istream>
#include <ostream>
#include <sstream>

#include "planar/common/error.h"

namespace planar {
namespace {

constexpr std::string_view kMagic = "planar-ddpg-checkpoint";
constexpr int kVersion = 1;

template <typename Derived>
void WriteVector(std::ostream& out, std::string_view tag,
                 const Eigen::MatrixBase<Derived>& v) {
  out << tag << ' ' << v.size();
  out << std::hexfloat;
  for (Eigen::Index i = 0; i < v.size(); ++i) {
    out << ' ' << static_cast<double>(v(i));
  }
  out << std::defaultfloat << '\n';
}

void Expect(std::istream& in, std::string_view tag) {
  std::string word;
  if (!(in >> word) || word != tag) {
    throw ConfigError("checkpoint: expected '" + std::string(tag) + "', got '" +
                      word + "'");
  }
}

double ReadDouble(std::istream& in) {
  std::string word;
  if (!(in >> word)) throw ConfigError("checkpoint: truncated");
  char* end = nullptr;
  // istream >> double does not parse hexfloats in libstdc++
  const double value = std::strtod(word.c_str(), &end);
  if (end != word.c_str() + word.size()) {
    throw ConfigError("checkpoint: bad number '" + word + "'");
  }
  return value;
}

template <typename Scalar>
void ReadVector(std::istream& in, std::string_view tag,
                Eigen::Matrix<Scalar, Eigen::Dynamic, 1>& v) {
  Expect(in, tag);
  long n = 0;
  if (!(in >> n) || n != v.size()) {
    throw ConfigError("checkpoint: size mismatch for '" + std::string(tag) +
                      "'");
  }
  for (long i = 0; i < n; ++i) v(i) = static_cast<Scalar>(ReadDouble(in));
}

void SoftUpdate(const Mlp<float>& online, Mlp<float>& target, double tau) {
  const float t = static_cast<float>(tau);
  target.params() = t * online.params() + (1.0f - t) * target.params();
}

Mlp<float>::Options ActorOptions(int obs_dim, int act_dim,
                                 const std::vector<int>& hidden) {
  Mlp<float>::Options o;
  o.sizes.push_back(obs_dim);
  o.sizes.insert(o.sizes.end(), hidden.begin(), hidden.end());
  o.sizes.push_back(act_dim);
  o.hidden = Activation::kRelu;
  o.output = Activation::kTanh;
  return o;
}

Mlp<float>::Options CriticOptions(int obs_dim, int act_dim,
                                  const std::vector<int>& hidden) {
  Mlp<float>::Options o;
  o.sizes.push_back(obs_dim);
  o.sizes.insert(o.sizes.end(), hidden.begin(), hidden.end());
  o.sizes.push_back(1);
  o.hidden = Activation::kRelu;
  o.output = Activation::kLinear;
  o.inject_dim = act_dim;
  o.inject_layer = hidden.size() >= 2 ? 1 : 0;
  return o;
}

}  // namespace

void DdpgConfig::Validate() const {
  auto positive = [](double x, const char* what) {
    if (!(x > 0.0)) throw ParameterError(std::string(what) + " must be positive");
  };
  if (actor_hidden.empty() || critic_hidden.empty()) {
    throw ParameterError("networks need at least one hidden layer");
  }
  positive(actor_learning_rate, "actor_learning_rate");
  positive(critic_learning_rate, "critic_learning_rate");
  positive(tau, "tau");
  positive(batch_size, "batch_size");
  positive(replay_capacity, "replay_capacity");
  positive(updates_per_step, "updates_per_step");
  if (discount < 0.0 || discount > 1.0) {
    throw ParameterError("discount must lie in [0, 1]");
  }
  if (tau > 1.0) throw ParameterError("tau must be at most 1");
  if (min_replay_size < 0) throw ParameterError("min_replay_size < 0");
}

Ddpg::Ddpg(int observation_dim, const ArraySpec& action_spec,
           DdpgConfig config, std::uint64_t seed)
    : config_(std::move(config)),
      obs_dim_(observation_dim),
      act_dim_(action_spec.size()),
      rng_(seed),
      noise_(action_spec.size(), config_.noise),
      replay_(config_.replay_capacity, observation_dim, action_spec.size()) {
  config_.Validate();
  if (!action_spec.bounded()) {
    throw ParameterError("ddpg needs a bounded action spec");
  }
  minimum_ = *action_spec.minimum;
  maximum_ = *action_spec.maximum;
  center_.resize(act_dim_);
  half_range_.resize(act_dim_);
  for (int i = 0; i < act_dim_; ++i) {
    if (!std::isfinite(minimum_[i]) || !std::isfinite(maximum_[i])) {
      throw ParameterError("ddpg needs finite action bounds");
    }
    center_[i] = static_cast<Real>(0.5 * (minimum_[i] + maximum_[i]));
    half_range_[i] = static_cast<Real>(0.5 * (maximum_[i] - minimum_[i]));
  }
  actor_ = Net(ActorOptions(obs_dim_, act_dim_, config_.actor_hidden));
  critic_ = Net(CriticOptions(obs_dim_, act_dim_, config_.critic_hidden));
  actor_.InitFanIn(rng_, config_.final_layer_init);
  critic_.InitFanIn(rng_, config_.final_layer_init);
  target_actor_ = actor_;
  target_critic_ = critic_;
  actor_opt_ = Adam<Real>(actor_.num_params(),
                          {.learning_rate = config_.actor_learning_rate});
  critic_opt_ = Adam<Real>(critic_.num_params(),
                           {.learning_rate = config_.critic_learning_rate});
}

Ddpg::Matrix Ddpg::Columns(const std::vector<double>& rows, int batch,
                           int dim) const {
  // rows is [batch, dim] row-major, i.e. [dim, batch] column-major
  return Eigen::Map<const Eigen::MatrixXd>(rows.data(), dim, batch)
      .cast<Real>();
}

Ddpg::Matrix Ddpg::Scale(const Matrix& squashed) const {
  return (squashed.array().colwise() * half_range_.array()).colwise() +
         center_.array();
}

void Ddpg::BeginEpisode(bool explore) {
  if (explore) noise_.Reset();
}

std::vector<double> Ddpg::Policy(std::span<const double> observation) {
  if (static_cast<int>(observation.size()) != obs_dim_) {
    throw ContractError("ddpg observation size mismatch");
  }
  const Matrix x =
      Eigen::Map<const Eigen::VectorXd>(observation.data(), obs_dim_)
          .cast<Real>();
  const Matrix a = Scale(actor_.Forward(x));
  std::vector<double> out(act_dim_);
  for (int i = 0; i < act_dim_; ++i) out[i] = a(i, 0);
  return out;
}

double Ddpg::QValue(std::span<const double> observation,
                    std::span<const double> action) {
  const Matrix x =
      Eigen::Map<const Eigen::VectorXd>(observation.data(), obs_dim_)
          .cast<Real>();
  const Matrix a =
      Eigen::Map<const Eigen::VectorXd>(action.data(), act_dim_).cast<Real>();
  return critic_.Forward(x, a)(0, 0);
}

std::vector<double> Ddpg::Act(const Observation& observation, bool explore) {
  std::vector<double> action = Policy(Flatten(observation));
  if (explore) {
    const std::vector<double>& n = noise_.Sample(rng_);
    for (int i = 0; i < act_dim_; ++i) {
      action[i] = std::clamp(action[i] + n[i] * half_range_[i], minimum_[i],
                             maximum_[i]);
    }
  }
  return action;
}

void Ddpg::Observe(const Observation& observation,
                   std::span<const double> action, const TimeStep& next) {
  replay_.Add(Flatten(observation), action, next.reward.value_or(0.0),
              next.discount.value_or(1.0), Flatten(next.observation));
  if (replay_.size() < std::max(config_.min_replay_size, config_.batch_size)) {
    return;
  }
  for (int i = 0; i < config_.updates_per_step; ++i) Update();
}

DdpgUpdateStats Ddpg::Update() {
  replay_.Sample(config_.batch_size, rng_, batch_);
  return Update(batch_);
}

DdpgUpdateStats Ddpg::Update(const TransitionBatch& batch) {
  const int n = batch.size;
  if (n <= 0) throw ContractError("empty batch");
  const Matrix s = Columns(batch.observation, n, obs_dim_);
  const Matrix a = Columns(batch.action, n, act_dim_);
  const Matrix s_next = Columns(batch.next_observation, n, obs_dim_);

  // critic: regress Q(s, a) onto r + gamma * d * Q'(s', mu'(s'))
  const Matrix a_next = Scale(target_actor_.Forward(s_next));
  const Matrix q_next = target_critic_.Forward(s_next, a_next);
  Matrix target(1, n);
  for (int i = 0; i < n; ++i) {
    target(0, i) = static_cast<Real>(
        batch.reward[i] + config_.discount * batch.discount[i] * q_next(0, i));
  }
  const Matrix q = critic_.Forward(s, a);
  const Matrix err = q - target;
  DdpgUpdateStats stats;
  stats.critic_loss = err.squaredNorm() / n;
  critic_.ZeroGrad();
  critic_.Backward(err * (Real(2) / static_cast<Real>(n)));
  critic_opt_.Step(critic_.params(), critic_.grads());

  // actor: ascend mean Q(s, mu(s)) through the updated critic
  const Matrix squashed = actor_.Forward(s);
  const Matrix q_pi = critic_.Forward(s, Scale(squashed));
  stats.actor_objective = q_pi.mean();
  critic_.Backward(Matrix::Constant(1, n, Real(-1) / static_cast<Real>(n)));
  const Matrix da =
      critic_.extra_grad().array().colwise() * half_range_.array();
  actor_.ZeroGrad();
  actor_.Backward(da);
  if (config_.actor_grad_clip > 0.0) {
    const Real c = static_cast<Real>(config_.actor_grad_clip);
    actor_.grads() = actor_.grads().cwiseMax(-c).cwiseMin(c);
  }
  actor_opt_.Step(actor_.params(), actor_.grads());
  critic_.ZeroGrad();

  SoftUpdate(actor_, target_actor_, config_.tau);
  SoftUpdate(critic_, target_critic_, config_.tau);
  ++updates_;
  last_ = stats;
  return stats;
}

void Ddpg::Save(std::ostream& out) const {
  out << kMagic << ' ' << kVersion << '\n';
  out << "dims " << obs_dim_ << ' ' << act_dim_ << '\n';
  out << "updates " << updates_ << '\n';
  WriteVector(out, "actor", actor_.params());
  WriteVector(out, "critic", critic_.params());
  WriteVector(out, "target_actor", target_actor_.params());
  WriteVector(out, "target_critic", target_critic_.params());
  const Adam<Real>& aopt = actor_opt_;
  const Adam<Real>& copt = critic_opt_;
  out << "actor_adam_t " << aopt.step_count() << '\n';
  WriteVector(out, "actor_adam_m", aopt.first_moment());
  WriteVector(out, "actor_adam_v", aopt.second_moment());
  out << "critic_adam_t " << copt.step_count() << '\n';
  WriteVector(out, "critic_adam_m", copt.first_moment());
  WriteVector(out, "critic_adam_v", copt.second_moment());
  WriteVector(out, "noise", Eigen::Map<const Eigen::VectorXd>(
                                noise_.state().data(), act_dim_));
  out << "rng " << rng_ << '\n';
  out << "end\n";
}

void Ddpg::Load(std::istream& in) {
  Expect(in, kMagic);
  int version = 0;
  if (!(in >> version) || version != kVersion) {
    throw ConfigError("checkpoint: unsupported version");
  }
  Expect(in, "dims");
  int obs = 0, act = 0;
  in >> obs >> act;
  if (obs != obs_dim_ || act != act_dim_) {
    throw ConfigError("checkpoint: dimensions do not match this agent");
  }
  Expect(in, "updates");
  in >> updates_;
  ReadVector(in, "actor", actor_.params());
  ReadVector(in, "critic", critic_.params());
  ReadVector(in, "target_actor", target_actor_.params());
  ReadVector(in, "target_critic", target_critic_.params());
  long t = 0;
  Expect(in, "actor_adam_t");
  in >> t;
  actor_opt_.set_step_count(t);
  ReadVector(in, "actor_adam_m", actor_opt_.first_moment());
  ReadVector(in, "actor_adam_v", actor_opt_.second_moment());
  Expect(in, "critic_adam_t");
  in >> t;
  critic_opt_.set_step_count(t);
  ReadVector(in, "critic_adam_m", critic_opt_.first_moment());
  ReadVector(in, "critic_adam_v", critic_opt_.second_moment());
  Eigen::VectorXd noise(act_dim_);
  ReadVector(in, "noise", noise);
  noise_.mutable_state().assign(noise.data(), noise.data() + act_dim_);
  Expect(in, "rng");
  in >> rng_;
  Expect(in, "end");
  if (!in) throw ConfigError("checkpoint: malformed");
  last_.reset();
}

void Ddpg::SaveFile(const std::string& path) const {
  std::ofstream out(path);
  if (!out) throw ConfigError("cannot write '" + path + "'");
  Save(out);
}

void Ddpg::LoadFile(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot read '" + path + "'");
  Load(in);
}

}  // namespace planar
