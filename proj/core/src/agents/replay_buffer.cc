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


#include "planar/agents/replay_buffer.h"

#include <algorithm>
#include <string>

#include "planar/common/error.h"

namespace planar {
namespace {

void Put(std::vector<double>& store, int slot, int dim,
         std::span<const double> values) {
  const std::size_t begin = static_cast<std::size_t>(slot) * dim;
  if (store.size() < begin + dim) store.resize(begin + dim);
  std::copy(values.begin(), values.end(), store.begin() + begin);
}

}  // namespace

ReplayBuffer::ReplayBuffer(int capacity, int observation_dim, int action_dim)
    : capacity_(capacity), obs_dim_(observation_dim), act_dim_(action_dim) {
  if (capacity <= 0 || observation_dim < 0 || action_dim < 0) {
    throw ParameterError("bad replay buffer dimensions");
  }
}

void ReplayBuffer::Add(std::span<const double> observation,
                       std::span<const double> action, double reward,
                       double discount,
                       std::span<const double> next_observation) {
  if (static_cast<int>(observation.size()) != obs_dim_ ||
      static_cast<int>(next_observation.size()) != obs_dim_ ||
      static_cast<int>(action.size()) != act_dim_) {
    throw ContractError("transition does not match replay dimensions");
  }
  Put(obs_, cursor_, obs_dim_, observation);
  Put(act_, cursor_, act_dim_, action);
  Put(next_obs_, cursor_, obs_dim_, next_observation);
  if (static_cast<int>(reward_.size()) <= cursor_) {
    reward_.resize(cursor_ + 1);
    discount_.resize(cursor_ + 1);
  }
  reward_[cursor_] = reward;
  discount_[cursor_] = discount;
  cursor_ = (cursor_ + 1) % capacity_;
  size_ = std::min(size_ + 1, capacity_);
  ++added_;
}

std::vector<int> ReplayBuffer::SampleIndices(int batch_size, Rng& rng) const {
  if (size_ == 0) throw ContractError("cannot sample an empty replay buffer");
  std::uniform_int_distribution<int> pick(0, size_ - 1);
  std::vector<int> out(batch_size);
  for (int& i : out) i = pick(rng);
  return out;
}

void ReplayBuffer::Sample(int batch_size, Rng& rng,
                          TransitionBatch& out) const {
  const std::vector<int> idx = SampleIndices(batch_size, rng);
  out.size = batch_size;
  out.observation.resize(static_cast<std::size_t>(batch_size) * obs_dim_);
  out.next_observation.resize(out.observation.size());
  out.action.resize(static_cast<std::size_t>(batch_size) * act_dim_);
  out.reward.resize(batch_size);
  out.discount.resize(batch_size);
  for (int b = 0; b < batch_size; ++b) {
    const int i = idx[b];
    std::copy_n(obs_.begin() + static_cast<std::size_t>(i) * obs_dim_, obs_dim_,
                out.observation.begin() + static_cast<std::size_t>(b) * obs_dim_);
    std::copy_n(next_obs_.begin() + static_cast<std::size_t>(i) * obs_dim_,
                obs_dim_,
                out.next_observation.begin() +
                    static_cast<std::size_t>(b) * obs_dim_);
    std::copy_n(act_.begin() + static_cast<std::size_t>(i) * act_dim_, act_dim_,
                out.action.begin() + static_cast<std::size_t>(b) * act_dim_);
    out.reward[b] = reward_[i];
    out.discount[b] = discount_[i];
  }
}

std::span<const double> ReplayBuffer::observation(int i) const {
  if (i < 0 || i >= size_) throw LookupError("replay slot out of range");
  return {obs_.data() + static_cast<std::size_t>(i) * obs_dim_,
          static_cast<std::size_t>(obs_dim_)};
}

std::span<const double> ReplayBuffer::action(int i) const {
  if (i < 0 || i >= size_) throw LookupError("replay slot out of range");
  return {act_.data() + static_cast<std::size_t>(i) * act_dim_,
          static_cast<std::size_t>(act_dim_)};
}

std::span<const double> ReplayBuffer::next_observation(int i) const {
  if (i < 0 || i >= size_) throw LookupError("replay slot out of range");
  return {next_obs_.data() + static_cast<std::size_t>(i) * obs_dim_,
          static_cast<std::size_t>(obs_dim_)};
}

}  // namespace planar
