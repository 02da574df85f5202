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


#ifndef PLANAR_AGENTS_REPLAY_BUFFER_H_
#define PLANAR_AGENTS_REPLAY_BUFFER_H_

#include <cstdint>
#include <span>
#include <vector>

#include "planar/common/random.h"

namespace planar {

struct TransitionBatch {
  int size = 0;
  // row-major [size, dim]
  std::vector<double> observation;
  std::vector<double> action;
  std::vector<double> reward;
  std::vector<double> discount;
  std::vector<double> next_observation;
};

// Fixed-capacity FIFO ring of (s, a, r, discount, s') with uniform sampling.
// Storage grows lazily up to the capacity.
class ReplayBuffer {
 public:
  ReplayBuffer(int capacity, int observation_dim, int action_dim);

  void Add(std::span<const double> observation, std::span<const double> action,
           double reward, double discount,
           std::span<const double> next_observation);

  // Uniform with replacement. Throws ContractError when empty.
  void Sample(int batch_size, Rng& rng, TransitionBatch& out) const;
  std::vector<int> SampleIndices(int batch_size, Rng& rng) const;

  int size() const { return size_; }
  int capacity() const { return capacity_; }
  int observation_dim() const { return obs_dim_; }
  int action_dim() const { return act_dim_; }
  // Total transitions ever added.
  std::int64_t added() const { return added_; }

  // Stored transition at slot i (0 <= i < size()); slot order is physical.
  std::span<const double> observation(int i) const;
  std::span<const double> action(int i) const;
  double reward(int i) const { return reward_.at(i); }
  double discount(int i) const { return discount_.at(i); }
  std::span<const double> next_observation(int i) const;

  // Slot that the next Add() will write.
  int cursor() const { return cursor_; }

 private:
  int capacity_;
  int obs_dim_;
  int act_dim_;
  int size_ = 0;
  int cursor_ = 0;
  std::int64_t added_ = 0;
  std::vector<double> obs_;
  std::vector<double> act_;
  std::vector<double> reward_;
  std::vector<double> discount_;
  std::vector<double> next_obs_;
};

}  // namespace planar

#endif  // PLANAR_AGENTS_REPLAY_BUFFER_H_
