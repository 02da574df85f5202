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

#ifndef PLANAR_ENV_ARRAY_H_
#define PLANAR_ENV_ARRAY_H_

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "planar/common/error.h"

namespace planar {

enum class DType { kFloat64, kUint8 };

std::string_view DTypeName(DType dtype);

// Dense row-major n-d array of doubles or bytes.
class Array {
 public:
  Array() = default;
  Array(std::vector<int> shape, std::vector<double> data);
  // Rank-1 array.
  explicit Array(std::vector<double> data);
  static Array Bytes(std::vector<int> shape, std::vector<std::uint8_t> data);

  DType dtype() const { return dtype_; }
  const std::vector<int>& shape() const { return shape_; }
  int size() const;

  // Throw ContractError on dtype mismatch.
  std::span<const double> doubles() const;
  std::span<double> mutable_doubles();
  std::span<const std::uint8_t> bytes() const;

  bool operator==(const Array& other) const = default;

 private:
  DType dtype_ = DType::kFloat64;
  std::vector<int> shape_ = {0};
  std::vector<double> doubles_;
  std::vector<std::uint8_t> bytes_;
};

// Shape, dtype and optional per-element bounds of an array.
struct ArraySpec {
  std::string name;
  std::vector<int> shape;
  DType dtype = DType::kFloat64;
  std::optional<std::vector<double>> minimum;  // one value per element
  std::optional<std::vector<double>> maximum;

  int size() const;
  bool bounded() const { return minimum.has_value() && maximum.has_value(); }
  // Throws ContractError if `array` does not conform (shape, dtype, bounds).
  void Validate(const Array& array) const;

  bool operator==(const ArraySpec& other) const = default;
};

ArraySpec MakeArraySpec(std::string name, std::vector<int> shape,
                        DType dtype = DType::kFloat64);
// Uniform scalar bounds broadcast to every element. Throws ParameterError if
// minimum > maximum.
ArraySpec MakeBoundedSpec(std::string name, std::vector<int> shape,
                          double minimum, double maximum);

// Insertion-ordered string map (observations keep the order in which the
// task assembled them).
template <typename T>
class OrderedMap {
 public:
  using value_type = std::pair<std::string, T>;

  void Set(const std::string& key, T value) {
    for (auto& [k, v] : items_) {
      if (k == key) {
        v = std::move(value);
        return;
      }
    }
    items_.emplace_back(key, std::move(value));
  }
  bool Contains(std::string_view key) const { return Find(key) != nullptr; }
  const T* Find(std::string_view key) const {
    for (const auto& [k, v] : items_) {
      if (k == key) return &v;
    }
    return nullptr;
  }
  const T& at(std::string_view key) const {
    if (const T* found = Find(key)) return *found;
    throw LookupError("no entry named '" + std::string(key) + "'");
  }
  bool Erase(std::string_view key) {
    for (auto it = items_.begin(); it != items_.end(); ++it) {
      if (it->first == key) {
        items_.erase(it);
        return true;
      }
    }
    return false;
  }
  std::vector<std::string> keys() const {
    std::vector<std::string> out;
    for (const auto& item : items_) out.push_back(item.first);
    return out;
  }
  int size() const { return static_cast<int>(items_.size()); }
  bool empty() const { return items_.empty(); }
  auto begin() const { return items_.begin(); }
  auto end() const { return items_.end(); }

  bool operator==(const OrderedMap& other) const = default;

 private:
  std::vector<value_type> items_;
};

using Observation = OrderedMap<Array>;
using ObservationSpec = OrderedMap<ArraySpec>;

// Concatenates every float64 entry in key order.
std::vector<double> Flatten(const Observation& observation);
// Total number of elements over all float64 entries.
int FlatSize(const ObservationSpec& spec);

}  // namespace planar

#endif  // PLANAR_ENV_ARRAY_H_
