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

#ifndef PLANAR_DYNAMICS_NAMED_VIEW_H_
#define PLANAR_DYNAMICS_NAMED_VIEW_H_

#include <initializer_list>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "planar/common/error.h"
#include "planar/model/compiled_model.h"

namespace planar {

// Row-major view of a flat array whose rows are model elements and whose
// columns are labelled axes ("x", "y", "z") or a single unnamed column.
// Reads and writes go to the underlying storage.
template <typename T>
class NamedView {
 public:
  NamedView(std::span<T> data, const NameTable* names, int width)
      : data_(data), names_(names), width_(width) {}

  int rows() const { return names_->size(); }
  int width() const { return width_; }
  std::span<T> data() const { return data_; }

  std::span<T> row(int id) const {
    if (id < 0 || id >= rows()) {
      throw LookupError("row " + std::to_string(id) + " out of range");
    }
    return data_.subspan(static_cast<std::size_t>(id) * width_, width_);
  }
  std::span<T> row(std::string_view name) const { return row(names_->Id(name)); }

  // Single-column views only.
  T& operator[](std::string_view name) const {
    if (width_ != 1) throw ContractError("view has more than one column");
    return row(name)[0];
  }

  T& at(std::string_view name, std::string_view axis) const {
    return row(name)[AxisIndex(axis)];
  }

  std::vector<double> Select(std::string_view name,
                             std::initializer_list<std::string_view> axes) const {
    std::vector<double> out;
    const std::span<T> r = row(name);
    for (std::string_view axis : axes) out.push_back(r[AxisIndex(axis)]);
    return out;
  }

 private:
  int AxisIndex(std::string_view axis) const {
    int index = -1;
    if (axis == "x") index = 0;
    if (axis == "y") index = 1;
    if (axis == "z") index = 2;
    if (index < 0 || index >= width_) {
      throw LookupError("unknown axis '" + std::string(axis) + "'");
    }
    return index;
  }

  std::span<T> data_;
  const NameTable* names_;
  int width_;
};

}  // namespace planar

#endif  // PLANAR_DYNAMICS_NAMED_VIEW_H_
