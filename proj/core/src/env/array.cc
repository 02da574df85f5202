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

#include "planar/env/array.h"

#include <cmath>
#include <string>

#include "planar/common/error.h"

namespace planar {
namespace {

int Product(const std::vector<int>& shape) {
  int n = 1;
  for (int d : shape) {
    if (d < 0) throw ContractError("negative dimension in shape");
    n *= d;
  }
  return n;
}

std::string ShapeString(const std::vector<int>& shape) {
  std::string out = "[";
  for (std::size_t i = 0; i < shape.size(); ++i) {
    if (i) out += ", ";
    out += std::to_string(shape[i]);
  }
  return out + "]";
}

}  // namespace

std::string_view DTypeName(DType dtype) {
  return dtype == DType::kFloat64 ? "float64" : "uint8";
}

Array::Array(std::vector<int> shape, std::vector<double> data)
    : shape_(std::move(shape)), doubles_(std::move(data)) {
  if (Product(shape_) != static_cast<int>(doubles_.size())) {
    throw ContractError("array data does not match shape " +
                        ShapeString(shape_));
  }
}

Array::Array(std::vector<double> data)
    : shape_({static_cast<int>(data.size())}), doubles_(std::move(data)) {}

Array Array::Bytes(std::vector<int> shape, std::vector<std::uint8_t> data) {
  Array out;
  out.dtype_ = DType::kUint8;
  out.shape_ = std::move(shape);
  out.bytes_ = std::move(data);
  if (Product(out.shape_) != static_cast<int>(out.bytes_.size())) {
    throw ContractError("byte data does not match shape " +
                        ShapeString(out.shape_));
  }
  return out;
}

int Array::size() const { return Product(shape_); }

std::span<const double> Array::doubles() const {
  if (dtype_ != DType::kFloat64) throw ContractError("array is not float64");
  return doubles_;
}

std::span<double> Array::mutable_doubles() {
  if (dtype_ != DType::kFloat64) throw ContractError("array is not float64");
  return doubles_;
}

std::span<const std::uint8_t> Array::bytes() const {
  if (dtype_ != DType::kUint8) throw ContractError("array is not uint8");
  return bytes_;
}

int ArraySpec::size() const { return Product(shape); }

void ArraySpec::Validate(const Array& array) const {
  if (array.dtype() != dtype) {
    throw ContractError("'" + name + "' expects dtype " +
                        std::string(DTypeName(dtype)));
  }
  if (array.shape() != shape) {
    throw ContractError("'" + name + "' expects shape " + ShapeString(shape) +
                        ", got " + ShapeString(array.shape()));
  }
  if (dtype != DType::kFloat64) return;
  const auto values = array.doubles();
  for (int i = 0; i < size(); ++i) {
    if ((minimum && values[i] < (*minimum)[i]) ||
        (maximum && values[i] > (*maximum)[i])) {
      throw ContractError("'" + name + "' element " + std::to_string(i) +
                          " is out of bounds");
    }
  }
}

ArraySpec MakeArraySpec(std::string name, std::vector<int> shape,
                        DType dtype) {
  ArraySpec spec;
  spec.name = std::move(name);
  spec.shape = std::move(shape);
  spec.dtype = dtype;
  return spec;
}

ArraySpec MakeBoundedSpec(std::string name, std::vector<int> shape,
                          double minimum, double maximum) {
  if (!(minimum <= maximum)) {
    throw ParameterError("bounded spec requires minimum <= maximum");
  }
  ArraySpec spec = MakeArraySpec(std::move(name), std::move(shape));
  spec.minimum = std::vector<double>(spec.size(), minimum);
  spec.maximum = std::vector<double>(spec.size(), maximum);
  return spec;
}

std::vector<double> Flatten(const Observation& observation) {
  std::vector<double> out;
  for (const auto& [key, array] : observation) {
    if (array.dtype() != DType::kFloat64) continue;
    const auto values = array.doubles();
    out.insert(out.end(), values.begin(), values.end());
  }
  return out;
}

int FlatSize(const ObservationSpec& spec) {
  int n = 0;
  for (const auto& [key, s] : spec) {
    if (s.dtype == DType::kFloat64) n += s.size();
  }
  return n;
}

}  // namespace planar
