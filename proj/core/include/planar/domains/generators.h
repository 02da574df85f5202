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

#ifndef PLANAR_DOMAINS_GENERATORS_H_
#define PLANAR_DOMAINS_GENERATORS_H_

#include <memory>
#include <string>
#include <string_view>
#include <vector>

#include "planar/model/compiled_model.h"

namespace planar {

// Contents of a model file shipped under models/ (compiled into the
// library). Throws LookupError for unknown names.
std::string_view ModelFile(std::string_view filename);
std::vector<std::string> ModelFileNames();
std::shared_ptr<const CompiledModel> LoadModelFile(std::string_view filename);

// k poles hinged serially on a sliding cart; k = 1 is cartpole.mjcf.xml.
// Throws ParameterError unless 1 <= k <= 8.
std::string CartKPoleXml(int k);
std::shared_ptr<const CompiledModel> GenerateCartKPole(int k);

// k capsule links with k - 1 actuated hinges on a planar free base
// (slides x, y and a hinge about z), drag on every link.
// Throws ParameterError unless 3 <= k <= 20.
std::string SwimmerXml(int k);
std::shared_ptr<const CompiledModel> GenerateSwimmer(int k);

// n unit masses on serially attached x slides (stiffness 1, damping 0.1),
// the first m of them actuated without control limits.
// Throws ParameterError unless 1 <= m <= n <= 20.
std::string LqrXml(int n, int m);
// Per-step cost of the lqr tasks is q'q + kLqrControlCost * u'u.
inline constexpr double kLqrControlCost = 0.1;
std::shared_ptr<const CompiledModel> GenerateLqr(int n, int m);

}  // namespace planar

#endif  // PLANAR_DOMAINS_GENERATORS_H_
