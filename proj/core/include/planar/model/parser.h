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

#ifndef PLANAR_MODEL_PARSER_H_
#define PLANAR_MODEL_PARSER_H_

#include <memory>
#include <string>
#include <string_view>

#include "planar/model/compiled_model.h"
#include "planar/model/model_spec.h"

namespace planar {

// Parses the supported MJCF subset. Unknown elements or attributes, duplicate
// names, dangling references and malformed values raise ParseError with the
// offending source location. Defaults are applied for absent attributes.
//
// Supported layout:
//   <mujoco model="...">
//     <option timestep= gravity= integrator="Euler|RK4" drag="cn ct"/>
//     <worldbody>
//       <light name= pos=/>  <camera name= plane="xz|xy" center= extent=/>
//       <geom .../>  <site .../>
//       <body name= pos= quat=>
//         <inertial pos= mass= diaginertia=/>
//         <joint name= type="hinge|slide" pos= axis= range= limited=
//                damping= stiffness= armature= springref=/>
//         <geom name= type="plane|sphere|capsule|box" size= pos= quat=
//               fromto= rgba= mass= density= drag="true|false"/>
//         <site name= pos= size= rgba=/>
//         <body ...> ... </body>
//       </body>
//     </worldbody>
//     <actuator>
//       <motor name= joint= gear= ctrlrange= ctrllimited=/>
//     </actuator>
//   </mujoco>
ModelSpec ParseModel(std::string_view text);

// Reads a model file from disk.
ModelSpec ParseModelFile(const std::string& path);

// Canonical serialization: every attribute is written explicitly with full
// precision so that ParseModel(SerializeModel(s)) == s.
std::string SerializeModel(const ModelSpec& spec);

// Parse + compile in one call.
std::shared_ptr<const CompiledModel> LoadModel(std::string_view text);

}  // namespace planar

#endif  // PLANAR_MODEL_PARSER_H_
