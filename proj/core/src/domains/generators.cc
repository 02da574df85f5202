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

#include "planar/domains/generators.h"

#include <sstream>
#include <string>

#include "planar/common/error.h"
#include "planar/domains/model_files.h"
#include "planar/model/parser.h"

namespace planar {
namespace {

void CheckRange(const char* what, int value, int lo, int hi) {
  if (value < lo || value > hi) {
    throw ParameterError(std::string(what) + " must lie in [" +
                         std::to_string(lo) + ", " + std::to_string(hi) +
                         "], got " + std::to_string(value));
  }
}

}  // namespace

std::string_view ModelFile(std::string_view filename) {
  for (const auto& [name, text] : internal::EmbeddedModelFiles()) {
    if (name == filename) return text;
  }
  throw LookupError("no model file named '" + std::string(filename) + "'");
}

std::vector<std::string> ModelFileNames() {
  std::vector<std::string> out;
  for (const auto& entry : internal::EmbeddedModelFiles()) {
    out.emplace_back(entry.first);
  }
  return out;
}

std::shared_ptr<const CompiledModel> LoadModelFile(std::string_view filename) {
  return LoadModel(ModelFile(filename));
}

std::string CartKPoleXml(int k) {
  CheckRange("number of poles", k, 1, 8);
  std::ostringstream x;
  x << "<mujoco model=\"cartpole\">\n"
    << "  <option timestep=\"0.005\" integrator=\"RK4\"/>\n"
    << "  <worldbody>\n"
    << "    <light name=\"light\" pos=\"0 0 " << 5 + k << "\"/>\n"
    << "    <camera name=\"fixed\" plane=\"xz\" center=\"0 1\" extent=\""
    << 2.0 * k + 2.4 << "\"/>\n"
    << "    <geom name=\"floor\" type=\"plane\" pos=\"0 0 " << 0.9 - k
    << "\" size=\"4 4 .2\" rgba=\".2 .3 .4 1\"/>\n"
    << "    <geom name=\"rail\" type=\"capsule\" fromto=\"-2 0 1 2 0 1\" "
       "size=\".02\" rgba=\".3 .4 .5 1\"/>\n"
    << "    <body name=\"cart\" pos=\"0 0 1\">\n"
    << "      <joint name=\"slider\" type=\"slide\" axis=\"1 0 0\" "
       "range=\"-1.8 1.8\" damping=\".0005\"/>\n"
    << "      <geom name=\"cart\" type=\"box\" size=\".2 .15 .1\" mass=\"1\" "
       "rgba=\".7 .5 .3 1\"/>\n";
  std::string indent = "      ";
  for (int i = 1; i <= k; ++i) {
    x << indent << "<body name=\"pole_" << i << "\""
      << (i > 1 ? " pos=\"0 0 1\"" : "") << ">\n"
      << indent << "  <joint name=\"hinge_" << i
      << "\" type=\"hinge\" axis=\"0 1 0\" damping=\"2e-06\"/>\n"
      << indent << "  <geom name=\"pole_" << i
      << "\" type=\"capsule\" fromto=\"0 0 0 0 0 1\" size=\".045\" "
         "mass=\".1\" rgba=\".5 .5 .7 1\"/>\n";
    indent += "  ";
  }
  for (int i = k; i >= 1; --i) {
    indent.resize(indent.size() - 2);
    x << indent << "</body>\n";
  }
  x << "    </body>\n"
    << "  </worldbody>\n"
    << "  <actuator>\n"
    << "    <motor name=\"slide\" joint=\"slider\" gear=\"10\" "
       "ctrlrange=\"-1 1\"/>\n"
    << "  </actuator>\n"
    << "</mujoco>\n";
  return x.str();
}

std::shared_ptr<const CompiledModel> GenerateCartKPole(int k) {
  return LoadModel(CartKPoleXml(k));
}

std::string SwimmerXml(int k) {
  CheckRange("number of links", k, 3, 20);
  std::ostringstream x;
  x << "<mujoco model=\"swimmer\">\n"
    << "  <option timestep=\"0.005\" integrator=\"Euler\" drag=\"1 .1\"/>\n"
    << "  <worldbody>\n"
    << "    <light name=\"light\" pos=\"0 0 3\"/>\n"
    << "    <camera name=\"fixed\" plane=\"xy\" center=\"0 0\" "
       "extent=\"5\"/>\n"
    << "    <geom name=\"ground\" type=\"plane\" size=\"2.5 2.5 .1\" "
       "rgba=\".2 .3 .4 1\"/>\n"
    << "    <geom name=\"target\" type=\"sphere\" pos=\"0 0 .05\" "
       "size=\".1\" rgba=\".6 .3 .3 .5\"/>\n"
    << "    <body name=\"head\" pos=\"0 0 .05\">\n"
    << "      <joint name=\"root_x\" type=\"slide\" axis=\"1 0 0\"/>\n"
    << "      <joint name=\"root_y\" type=\"slide\" axis=\"0 1 0\"/>\n"
    << "      <joint name=\"root_z\" type=\"hinge\" axis=\"0 0 1\"/>\n"
    << "      <geom name=\"head\" type=\"capsule\" fromto=\"0 0 0 -.1 0 0\" "
       "size=\".01\" drag=\"true\" rgba=\".8 .6 .3 1\"/>\n"
    << "      <site name=\"nose\" pos=\".01 0 0\" size=\".005\"/>\n";
  std::string indent = "      ";
  for (int i = 1; i < k; ++i) {
    x << indent << "<body name=\"segment_" << i << "\" pos=\"-.1 0 0\">\n"
      << indent << "  <joint name=\"joint_" << i
      << "\" type=\"hinge\" axis=\"0 0 1\" range=\"-100 100\" "
         "damping=\"1e-4\"/>\n"
      << indent << "  <geom name=\"segment_" << i
      << "\" type=\"capsule\" fromto=\"0 0 0 -.1 0 0\" size=\".01\" "
         "drag=\"true\" rgba=\".7 .5 .3 1\"/>\n";
    indent += "  ";
  }
  for (int i = k - 1; i >= 1; --i) {
    indent.resize(indent.size() - 2);
    x << indent << "</body>\n";
  }
  x << "    </body>\n"
    << "  </worldbody>\n"
    << "  <actuator>\n";
  for (int i = 1; i < k; ++i) {
    x << "    <motor name=\"motor_" << i << "\" joint=\"joint_" << i
      << "\" gear=\"5e-3\" ctrlrange=\"-1 1\"/>\n";
  }
  x << "  </actuator>\n"
    << "</mujoco>\n";
  return x.str();
}

std::shared_ptr<const CompiledModel> GenerateSwimmer(int k) {
  return LoadModel(SwimmerXml(k));
}

std::string LqrXml(int n, int m) {
  CheckRange("number of masses", n, 1, 20);
  CheckRange("number of actuators", m, 1, n);
  std::ostringstream x;
  x << "<mujoco model=\"lqr\">\n"
    << "  <option timestep=\"0.005\" integrator=\"Euler\"/>\n"
    << "  <worldbody>\n"
    << "    <light name=\"light\" pos=\"0 0 3\"/>\n"
    << "    <camera name=\"fixed\" plane=\"xz\" center=\"" << 0.5 * (n - 1)
    << " 0\" extent=\"" << n + 3 << "\"/>\n";
  std::string indent = "    ";
  for (int i = 0; i < n; ++i) {
    x << indent << "<body name=\"mass_" << i << "\""
      << (i > 0 ? " pos=\"1 0 0\"" : "") << ">\n"
      << indent << "  <joint name=\"joint_" << i
      << "\" type=\"slide\" axis=\"1 0 0\" stiffness=\"1\" damping=\".1\"/>\n"
      << indent << "  <geom name=\"mass_" << i
      << "\" type=\"sphere\" size=\".2\" mass=\"1\" rgba=\""
      << (i < m ? ".7 .5 .3 1" : ".5 .5 .7 1") << "\"/>\n";
    indent += "  ";
  }
  for (int i = n - 1; i >= 0; --i) {
    indent.resize(indent.size() - 2);
    x << indent << "</body>\n";
  }
  x << "  </worldbody>\n"
    << "  <actuator>\n";
  for (int i = 0; i < m; ++i) {
    x << "    <motor name=\"motor_" << i << "\" joint=\"joint_" << i
      << "\" gear=\"1\"/>\n";
  }
  x << "  </actuator>\n"
    << "</mujoco>\n";
  return x.str();
}

std::shared_ptr<const CompiledModel> GenerateLqr(int n, int m) {
  return LoadModel(LqrXml(n, m));
}

}  // namespace planar
