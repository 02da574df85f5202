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

#include "planar/model/parser.h"

#include <expat.h>

#include <algorithm>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <memory>
#include <set>
#include <sstream>
#include <unordered_map>
#include <unordered_set>
#include <utility>
#include <vector>

#include "planar/common/error.h"

namespace planar {
namespace {

// Minimal element tree captured from expat callbacks.
struct XmlElement {
  std::string tag;
  std::vector<std::pair<std::string, std::string>> attributes;
  std::vector<std::unique_ptr<XmlElement>> children;
  SourceLocation location;
};

struct TreeBuilder {
  XML_Parser parser = nullptr;
  std::unique_ptr<XmlElement> root;
  std::vector<XmlElement*> stack;
  std::string error;
  SourceLocation error_location;
};

SourceLocation CurrentLocation(XML_Parser parser) {
  return {static_cast<int>(XML_GetCurrentLineNumber(parser)),
          static_cast<int>(XML_GetCurrentColumnNumber(parser)) + 1};
}

void XMLCALL OnStart(void* data, const XML_Char* name,
                     const XML_Char** attributes) {
  auto* builder = static_cast<TreeBuilder*>(data);
  auto element = std::make_unique<XmlElement>();
  element->tag = name;
  element->location = CurrentLocation(builder->parser);
  for (int i = 0; attributes[i] != nullptr; i += 2) {
    element->attributes.emplace_back(attributes[i], attributes[i + 1]);
  }
  XmlElement* raw = element.get();
  if (builder->stack.empty()) {
    builder->root = std::move(element);
  } else {
    builder->stack.back()->children.push_back(std::move(element));
  }
  builder->stack.push_back(raw);
}

void XMLCALL OnEnd(void* data, const XML_Char*) {
  static_cast<TreeBuilder*>(data)->stack.pop_back();
}

void XMLCALL OnText(void* data, const XML_Char* text, int length) {
  auto* builder = static_cast<TreeBuilder*>(data);
  if (!builder->error.empty()) return;
  for (int i = 0; i < length; ++i) {
    const char c = text[i];
    if (c != ' ' && c != '\t' && c != '\n' && c != '\r') {
      builder->error = "unexpected text content";
      builder->error_location = CurrentLocation(builder->parser);
      XML_StopParser(builder->parser, XML_FALSE);
      return;
    }
  }
}

std::unique_ptr<XmlElement> ParseXml(std::string_view text) {
  TreeBuilder builder;
  std::unique_ptr<std::remove_pointer_t<XML_Parser>, void (*)(XML_Parser)>
      parser(XML_ParserCreate("UTF-8"), XML_ParserFree);
  builder.parser = parser.get();
  XML_SetUserData(parser.get(), &builder);
  XML_SetElementHandler(parser.get(), OnStart, OnEnd);
  XML_SetCharacterDataHandler(parser.get(), OnText);
  const XML_Status status = XML_Parse(
      parser.get(), text.data(), static_cast<int>(text.size()), XML_TRUE);
  if (!builder.error.empty()) {
    throw ParseError(builder.error, builder.error_location.line,
                     builder.error_location.column);
  }
  if (status != XML_STATUS_OK) {
    const SourceLocation loc = CurrentLocation(parser.get());
    throw ParseError(XML_ErrorString(XML_GetErrorCode(parser.get())),
                     loc.line, loc.column);
  }
  if (!builder.root) throw ParseError("empty document", 1, 1);
  return std::move(builder.root);
}

[[noreturn]] void Fail(const XmlElement& element, const std::string& message) {
  throw ParseError("<" + element.tag + ">: " + message,
                   element.location.line, element.location.column);
}

// Attribute access with strict checking: every attribute present on the
// element must be consumed, otherwise it is reported as unknown.
class Attributes {
 public:
  explicit Attributes(const XmlElement& element) : element_(element) {}

  const std::string* Get(std::string_view key) {
    for (const auto& [name, value] : element_.attributes) {
      if (name == key) {
        consumed_.insert(name);
        return &value;
      }
    }
    return nullptr;
  }

  std::string String(std::string_view key, std::string fallback = "") {
    const std::string* value = Get(key);
    return value ? *value : fallback;
  }

  std::vector<double> Numbers(std::string_view key) {
    const std::string* value = Get(key);
    if (!value) return {};
    std::vector<double> out;
    const char* p = value->data();
    const char* end = p + value->size();
    while (p < end) {
      while (p < end && (*p == ' ' || *p == '\t' || *p == '\n' || *p == '\r')) {
        ++p;
      }
      if (p == end) break;
      const char* start = p;
      while (p < end && *p != ' ' && *p != '\t' && *p != '\n' && *p != '\r') {
        ++p;
      }
      // strtod accepts the leading '.' style used throughout MJCF ("-.5").
      std::string token(start, p);
      char* parsed_end = nullptr;
      const double number = std::strtod(token.c_str(), &parsed_end);
      if (parsed_end != token.c_str() + token.size() || !std::isfinite(number)) {
        Fail(element_, "attribute '" + std::string(key) +
                           "' has malformed number '" + token + "'");
      }
      out.push_back(number);
    }
    return out;
  }

  template <std::size_t N>
  std::optional<std::array<double, N>> Fixed(std::string_view key) {
    if (!Get(key)) return std::nullopt;
    std::vector<double> values = Numbers(key);
    if (values.size() != N) {
      Fail(element_, "attribute '" + std::string(key) + "' expects " +
                         std::to_string(N) + " numbers, got " +
                         std::to_string(values.size()));
    }
    std::array<double, N> out;
    for (std::size_t i = 0; i < N; ++i) out[i] = values[i];
    return out;
  }

  std::optional<double> Scalar(std::string_view key) {
    auto value = Fixed<1>(key);
    if (!value) return std::nullopt;
    return (*value)[0];
  }

  std::optional<bool> Bool(std::string_view key) {
    const std::string* value = Get(key);
    if (!value) return std::nullopt;
    if (*value == "true") return true;
    if (*value == "false") return false;
    Fail(element_, "attribute '" + std::string(key) +
                       "' must be 'true' or 'false'");
  }

  void CheckAllConsumed() const {
    for (const auto& [name, value] : element_.attributes) {
      if (!consumed_.count(name)) {
        Fail(element_, "unknown attribute '" + name + "'");
      }
    }
  }

 private:
  const XmlElement& element_;
  std::set<std::string> consumed_;
};

class ModelReader {
 public:
  ModelSpec Read(const XmlElement& root) {
    if (root.tag != "mujoco") Fail(root, "root element must be <mujoco>");
    Attributes attrs(root);
    spec_.model = attrs.String("model", "model");
    attrs.CheckAllConsumed();

    BodySpec world;
    world.name = "world";
    world.location = root.location;
    spec_.bodies.push_back(world);
    RegisterName(body_names_, "world", root, "body");

    bool seen_option = false;
    bool seen_worldbody = false;
    bool seen_actuator = false;
    for (const auto& child : root.children) {
      if (child->tag == "option") {
        if (seen_option) Fail(*child, "duplicate <option>");
        seen_option = true;
        ReadOption(*child);
      } else if (child->tag == "worldbody") {
        if (seen_worldbody) Fail(*child, "duplicate <worldbody>");
        seen_worldbody = true;
        Attributes(*child).CheckAllConsumed();
        ReadBodyContents(*child, 0);
      } else if (child->tag == "actuator") {
        if (seen_actuator) Fail(*child, "duplicate <actuator>");
        seen_actuator = true;
        Attributes(*child).CheckAllConsumed();
        for (const auto& motor : child->children) ReadMotor(*motor);
      } else {
        Fail(*child, "unknown element");
      }
    }
    // Elements are grouped by owning body (body order, then document order),
    // matching how the compiler lays out its arrays.
    auto by_body = [](const auto& a, const auto& b) { return a.body < b.body; };
    std::stable_sort(spec_.joints.begin(), spec_.joints.end(), by_body);
    std::stable_sort(spec_.geoms.begin(), spec_.geoms.end(), by_body);
    std::stable_sort(spec_.sites.begin(), spec_.sites.end(), by_body);
    std::stable_sort(spec_.lights.begin(), spec_.lights.end(), by_body);
    return std::move(spec_);
  }

 private:
  void RegisterName(std::unordered_set<std::string>& names,
                    const std::string& name, const XmlElement& element,
                    const char* category) {
    if (name.empty()) return;
    if (!names.insert(name).second) {
      Fail(element, std::string("duplicate ") + category + " name '" + name +
                        "'");
    }
  }

  void ReadOption(const XmlElement& element) {
    if (!element.children.empty()) Fail(element, "unexpected child element");
    Attributes attrs(element);
    OptionSpec& option = spec_.option;
    if (auto h = attrs.Scalar("timestep")) {
      if (!(*h > 0.0)) Fail(element, "timestep must be positive");
      option.timestep = *h;
    }
    if (auto g = attrs.Fixed<3>("gravity")) option.gravity = *g;
    if (const std::string* integrator = attrs.Get("integrator")) {
      if (*integrator == "Euler") {
        option.integrator = Integrator::kSemiImplicitEuler;
      } else if (*integrator == "RK4") {
        option.integrator = Integrator::kRk4;
      } else {
        Fail(element, "integrator must be 'Euler' or 'RK4'");
      }
    }
    if (auto drag = attrs.Fixed<2>("drag")) {
      if ((*drag)[0] < 0.0 || (*drag)[1] < 0.0) {
        Fail(element, "drag coefficients must be non-negative");
      }
      option.drag = *drag;
    }
    attrs.CheckAllConsumed();
  }

  // Reads the children of <worldbody> or <body>.
  void ReadBodyContents(const XmlElement& element, int body) {
    for (const auto& child : element.children) {
      const std::string& tag = child->tag;
      if (tag == "body") {
        ReadBody(*child, body);
      } else if (tag == "joint") {
        if (body == 0) Fail(*child, "joints cannot attach to the world body");
        ReadJoint(*child, body);
      } else if (tag == "geom") {
        ReadGeom(*child, body);
      } else if (tag == "site") {
        ReadSite(*child, body);
      } else if (tag == "inertial") {
        if (body == 0) Fail(*child, "the world body has no inertial");
        if (spec_.bodies[body].inertial) Fail(*child, "duplicate <inertial>");
        ReadInertial(*child, body);
      } else if (tag == "camera") {
        if (body != 0) Fail(*child, "cameras must be declared in <worldbody>");
        ReadCamera(*child);
      } else if (tag == "light") {
        ReadLight(*child, body);
      } else {
        Fail(*child, "unknown element");
      }
    }
  }

  void ReadBody(const XmlElement& element, int parent) {
    Attributes attrs(element);
    BodySpec body;
    body.name = attrs.String("name");
    RegisterName(body_names_, body.name, element, "body");
    body.parent = parent;
    if (auto pos = attrs.Fixed<3>("pos")) body.pos = *pos;
    if (auto quat = attrs.Fixed<4>("quat")) body.quat = *quat;
    body.location = element.location;
    attrs.CheckAllConsumed();
    const int id = static_cast<int>(spec_.bodies.size());
    spec_.bodies.push_back(body);
    ReadBodyContents(element, id);
  }

  void ReadInertial(const XmlElement& element, int body) {
    if (!element.children.empty()) Fail(element, "unexpected child element");
    Attributes attrs(element);
    InertialSpec inertial;
    if (auto pos = attrs.Fixed<3>("pos")) inertial.pos = *pos;
    auto mass = attrs.Scalar("mass");
    if (!mass) Fail(element, "missing required attribute 'mass'");
    if (*mass < 0.0) Fail(element, "mass must be non-negative");
    inertial.mass = *mass;
    if (auto inertia = attrs.Fixed<3>("diaginertia")) {
      for (double value : *inertia) {
        if (value < 0.0) Fail(element, "diaginertia must be non-negative");
      }
      inertial.diaginertia = *inertia;
    }
    attrs.CheckAllConsumed();
    spec_.bodies[body].inertial = inertial;
  }

  void ReadJoint(const XmlElement& element, int body) {
    if (!element.children.empty()) Fail(element, "unexpected child element");
    Attributes attrs(element);
    JointSpec joint;
    joint.name = attrs.String("name");
    RegisterName(joint_names_, joint.name, element, "joint");
    joint.body = body;
    const std::string type = attrs.String("type", "hinge");
    if (type == "hinge") {
      joint.type = JointType::kHinge;
    } else if (type == "slide") {
      joint.type = JointType::kSlide;
    } else {
      Fail(element, "unsupported joint type '" + type + "'");
    }
    if (auto pos = attrs.Fixed<3>("pos")) joint.pos = *pos;
    if (auto axis = attrs.Fixed<3>("axis")) {
      const double norm = std::sqrt((*axis)[0] * (*axis)[0] +
                                    (*axis)[1] * (*axis)[1] +
                                    (*axis)[2] * (*axis)[2]);
      if (norm < 1e-10) Fail(element, "joint axis must be non-zero");
      joint.axis = *axis;
    }
    joint.range = attrs.Fixed<2>("range");
    if (joint.range && (*joint.range)[0] > (*joint.range)[1]) {
      Fail(element, "range lower bound exceeds upper bound");
    }
    joint.limited = attrs.Bool("limited").value_or(joint.range.has_value());
    if (joint.limited && !joint.range) {
      Fail(element, "limited joint requires a range");
    }
    joint.damping = attrs.Scalar("damping").value_or(0.0);
    joint.stiffness = attrs.Scalar("stiffness").value_or(0.0);
    joint.armature = attrs.Scalar("armature").value_or(0.0);
    joint.springref = attrs.Scalar("springref").value_or(0.0);
    if (joint.damping < 0.0 || joint.stiffness < 0.0 || joint.armature < 0.0) {
      Fail(element, "damping, stiffness and armature must be non-negative");
    }
    joint.location = element.location;
    attrs.CheckAllConsumed();
    spec_.joints.push_back(joint);
  }

  void ReadGeom(const XmlElement& element, int body) {
    if (!element.children.empty()) Fail(element, "unexpected child element");
    Attributes attrs(element);
    GeomSpec geom;
    geom.name = attrs.String("name");
    RegisterName(geom_names_, geom.name, element, "geom");
    geom.body = body;
    const std::string type = attrs.String("type", "sphere");
    std::size_t size_count = 0;
    if (type == "plane") {
      geom.type = GeomType::kPlane;
      size_count = 3;
    } else if (type == "sphere") {
      geom.type = GeomType::kSphere;
      size_count = 1;
    } else if (type == "capsule") {
      geom.type = GeomType::kCapsule;
      size_count = 2;
    } else if (type == "box") {
      geom.type = GeomType::kBox;
      size_count = 3;
    } else {
      Fail(element, "unsupported geom type '" + type + "'");
    }
    geom.fromto = attrs.Fixed<6>("fromto");
    if (geom.fromto && geom.type != GeomType::kCapsule) {
      Fail(element, "fromto is only supported for capsules");
    }
    if (geom.fromto) size_count = 1;
    geom.size = attrs.Numbers("size");
    if (geom.size.size() != size_count) {
      Fail(element, type + " geom expects " + std::to_string(size_count) +
                        " size values, got " +
                        std::to_string(geom.size.size()));
    }
    for (double s : geom.size) {
      if (!(s > 0.0)) Fail(element, "geom sizes must be positive");
    }
    if (auto pos = attrs.Fixed<3>("pos")) geom.pos = *pos;
    if (auto quat = attrs.Fixed<4>("quat")) geom.quat = *quat;
    if (geom.fromto && (attrs.Get("pos") || attrs.Get("quat"))) {
      Fail(element, "fromto cannot be combined with pos or quat");
    }
    if (auto rgba = attrs.Fixed<4>("rgba")) geom.rgba = *rgba;
    geom.mass = attrs.Scalar("mass");
    if (geom.mass && *geom.mass < 0.0) Fail(element, "mass must be >= 0");
    geom.density = attrs.Scalar("density").value_or(1000.0);
    if (geom.density < 0.0) Fail(element, "density must be >= 0");
    geom.drag = attrs.Bool("drag").value_or(false);
    if (geom.drag && geom.type != GeomType::kCapsule) {
      Fail(element, "drag is only supported for capsules");
    }
    geom.location = element.location;
    attrs.CheckAllConsumed();
    spec_.geoms.push_back(geom);
  }

  void ReadSite(const XmlElement& element, int body) {
    if (!element.children.empty()) Fail(element, "unexpected child element");
    Attributes attrs(element);
    SiteSpec site;
    site.name = attrs.String("name");
    RegisterName(site_names_, site.name, element, "site");
    site.body = body;
    if (auto pos = attrs.Fixed<3>("pos")) site.pos = *pos;
    if (auto size = attrs.Scalar("size")) {
      if (!(*size > 0.0)) Fail(element, "site size must be positive");
      site.size = *size;
    }
    if (auto rgba = attrs.Fixed<4>("rgba")) site.rgba = *rgba;
    site.location = element.location;
    attrs.CheckAllConsumed();
    spec_.sites.push_back(site);
  }

  void ReadCamera(const XmlElement& element) {
    if (!element.children.empty()) Fail(element, "unexpected child element");
    Attributes attrs(element);
    CameraSpec camera;
    camera.name = attrs.String("name");
    RegisterName(camera_names_, camera.name, element, "camera");
    const std::string plane = attrs.String("plane", "xz");
    if (plane == "xz") {
      camera.plane = CameraPlane::kXZ;
    } else if (plane == "xy") {
      camera.plane = CameraPlane::kXY;
    } else {
      Fail(element, "camera plane must be 'xz' or 'xy'");
    }
    if (auto center = attrs.Fixed<2>("center")) camera.center = *center;
    if (auto extent = attrs.Scalar("extent")) {
      if (!(*extent > 0.0)) Fail(element, "camera extent must be positive");
      camera.extent = *extent;
    }
    camera.location = element.location;
    attrs.CheckAllConsumed();
    spec_.cameras.push_back(camera);
  }

  void ReadLight(const XmlElement& element, int body) {
    if (!element.children.empty()) Fail(element, "unexpected child element");
    Attributes attrs(element);
    LightSpec light;
    light.name = attrs.String("name");
    RegisterName(light_names_, light.name, element, "light");
    light.body = body;
    if (auto pos = attrs.Fixed<3>("pos")) light.pos = *pos;
    light.location = element.location;
    attrs.CheckAllConsumed();
    spec_.lights.push_back(light);
  }

  void ReadMotor(const XmlElement& element) {
    if (element.tag != "motor") Fail(element, "unknown element");
    if (!element.children.empty()) Fail(element, "unexpected child element");
    Attributes attrs(element);
    ActuatorSpec actuator;
    actuator.name = attrs.String("name");
    RegisterName(actuator_names_, actuator.name, element, "actuator");
    actuator.joint = attrs.String("joint");
    if (actuator.joint.empty()) Fail(element, "missing required 'joint'");
    if (!joint_names_.count(actuator.joint)) {
      Fail(element, "unknown joint '" + actuator.joint + "'");
    }
    actuator.gear = attrs.Scalar("gear").value_or(1.0);
    actuator.ctrlrange = attrs.Fixed<2>("ctrlrange");
    if (actuator.ctrlrange &&
        (*actuator.ctrlrange)[0] > (*actuator.ctrlrange)[1]) {
      Fail(element, "ctrlrange lower bound exceeds upper bound");
    }
    actuator.ctrllimited =
        attrs.Bool("ctrllimited").value_or(actuator.ctrlrange.has_value());
    if (actuator.ctrllimited && !actuator.ctrlrange) {
      Fail(element, "ctrllimited actuator requires a ctrlrange");
    }
    actuator.location = element.location;
    attrs.CheckAllConsumed();
    spec_.actuators.push_back(actuator);
  }

  ModelSpec spec_;
  std::unordered_set<std::string> body_names_;
  std::unordered_set<std::string> joint_names_;
  std::unordered_set<std::string> geom_names_;
  std::unordered_set<std::string> site_names_;
  std::unordered_set<std::string> camera_names_;
  std::unordered_set<std::string> light_names_;
  std::unordered_set<std::string> actuator_names_;
};

// Shortest representation that round-trips exactly.
std::string Num(double value) {
  char buffer[64];
  auto result = std::to_chars(buffer, buffer + sizeof(buffer), value);
  return std::string(buffer, result.ptr);
}

template <typename Container>
std::string Nums(const Container& values) {
  std::string out;
  for (double v : values) {
    if (!out.empty()) out += ' ';
    out += Num(v);
  }
  return out;
}

std::string Bool(bool value) { return value ? "true" : "false"; }

std::string Escape(const std::string& text) {
  std::string out;
  for (char c : text) {
    switch (c) {
      case '&': out += "&amp;"; break;
      case '<': out += "&lt;"; break;
      case '>': out += "&gt;"; break;
      case '"': out += "&quot;"; break;
      default: out += c;
    }
  }
  return out;
}

const char* GeomTypeName(GeomType type) {
  switch (type) {
    case GeomType::kPlane: return "plane";
    case GeomType::kSphere: return "sphere";
    case GeomType::kCapsule: return "capsule";
    case GeomType::kBox: return "box";
  }
  return "sphere";
}

class Serializer {
 public:
  explicit Serializer(const ModelSpec& spec) : spec_(spec) {}

  std::string Run() {
    const OptionSpec& o = spec_.option;
    out_ << "<mujoco model=\"" << Escape(spec_.model) << "\">\n";
    out_ << "  <option timestep=\"" << Num(o.timestep) << "\" gravity=\""
         << Nums(o.gravity) << "\" integrator=\""
         << (o.integrator == Integrator::kRk4 ? "RK4" : "Euler")
         << "\" drag=\"" << Nums(o.drag) << "\"/>\n";
    out_ << "  <worldbody>\n";
    for (const CameraSpec& c : spec_.cameras) {
      out_ << "    <camera name=\"" << Escape(c.name) << "\" plane=\""
           << (c.plane == CameraPlane::kXZ ? "xz" : "xy") << "\" center=\""
           << Nums(c.center) << "\" extent=\"" << Num(c.extent) << "\"/>\n";
    }
    WriteContents(0, 2);
    out_ << "  </worldbody>\n";
    if (!spec_.actuators.empty()) {
      out_ << "  <actuator>\n";
      for (const ActuatorSpec& a : spec_.actuators) {
        out_ << "    <motor name=\"" << Escape(a.name) << "\" joint=\""
             << Escape(a.joint) << "\" gear=\"" << Num(a.gear) << "\"";
        if (a.ctrlrange) out_ << " ctrlrange=\"" << Nums(*a.ctrlrange) << "\"";
        out_ << " ctrllimited=\"" << Bool(a.ctrllimited) << "\"/>\n";
      }
      out_ << "  </actuator>\n";
    }
    out_ << "</mujoco>\n";
    return out_.str();
  }

 private:
  void WriteContents(int body, int depth) {
    const std::string pad(2 * depth, ' ');
    if (body != 0 && spec_.bodies[body].inertial) {
      const InertialSpec& in = *spec_.bodies[body].inertial;
      out_ << pad << "<inertial pos=\"" << Nums(in.pos) << "\" mass=\""
           << Num(in.mass) << "\" diaginertia=\"" << Nums(in.diaginertia)
           << "\"/>\n";
    }
    for (const LightSpec& l : spec_.lights) {
      if (l.body != body) continue;
      out_ << pad << "<light name=\"" << Escape(l.name) << "\" pos=\""
           << Nums(l.pos) << "\"/>\n";
    }
    for (const JointSpec& j : spec_.joints) {
      if (j.body != body) continue;
      out_ << pad << "<joint name=\"" << Escape(j.name) << "\" type=\""
           << (j.type == JointType::kHinge ? "hinge" : "slide") << "\" pos=\""
           << Nums(j.pos) << "\" axis=\"" << Nums(j.axis) << "\"";
      if (j.range) out_ << " range=\"" << Nums(*j.range) << "\"";
      out_ << " limited=\"" << Bool(j.limited) << "\" damping=\""
           << Num(j.damping) << "\" stiffness=\"" << Num(j.stiffness)
           << "\" armature=\"" << Num(j.armature) << "\" springref=\""
           << Num(j.springref) << "\"/>\n";
    }
    for (const GeomSpec& g : spec_.geoms) {
      if (g.body != body) continue;
      out_ << pad << "<geom name=\"" << Escape(g.name) << "\" type=\""
           << GeomTypeName(g.type) << "\" size=\"" << Nums(g.size) << "\"";
      if (g.fromto) {
        out_ << " fromto=\"" << Nums(*g.fromto) << "\"";
      } else {
        out_ << " pos=\"" << Nums(g.pos) << "\" quat=\"" << Nums(g.quat)
             << "\"";
      }
      out_ << " rgba=\"" << Nums(g.rgba) << "\"";
      if (g.mass) out_ << " mass=\"" << Num(*g.mass) << "\"";
      out_ << " density=\"" << Num(g.density) << "\" drag=\"" << Bool(g.drag)
           << "\"/>\n";
    }
    for (const SiteSpec& s : spec_.sites) {
      if (s.body != body) continue;
      out_ << pad << "<site name=\"" << Escape(s.name) << "\" pos=\""
           << Nums(s.pos) << "\" size=\"" << Num(s.size) << "\" rgba=\""
           << Nums(s.rgba) << "\"/>\n";
    }
    for (std::size_t child = 1; child < spec_.bodies.size(); ++child) {
      const BodySpec& b = spec_.bodies[child];
      if (b.parent != body) continue;
      out_ << pad << "<body name=\"" << Escape(b.name) << "\" pos=\""
           << Nums(b.pos) << "\" quat=\"" << Nums(b.quat) << "\">\n";
      WriteContents(static_cast<int>(child), depth + 1);
      out_ << pad << "</body>\n";
    }
  }

  const ModelSpec& spec_;
  std::ostringstream out_;
};

}  // namespace

ModelSpec ParseModel(std::string_view text) {
  std::unique_ptr<XmlElement> root = ParseXml(text);
  return ModelReader().Read(*root);
}

ModelSpec ParseModelFile(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ConfigError("cannot open model file '" + path + "'");
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return ParseModel(buffer.str());
}

std::string SerializeModel(const ModelSpec& spec) {
  return Serializer(spec).Run();
}

std::shared_ptr<const CompiledModel> LoadModel(std::string_view text) {
  return std::make_shared<const CompiledModel>(Compile(ParseModel(text)));
}

}  // namespace planar
