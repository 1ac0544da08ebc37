// Copyright 2026 The agvpath Authors
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

#include "agvpath/layout.hpp"

#include <cmath>
#include <cstdlib>
#include <fstream>
#include <numbers>
#include <set>
#include <sstream>

#include <nlohmann/json.hpp>

#include "agvpath/errors.hpp"
#include "agvpath/motion.hpp"

namespace agvpath {

namespace {

using Json = nlohmann::ordered_json;

constexpr double kDegree = std::numbers::pi / 180.0;

const std::set<std::string> kModeTypes = {
    "tangential", "crab", "differential", "exponential_delayed",
    "exponential_anticipated"};

std::string Index(const std::string& loc, std::size_t i) {
  return loc + "[" + std::to_string(i) + "]";
}

void ExpectObject(const Json& j, const std::string& loc,
                  const std::set<std::string>& allowed) {
  if (!j.is_object()) throw LayoutError(loc, "expected an object");
  for (const auto& [key, value] : j.items()) {
    if (!allowed.count(key)) {
      throw LayoutError(loc + "." + key, "unknown field");
    }
  }
}

const Json& Field(const Json& obj, const std::string& key,
                  const std::string& loc) {
  auto it = obj.find(key);
  if (it == obj.end()) throw LayoutError(loc + "." + key, "missing field");
  return *it;
}

double Number(const Json& j, const std::string& loc) {
  if (!j.is_number()) throw LayoutError(loc, "expected a number");
  const double v = j.get<double>();
  if (!std::isfinite(v)) throw LayoutError(loc, "expected a finite number");
  return v;
}

double Positive(const Json& j, const std::string& loc) {
  const double v = Number(j, loc);
  if (!(v > 0.0)) throw LayoutError(loc, "must be > 0");
  return v;
}

std::string Text(const Json& j, const std::string& loc) {
  if (!j.is_string()) throw LayoutError(loc, "expected a string");
  std::string s = j.get<std::string>();
  if (s.empty()) throw LayoutError(loc, "must not be empty");
  return s;
}

std::array<double, 2> Pair(const Json& j, const std::string& loc) {
  if (!j.is_array() || j.size() != 2) {
    throw LayoutError(loc, "expected [x, y]");
  }
  return {Number(j[0], loc + "[0]"), Number(j[1], loc + "[1]")};
}

const Json& Array(const Json& j, const std::string& loc) {
  if (!j.is_array()) throw LayoutError(loc, "expected an array");
  return j;
}

LayoutMode ParseMode(const Json& j, const std::string& loc) {
  ExpectObject(j, loc, {"type", "alpha_deg", "n"});
  LayoutMode m;
  m.type = Text(Field(j, "type", loc), loc + ".type");
  if (!kModeTypes.count(m.type)) {
    throw LayoutError(loc + ".type", "unknown mode '" + m.type + "'");
  }
  if (j.contains("alpha_deg")) {
    m.alpha_deg = Number(j["alpha_deg"], loc + ".alpha_deg");
  } else if (m.type != "differential") {
    throw LayoutError(loc + ".alpha_deg", "missing field");
  }
  const bool exponential = m.type.rfind("exponential", 0) == 0;
  if (exponential) {
    m.n = Number(Field(j, "n", loc), loc + ".n");
    if (!(*m.n > 1.0)) throw LayoutError(loc + ".n", "n must exceed 1");
  } else if (j.contains("n")) {
    throw LayoutError(loc + ".n", "only exponential modes take n");
  }
  return m;
}

LayoutDocument FromJson(const Json& root) {
  const std::string loc = "$";
  ExpectObject(root, loc, {"schema_version", "vehicle", "segments",
                           "junctions", "tolerances", "annotations"});
  LayoutDocument doc;
  const Json& version = Field(root, "schema_version", loc);
  if (!version.is_number_integer() ||
      version.get<int>() != kLayoutSchemaVersion) {
    throw LayoutError("$.schema_version",
                      "unsupported schema version (expected " +
                          std::to_string(kLayoutSchemaVersion) + ")");
  }

  const Json& vehicle = Field(root, "vehicle", loc);
  ExpectObject(vehicle, "$.vehicle", {"wheels"});
  const Json& wheels = Array(Field(vehicle, "wheels", "$.vehicle"),
                             "$.vehicle.wheels");
  if (wheels.empty()) throw LayoutError("$.vehicle.wheels", "no wheels");
  std::set<std::string> wheel_ids;
  for (std::size_t i = 0; i < wheels.size(); ++i) {
    const std::string wl = Index("$.vehicle.wheels", i);
    const Json& w = wheels[i];
    ExpectObject(w, wl, {"id", "position", "v_max", "omega_max_degps"});
    LayoutWheel wheel;
    wheel.id = Text(Field(w, "id", wl), wl + ".id");
    if (!wheel_ids.insert(wheel.id).second) {
      throw LayoutError(wl + ".id", "duplicate wheel id '" + wheel.id + "'");
    }
    wheel.position = Pair(Field(w, "position", wl), wl + ".position");
    wheel.v_max = Positive(Field(w, "v_max", wl), wl + ".v_max");
    wheel.omega_max_degps =
        Positive(Field(w, "omega_max_degps", wl), wl + ".omega_max_degps");
    doc.wheels.push_back(wheel);
  }

  const Json& segments = Array(Field(root, "segments", loc), "$.segments");
  if (segments.empty()) throw LayoutError("$.segments", "no segments");
  std::set<std::string> segment_ids;
  for (std::size_t i = 0; i < segments.size(); ++i) {
    const std::string sl = Index("$.segments", i);
    const Json& s = segments[i];
    ExpectObject(s, sl, {"id", "control_points", "mode", "v_max"});
    LayoutSegment seg;
    seg.id = Text(Field(s, "id", sl), sl + ".id");
    if (!segment_ids.insert(seg.id).second) {
      throw LayoutError(sl + ".id", "duplicate segment id '" + seg.id + "'");
    }
    const std::string cl = sl + ".control_points";
    const Json& points = Array(Field(s, "control_points", sl), cl);
    if (points.size() < 2) {
      throw LayoutError(cl, "need at least 2 control points (degree >= 1)");
    }
    for (std::size_t k = 0; k < points.size(); ++k) {
      seg.control_points.push_back(Pair(points[k], Index(cl, k)));
    }
    seg.mode = ParseMode(Field(s, "mode", sl), sl + ".mode");
    seg.v_max = Positive(Field(s, "v_max", sl), sl + ".v_max");
    doc.segments.push_back(seg);
  }

  if (root.contains("junctions")) {
    const Json& js = Array(root["junctions"], "$.junctions");
    std::set<std::string> ids;
    for (std::size_t i = 0; i < js.size(); ++i) {
      const std::string jl = Index("$.junctions", i);
      ExpectObject(js[i], jl, {"id", "from", "to"});
      LayoutJunction junction;
      junction.id = Text(Field(js[i], "id", jl), jl + ".id");
      if (!ids.insert(junction.id).second) {
        throw LayoutError(jl + ".id", "duplicate junction id");
      }
      junction.from = Text(Field(js[i], "from", jl), jl + ".from");
      junction.to = Text(Field(js[i], "to", jl), jl + ".to");
      for (const auto& [key, ref] :
           {std::pair{"from", junction.from}, std::pair{"to", junction.to}}) {
        if (!segment_ids.count(ref)) {
          throw LayoutError(jl + "." + key, "unknown segment '" + ref + "'");
        }
      }
      if (junction.from == junction.to) {
        throw LayoutError(jl, "a junction needs two different segments");
      }
      doc.junctions.push_back(junction);
    }
  }

  if (root.contains("tolerances")) {
    const Json& t = root["tolerances"];
    const std::string tl = "$.tolerances";
    ExpectObject(t, tl, {"position", "angle_deg", "relative"});
    LayoutTolerances tol;
    if (t.contains("position")) {
      tol.position = Positive(t["position"], tl + ".position");
    }
    if (t.contains("angle_deg")) {
      tol.angle_deg = Positive(t["angle_deg"], tl + ".angle_deg");
    }
    if (t.contains("relative")) {
      tol.relative = Positive(t["relative"], tl + ".relative");
    }
    doc.tolerances = tol;
  }
  if (root.contains("annotations")) doc.annotations = root["annotations"].dump();
  return doc;
}

Json PairJson(const std::array<double, 2>& p) { return Json::array({p[0], p[1]}); }

MotionMode BuildMode(const LayoutMode& m, const VehicleModel& vehicle,
                     const std::string& loc) {
  const double alpha = m.alpha_deg * kDegree;
  if (m.type == "tangential") return Tangential{alpha};
  if (m.type == "crab") return Crab{alpha};
  if (m.type == "differential") {
    try {
      return Tangential{DifferentialAlpha(vehicle)};
    } catch (const std::exception& e) {
      throw LayoutError(loc, e.what());
    }
  }
  if (m.type == "exponential_delayed") {
    return ExponentialDelayed{alpha, m.n.value()};
  }
  return ExponentialAnticipated{alpha, m.n.value()};
}

}  // namespace

LayoutError::LayoutError(std::string location, const std::string& message)
    : std::runtime_error(location + ": " + message),
      location_(std::move(location)) {}

LayoutDocument ParseLayout(std::string_view text) {
  Json root;
  try {
    root = Json::parse(text.begin(), text.end());
  } catch (const Json::parse_error& e) {
    throw LayoutError("byte " + std::to_string(e.byte), "malformed JSON");
  }
  return FromJson(root);
}

LayoutDocument ReadLayoutFile(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw LayoutError(path, "cannot open file");
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return ParseLayout(buffer.str());
}

std::string SerializeLayout(const LayoutDocument& doc) {
  Json root;
  root["schema_version"] = doc.schema_version;
  Json wheels = Json::array();
  for (const LayoutWheel& w : doc.wheels) {
    Json j;
    j["id"] = w.id;
    j["position"] = PairJson(w.position);
    j["v_max"] = w.v_max;
    j["omega_max_degps"] = w.omega_max_degps;
    wheels.push_back(j);
  }
  root["vehicle"]["wheels"] = wheels;
  Json segments = Json::array();
  for (const LayoutSegment& s : doc.segments) {
    Json j;
    j["id"] = s.id;
    Json points = Json::array();
    for (const auto& p : s.control_points) points.push_back(PairJson(p));
    j["control_points"] = points;
    j["mode"]["type"] = s.mode.type;
    if (s.mode.type != "differential" || s.mode.alpha_deg != 0.0) {
      j["mode"]["alpha_deg"] = s.mode.alpha_deg;
    }
    if (s.mode.n) j["mode"]["n"] = *s.mode.n;
    j["v_max"] = s.v_max;
    segments.push_back(j);
  }
  root["segments"] = segments;
  if (!doc.junctions.empty()) {
    Json js = Json::array();
    for (const LayoutJunction& junction : doc.junctions) {
      js.push_back({{"id", junction.id},
                    {"from", junction.from},
                    {"to", junction.to}});
    }
    root["junctions"] = js;
  }
  if (doc.tolerances) {
    root["tolerances"] = {{"position", doc.tolerances->position},
                          {"angle_deg", doc.tolerances->angle_deg},
                          {"relative", doc.tolerances->relative}};
  }
  if (!doc.annotations.empty()) {
    root["annotations"] = Json::parse(doc.annotations);
  }
  return root.dump(2) + "\n";
}

std::vector<LayoutJunction> EffectiveJunctions(const LayoutDocument& doc) {
  if (!doc.junctions.empty()) return doc.junctions;
  std::vector<LayoutJunction> out;
  for (std::size_t i = 1; i < doc.segments.size(); ++i) {
    out.push_back(LayoutJunction{"j" + std::to_string(i),
                                 doc.segments[i - 1].id, doc.segments[i].id});
  }
  return out;
}

Tolerances ApplyToleranceOverride(Tolerances base, std::string_view spec) {
  std::string text(spec);
  std::stringstream items(text);
  std::string item;
  while (std::getline(items, item, ',')) {
    if (item.empty()) continue;
    const auto eq = item.find('=');
    if (eq == std::string::npos) {
      throw LayoutError("AGV_PATH_KIT_TOL", "expected key=value, got '" +
                                                 item + "'");
    }
    const std::string key = item.substr(0, eq);
    const std::string value = item.substr(eq + 1);
    double v = 0.0;
    try {
      std::size_t used = 0;
      v = std::stod(value, &used);
      if (used != value.size()) throw std::invalid_argument(value);
    } catch (const std::exception&) {
      throw LayoutError("AGV_PATH_KIT_TOL." + key, "not a number");
    }
    if (!(v > 0.0) || !std::isfinite(v)) {
      throw LayoutError("AGV_PATH_KIT_TOL." + key, "must be > 0");
    }
    if (key == "position") {
      base.position = v;
    } else if (key == "angle") {
      base.angle = v * kDegree;
    } else if (key == "relative") {
      base.relative = v;
    } else {
      throw LayoutError("AGV_PATH_KIT_TOL." + key, "unknown key");
    }
  }
  return base;
}

Tolerances EffectiveTolerances(const LayoutDocument& doc) {
  Tolerances tol;
  if (doc.tolerances) {
    tol.position = doc.tolerances->position;
    tol.angle = doc.tolerances->angle_deg * kDegree;
    tol.relative = doc.tolerances->relative;
  }
  if (const char* env = std::getenv("AGV_PATH_KIT_TOL")) {
    tol = ApplyToleranceOverride(tol, env);
  }
  return tol;
}

Layout BuildLayout(const LayoutDocument& doc) {
  Layout out;
  for (const LayoutWheel& w : doc.wheels) {
    out.vehicle.wheels.push_back(Wheel{w.id,
                                       Point2(w.position[0], w.position[1]),
                                       w.v_max, w.omega_max_degps * kDegree});
  }
  const auto violations = ValidateVehicle(out.vehicle);
  if (!violations.empty()) {
    throw LayoutError("$.vehicle.wheels", violations.front().message);
  }
  for (std::size_t i = 0; i < doc.segments.size(); ++i) {
    const LayoutSegment& s = doc.segments[i];
    const std::string sl = Index("$.segments", i);
    std::vector<Point2> points;
    for (const auto& p : s.control_points) points.emplace_back(p[0], p[1]);
    MotionMode mode = BuildMode(s.mode, out.vehicle, sl + ".mode");
    try {
      out.path.segments.push_back(
          PathSegment{s.id, BezierCurve(std::move(points)), mode, s.v_max});
    } catch (const std::exception& e) {
      throw LayoutError(sl + ".control_points", e.what());
    }
  }
  const auto junctions = EffectiveJunctions(doc);
  for (std::size_t i = 0; i < junctions.size(); ++i) {
    JunctionRef ref{junctions[i].id, 0, 0};
    for (std::size_t k = 0; k < doc.segments.size(); ++k) {
      if (doc.segments[k].id == junctions[i].from) ref.from = k;
      if (doc.segments[k].id == junctions[i].to) ref.to = k;
    }
    out.junctions.push_back(ref);
  }
  out.tolerances = EffectiveTolerances(doc);
  return out;
}

void SetControlPoints(LayoutDocument& doc, const std::string& segment_id,
                      const BezierCurve& curve) {
  for (LayoutSegment& s : doc.segments) {
    if (s.id != segment_id) continue;
    s.control_points.clear();
    for (const Point2& p : curve.control_points()) {
      s.control_points.push_back({p.x(), p.y()});
    }
    return;
  }
  throw std::out_of_range("unknown segment '" + segment_id + "'");
}

}  // namespace agvpath
