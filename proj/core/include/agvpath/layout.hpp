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

#ifndef AGVPATH_LAYOUT_HPP_
#define AGVPATH_LAYOUT_HPP_

#include <array>
#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "agvpath/continuity.hpp"
#include "agvpath/path.hpp"
#include "agvpath/vehicle.hpp"

namespace agvpath {

inline constexpr int kLayoutSchemaVersion = 1;

// Parse or validation failure; location is a path into the document such as
// "$.segments[1].mode.n".
class LayoutError : public std::runtime_error {
 public:
  LayoutError(std::string location, const std::string& message);
  const std::string& location() const { return location_; }

 private:
  std::string location_;
};

// Layout documents hold values in file units: meters, m/s, degrees, deg/s.
struct LayoutWheel {
  std::string id;
  std::array<double, 2> position{};
  double v_max = 0.0;
  double omega_max_degps = 0.0;
  bool operator==(const LayoutWheel&) const = default;
};

struct LayoutMode {
  // tangential, crab, differential, exponential_delayed or
  // exponential_anticipated.
  std::string type;
  double alpha_deg = 0.0;  // ignored for differential
  std::optional<double> n;  // exponential modes only
  bool operator==(const LayoutMode&) const = default;
};

struct LayoutSegment {
  std::string id;
  std::vector<std::array<double, 2>> control_points;
  LayoutMode mode;
  double v_max = 0.0;
  bool operator==(const LayoutSegment&) const = default;
};

struct LayoutJunction {
  std::string id;
  std::string from;  // segment ending at the junction
  std::string to;    // segment starting at the junction
  bool operator==(const LayoutJunction&) const = default;
};

struct LayoutTolerances {
  double position = 1e-6;      // m
  double angle_deg = 5.729577951308232e-7;  // 1e-8 rad
  double relative = 1e-6;
  bool operator==(const LayoutTolerances&) const = default;
};

struct LayoutDocument {
  int schema_version = kLayoutSchemaVersion;
  std::vector<LayoutWheel> wheels;
  std::vector<LayoutSegment> segments;
  // Empty means junctions are implied by segment order (j1, j2, ...).
  std::vector<LayoutJunction> junctions;
  std::optional<LayoutTolerances> tolerances;
  // Free-form JSON carried through unchanged; empty when absent.
  std::string annotations;
  bool operator==(const LayoutDocument&) const = default;
};

// Parses and validates; throws LayoutError.
LayoutDocument ParseLayout(std::string_view text);
LayoutDocument ReadLayoutFile(const std::string& path);

// Pretty-printed JSON with a trailing newline; stable field order.
std::string SerializeLayout(const LayoutDocument& doc);

// Converted domain model, in SI units and radians.
struct JunctionRef {
  std::string id;
  std::size_t from = 0;  // index into Path::segments
  std::size_t to = 0;
};

struct Layout {
  VehicleModel vehicle;
  Path path;
  std::vector<JunctionRef> junctions;
  Tolerances tolerances;
};

// Throws LayoutError (e.g. differential mode on a vehicle without exactly
// two wheels).
Layout BuildLayout(const LayoutDocument& doc);

// Explicit junctions, or consecutive segment pairs named j1, j2, ...
std::vector<LayoutJunction> EffectiveJunctions(const LayoutDocument& doc);

// Applies an AGV_PATH_KIT_TOL style override, "key=value" pairs separated
// by commas with keys position (m), angle (deg) and relative. Throws LayoutError.
Tolerances ApplyToleranceOverride(Tolerances base, std::string_view spec);

// Tolerances from the document, then the AGV_PATH_KIT_TOL environment
// variable when set.
Tolerances EffectiveTolerances(const LayoutDocument& doc);

// Writes a curve back into the document; throws std::out_of_range for an
// unknown id.
void SetControlPoints(LayoutDocument& doc, const std::string& segment_id,
                      const BezierCurve& curve);

}  // namespace agvpath

#endif  // AGVPATH_LAYOUT_HPP_
