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

#include "agvpath/vehicle.hpp"

#include <cmath>
#include <numbers>
#include <set>

#include "agvpath/errors.hpp"

namespace agvpath {

namespace {
constexpr double kReferenceWheelSpeed = 1.7;  // m/s
constexpr double kReferenceSteeringRate =
    45.0 * std::numbers::pi / 180.0;  // rad/s
}  // namespace

std::vector<VehicleViolation> ValidateVehicle(const VehicleModel& model) {
  std::vector<VehicleViolation> out;
  if (model.wheels.empty()) {
    out.push_back({"", "wheels", "vehicle needs at least one wheel"});
  }
  std::set<std::string> seen;
  for (const Wheel& w : model.wheels) {
    if (!seen.insert(w.id).second) {
      out.push_back({w.id, "id", "duplicate wheel id"});
    }
    if (!w.position.allFinite()) {
      out.push_back({w.id, "position", "position must be finite"});
    }
    if (!(w.v_max > 0.0) || !std::isfinite(w.v_max)) {
      out.push_back({w.id, "v_max", "v_max must be positive and finite"});
    }
    if (!(w.omega_max > 0.0) || !std::isfinite(w.omega_max)) {
      out.push_back(
          {w.id, "omega_max", "omega_max must be positive and finite"});
    }
  }
  return out;
}

double DifferentialAlpha(const VehicleModel& model) {
  if (model.wheels.size() != 2) {
    throw DegenerateGeometryError(
        "differential offset needs exactly two wheels");
  }
  const Point2 delta = model.wheels[1].position - model.wheels[0].position;
  if (delta.x() == 0.0 && delta.y() == 0.0) {
    throw DegenerateGeometryError("differential wheels are coincident");
  }
  // With theta = zeta + alpha the heading points along -alpha in the vehicle
  // frame; it must be normal to the wheel line.
  double alpha = std::atan2(delta.x(), delta.y());
  if (alpha <= -std::numbers::pi / 2) alpha += std::numbers::pi;
  if (alpha > std::numbers::pi / 2) alpha -= std::numbers::pi;
  return alpha;
}

VehicleModel DefaultSixWheelVehicle(double half_length, double half_width) {
  auto wheel = [](std::string id, double x, double y) {
    return Wheel{std::move(id), Point2(x, y), kReferenceWheelSpeed,
                 kReferenceSteeringRate};
  };
  return VehicleModel{{
      wheel("w1", half_length, half_width),
      wheel("w2", -half_length, -half_width),
      wheel("w3", half_length, -half_width),
      wheel("w4", -half_length, half_width),
      wheel("w5", 0.0, half_width),
      wheel("w6", 0.0, -half_width),
  }};
}

VehicleModel DefaultTwoWheelVehicle(double half_length, double half_width) {
  VehicleModel six = DefaultSixWheelVehicle(half_length, half_width);
  six.wheels.resize(2);
  return six;
}

}  // namespace agvpath
