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

#ifndef AGVPATH_VEHICLE_HPP_
#define AGVPATH_VEHICLE_HPP_

#include <string>
#include <vector>

#include "agvpath/curve.hpp"

namespace agvpath {

// Steer-and-drive wheel whose steering axis passes through its contact
// point. position is in the vehicle frame, whose origin is the tracking
// point; v_max in m/s, omega_max in rad/s.
struct Wheel {
  std::string id;
  Point2 position = Point2::Zero();
  double v_max = 0.0;
  double omega_max = 0.0;
};

struct VehicleModel {
  std::vector<Wheel> wheels;
};

struct VehicleViolation {
  std::string wheel_id;  // empty for vehicle-level violations
  std::string field;
  std::string message;
};

// Empty iff the model has at least one wheel, unique ids, finite positions
// and strictly positive limits.
std::vector<VehicleViolation> ValidateVehicle(const VehicleModel& model);

// Tangential-mode offset that keeps the heading perpendicular to the line
// through the two wheels, so neither wheel has to steer. Reported in
// (-pi/2, pi/2]. Requires exactly two wheels at distinct positions; throws
// DegenerateGeometryError otherwise.
double DifferentialAlpha(const VehicleModel& model);

// Symmetric 3 x 2 arrangement used by the bundled fixtures: w1 front-left,
// w2 rear-right, w3 front-right, w4 rear-left, w5/w6 mid left/right.
// Limits 1.7 m/s and 45 deg/s per wheel.
VehicleModel DefaultSixWheelVehicle(double half_length = 0.75,
                                    double half_width = 0.45);

// The diagonal pair w1/w2 of DefaultSixWheelVehicle().
VehicleModel DefaultTwoWheelVehicle(double half_length = 0.75,
                                    double half_width = 0.45);

}  // namespace agvpath

#endif  // AGVPATH_VEHICLE_HPP_
