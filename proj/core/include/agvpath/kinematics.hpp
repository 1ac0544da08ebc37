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

#ifndef AGVPATH_KINEMATICS_HPP_
#define AGVPATH_KINEMATICS_HPP_

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "agvpath/curve.hpp"
#include "agvpath/motion.hpp"
#include "agvpath/path.hpp"
#include "agvpath/vehicle.hpp"

namespace agvpath {

// Kinematic state of one wheel at parameter u of a segment.
struct WheelState {
  Point2 position = Point2::Zero();  // world frame
  double heading = 0.0;              // zeta_w
  double steering = 0.0;             // delta_w = zeta_w - theta
  double ratio_v = 0.0;              // R_v = ||C_w'|| / ||C'||, >= 0
  double ratio_omega = 0.0;          // R_omega, rad/m, signed
  double curvature = 0.0;            // kappa_w, 1/m
  // False where ||C_w'|| vanishes (the vehicle pivots about this wheel);
  // curvature and ratio_omega are NaN there.
  bool curvature_defined = true;
  // Set when the steering-range option flipped the wheel by 180 degrees.
  bool reversed = false;
};

enum class BindingKind { kSegment, kTraction, kSteering };

struct BindingConstraint {
  BindingKind kind = BindingKind::kSegment;
  std::size_t wheel_index = 0;  // meaningful for traction / steering
  std::string wheel_id;
};

std::string BindingLabel(const BindingConstraint& binding);

// Vehicle speed limit at one parameter value.
struct SpeedLimitSample {
  double u = 0.0;
  double s = 0.0;  // arc length from the segment start, m
  double v_max = 0.0;
  BindingConstraint binding;
  // A wheel curve was singular at u; v_max comes from one-sided neighbors.
  bool singular = false;
};

struct KinematicsOptions {
  // When set, a wheel whose unwrapped steering angle leaves
  // [-steering_range, steering_range] is shifted by the nearest multiple of
  // 180 degrees; an odd multiple means driving backwards. Unset: never flip.
  std::optional<double> steering_range;
};

// Wheel-curve jet from a vehicle-curve jet and an orientation jet:
//   C_w'   = C'   + theta' J q
//   C_w''  = C''  + theta'' J q - theta'^2 q
//   C_w''' = C''' + (theta''' - theta'^3) J q - 3 theta' theta'' q
// with q = R(theta) r_w and J the 90-degree rotation.
CurveJet ComposeWheelJet(const CurveJet& curve_jet,
                         const OrientationJet& orientation,
                         const Point2& wheel_position, int order);

// Jet of the wheel curve C_w(u) = C(u) + R(theta(u)) r_w, exact up to
// order 3 for every motion mode.
CurveJet WheelCurveJet(const PathSegment& segment, const Wheel& wheel,
                       double u, int order = 2);

// Wheel state with principal-branch angles (no unwrapping).
WheelState LocalWheelState(const PathSegment& segment, const Wheel& wheel,
                           double u);

// Vehicle speed limit
//   v_max(u) = min(v_k, min_w v_w_max / R_v, min_w omega_w_max / |R_omega|)
// with ties resolved segment < traction < steering, then by wheel order.
SpeedLimitSample SpeedLimit(const PathSegment& segment,
                            const VehicleModel& vehicle, double u);

// v_max(u) * R_v of the given wheel.
double WheelSpeedLimit(const PathSegment& segment, const VehicleModel& vehicle,
                       std::size_t wheel_index, double u);

// Sampled tracks of one segment.
struct SegmentProfile {
  std::vector<SpeedLimitSample> limits;
  std::vector<double> theta;        // unwrapped orientation
  std::vector<double> omega_ratio;  // omega / v = theta' / ||C'||, rad/m
  // wheel_tracks[w][i] is the state of wheel w at sample i.
  std::vector<std::vector<WheelState>> wheel_tracks;
};

// Binds a segment to a vehicle; keeps orientation and steering angles
// continuous along the segment.
class SegmentKinematics {
 public:
  SegmentKinematics(const PathSegment& segment, const VehicleModel& vehicle,
                    KinematicsOptions options = {});

  CurveJet WheelJet(std::size_t wheel_index, double u, int order = 2) const;
  WheelState State(std::size_t wheel_index, double u) const;
  SpeedLimitSample Limit(double u) const;
  double OmegaRatio(double u) const;

  // Uniform-u sampling (samples >= 2), arc length computed per sample.
  SegmentProfile Profile(int samples) const;

  const PathSegment& segment() const { return segment_; }
  const VehicleModel& vehicle() const { return vehicle_; }
  const SegmentOrientation& orientation() const { return orientation_; }

 private:
  PathSegment segment_;
  VehicleModel vehicle_;
  KinematicsOptions options_;
  SegmentOrientation orientation_;
  std::vector<AngleUnwrapper> wheel_headings_;
  std::vector<double> heading_shift_;
};

// Unwrapped wheel state; builds a SegmentKinematics internally.
WheelState ComputeWheelState(const PathSegment& segment, const Wheel& wheel,
                             double u);

SegmentProfile ProfileSegment(const PathSegment& segment,
                              const VehicleModel& vehicle, int samples);

}  // namespace agvpath

#endif  // AGVPATH_KINEMATICS_HPP_
