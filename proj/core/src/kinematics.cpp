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

#include "agvpath/kinematics.hpp"

#include <cmath>
#include <limits>
#include <numbers>
#include <stdexcept>

#include "agvpath/errors.hpp"

namespace agvpath {

namespace {

constexpr double kInfinity = std::numeric_limits<double>::infinity();
// ||C_w'|| below this fraction of ||C'|| counts as a singular wheel curve.
constexpr double kSingularRatio = 1e-12;
constexpr double kNeighborStep = 1e-6;

Point2 Perp(const Point2& p) { return Point2(-p.y(), p.x()); }

// Fills everything except the unwrapped angles.
WheelState StateFromJets(const CurveJet& c, const OrientationJet& o,
                         const Point2& r) {
  const CurveJet w = ComposeWheelJet(c, o, r, 2);
  const double speed = c.d1.norm();
  if (speed == 0.0) {
    throw SingularParameterizationError("vehicle curve is singular");
  }
  const double wheel_speed = w.d1.norm();
  WheelState s;
  s.position = w.position;
  s.ratio_v = wheel_speed / speed;
  s.heading = std::atan2(w.d1.y(), w.d1.x());
  s.steering = s.heading - o.theta;
  if (wheel_speed <= kSingularRatio * std::max(1.0, speed)) {
    s.curvature_defined = false;
    s.curvature = std::numeric_limits<double>::quiet_NaN();
    s.ratio_omega = std::numeric_limits<double>::quiet_NaN();
    return s;
  }
  s.curvature = Cross(w.d1, w.d2) / (wheel_speed * wheel_speed * wheel_speed);
  s.ratio_omega = (s.curvature * wheel_speed - o.dtheta) / speed;
  if (std::isnan(s.ratio_omega)) {
    // Unbounded orientation acceleration (exponential modes at their rest
    // end with n < 2): the steering demand per metre is unbounded.
    s.curvature = kInfinity;
    s.ratio_omega = kInfinity;
  }
  return s;
}

SpeedLimitSample LimitFromStates(const PathSegment& segment,
                                 const VehicleModel& vehicle,
                                 const std::vector<WheelState>& states,
                                 double u) {
  SpeedLimitSample out;
  out.u = u;
  out.v_max = segment.v_max;
  out.binding = {BindingKind::kSegment, 0, ""};
  for (std::size_t i = 0; i < states.size(); ++i) {
    const double r = states[i].ratio_v;
    const double q = r > 0.0 ? vehicle.wheels[i].v_max / r : kInfinity;
    if (q < out.v_max) {
      out.v_max = q;
      out.binding = {BindingKind::kTraction, i, vehicle.wheels[i].id};
    }
  }
  for (std::size_t i = 0; i < states.size(); ++i) {
    if (!states[i].curvature_defined) {
      out.singular = true;
      continue;
    }
    const double r = std::abs(states[i].ratio_omega);
    const double q = r > 0.0 ? vehicle.wheels[i].omega_max / r : kInfinity;
    if (q < out.v_max) {
      out.v_max = q;
      out.binding = {BindingKind::kSteering, i, vehicle.wheels[i].id};
    }
  }
  return out;
}

std::vector<WheelState> LocalStates(const PathSegment& segment,
                                    const VehicleModel& vehicle, double u) {
  const CurveJet c = segment.curve.Evaluate(u, 2);
  const OrientationJet o = LocalOrientation(segment.mode, segment.curve, u);
  std::vector<WheelState> states;
  states.reserve(vehicle.wheels.size());
  for (const Wheel& w : vehicle.wheels) {
    states.push_back(StateFromJets(c, o, w.position));
  }
  return states;
}

SpeedLimitSample SpeedLimitImpl(const PathSegment& segment,
                                const VehicleModel& vehicle, double u) {
  SpeedLimitSample out =
      LimitFromStates(segment, vehicle, LocalStates(segment, vehicle, u), u);
  if (!out.singular) return out;
  // Isolated singular point: the smaller of the one-sided neighbor limits.
  SpeedLimitSample best;
  best.v_max = kInfinity;
  for (double side : {-1.0, 1.0}) {
    const double un = u + side * kNeighborStep;
    if (un < 0.0 || un > 1.0) continue;
    SpeedLimitSample n =
        LimitFromStates(segment, vehicle, LocalStates(segment, vehicle, un), u);
    if (n.v_max < best.v_max) best = n;
  }
  if (!std::isfinite(best.v_max)) return out;
  best.u = u;
  best.singular = true;
  return best;
}

}  // namespace

CurveJet ComposeWheelJet(const CurveJet& c, const OrientationJet& o,
                         const Point2& r, int order) {
  const Eigen::Rotation2Dd rot(o.theta);
  const Point2 q = rot * r;
  const Point2 jq = Perp(q);
  CurveJet w;
  w.position = c.position + q;
  if (order >= 1) w.d1 = c.d1 + o.dtheta * jq;
  if (order >= 2) w.d2 = c.d2 + o.ddtheta * jq - o.dtheta * o.dtheta * q;
  if (order >= 3) {
    w.d3 = c.d3 + (o.dddtheta - o.dtheta * o.dtheta * o.dtheta) * jq -
           3.0 * o.dtheta * o.ddtheta * q;
  }
  return w;
}

std::string BindingLabel(const BindingConstraint& binding) {
  switch (binding.kind) {
    case BindingKind::kSegment:
      return "segment";
    case BindingKind::kTraction:
      return "traction:" + binding.wheel_id;
    case BindingKind::kSteering:
      return "steering:" + binding.wheel_id;
  }
  return "unknown";
}

CurveJet WheelCurveJet(const PathSegment& segment, const Wheel& wheel,
                       double u, int order) {
  const CurveJet c = segment.curve.Evaluate(u, order);
  const OrientationJet o = LocalOrientation(segment.mode, segment.curve, u);
  return ComposeWheelJet(c, o, wheel.position, order);
}

WheelState LocalWheelState(const PathSegment& segment, const Wheel& wheel,
                           double u) {
  const CurveJet c = segment.curve.Evaluate(u, 2);
  const OrientationJet o = LocalOrientation(segment.mode, segment.curve, u);
  return StateFromJets(c, o, wheel.position);
}

SpeedLimitSample SpeedLimit(const PathSegment& segment,
                            const VehicleModel& vehicle, double u) {
  return SpeedLimitImpl(segment, vehicle, u);
}

double WheelSpeedLimit(const PathSegment& segment, const VehicleModel& vehicle,
                       std::size_t wheel_index, double u) {
  if (wheel_index >= vehicle.wheels.size()) {
    throw std::out_of_range("wheel index out of range");
  }
  const double v = SpeedLimit(segment, vehicle, u).v_max;
  return v * LocalWheelState(segment, vehicle.wheels[wheel_index], u).ratio_v;
}

SegmentKinematics::SegmentKinematics(const PathSegment& segment,
                                     const VehicleModel& vehicle,
                                     KinematicsOptions options)
    : segment_(segment),
      vehicle_(vehicle),
      options_(options),
      orientation_(segment.mode, segment.curve) {
  wheel_headings_.reserve(vehicle_.wheels.size());
  heading_shift_.reserve(vehicle_.wheels.size());
  for (const Wheel& wheel : vehicle_.wheels) {
    AngleUnwrapper track([this, &wheel](double u) {
      const CurveJet w = WheelCurveJet(segment_, wheel, u, 1);
      if (w.d1.squaredNorm() == 0.0) {
        throw SingularParameterizationError("singular wheel curve");
      }
      return std::atan2(w.d1.y(), w.d1.x());
    });
    // Start the steering track on (-pi, pi].
    const double delta0 = track.Reference(0.0) - orientation_.At(0.0).theta;
    double shift = -std::round(delta0 / (2.0 * std::numbers::pi)) * 2.0 *
                   std::numbers::pi;
    if (delta0 + shift <= -std::numbers::pi) shift += 2.0 * std::numbers::pi;
    wheel_headings_.push_back(std::move(track));
    heading_shift_.push_back(shift);
  }
}

CurveJet SegmentKinematics::WheelJet(std::size_t wheel_index, double u,
                                     int order) const {
  const CurveJet c = segment_.curve.Evaluate(u, order);
  const OrientationJet o = orientation_.At(u);
  return ComposeWheelJet(c, o, vehicle_.wheels.at(wheel_index).position,
                         order);
}

WheelState SegmentKinematics::State(std::size_t wheel_index, double u) const {
  const CurveJet c = segment_.curve.Evaluate(u, 2);
  const OrientationJet o = orientation_.At(u);
  WheelState s =
      StateFromJets(c, o, vehicle_.wheels.at(wheel_index).position);
  const AngleUnwrapper& track = wheel_headings_[wheel_index];
  const double raw =
      s.curvature_defined ? s.heading : track.Reference(u);
  s.heading = track.Unwrap(u, raw) + heading_shift_[wheel_index];
  s.steering = s.heading - o.theta;
  if (options_.steering_range &&
      std::abs(s.steering) > *options_.steering_range) {
    // Nearest whole number of half turns; odd means driving backwards.
    const double turns = std::round(s.steering / std::numbers::pi);
    s.steering -= turns * std::numbers::pi;
    s.heading -= turns * std::numbers::pi;
    s.reversed = std::fmod(std::abs(turns), 2.0) == 1.0;
  }
  return s;
}

SpeedLimitSample SegmentKinematics::Limit(double u) const {
  return SpeedLimitImpl(segment_, vehicle_, u);
}

double SegmentKinematics::OmegaRatio(double u) const {
  const OrientationJet o = LocalOrientation(segment_.mode, segment_.curve, u);
  return o.dtheta / segment_.curve.Derivative(u, 1).norm();
}

SegmentProfile SegmentKinematics::Profile(int samples) const {
  if (samples < 2) throw std::invalid_argument("profile needs >= 2 samples");
  SegmentProfile out;
  out.wheel_tracks.resize(vehicle_.wheels.size());
  for (int i = 0; i < samples; ++i) {
    const double u = static_cast<double>(i) / (samples - 1);
    SpeedLimitSample limit = Limit(u);
    limit.s = ArcLength(segment_.curve, 0.0, u);
    out.limits.push_back(limit);
    out.theta.push_back(orientation_.At(u).theta);
    out.omega_ratio.push_back(OmegaRatio(u));
    for (std::size_t w = 0; w < vehicle_.wheels.size(); ++w) {
      out.wheel_tracks[w].push_back(State(w, u));
    }
  }
  return out;
}

WheelState ComputeWheelState(const PathSegment& segment, const Wheel& wheel,
                             double u) {
  const SegmentKinematics kin(segment, VehicleModel{{wheel}});
  return kin.State(0, u);
}

SegmentProfile ProfileSegment(const PathSegment& segment,
                              const VehicleModel& vehicle, int samples) {
  return SegmentKinematics(segment, vehicle).Profile(samples);
}

}  // namespace agvpath
