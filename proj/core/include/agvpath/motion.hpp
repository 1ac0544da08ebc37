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

#ifndef AGVPATH_MOTION_HPP_
#define AGVPATH_MOTION_HPP_

#include <string_view>
#include <variant>
#include <vector>

#include "agvpath/curve.hpp"

namespace agvpath {

// theta(u) = zeta(u) + alpha. Differential drive is the special case whose
// alpha comes from DifferentialAlpha().
struct Tangential {
  double alpha = 0.0;
};

// theta(u) = alpha.
struct Crab {
  double alpha = 0.0;
};

// theta(u) = zeta(u^n) + alpha, n > 1. Turning happens late in the segment.
struct ExponentialDelayed {
  double alpha = 0.0;
  double n = 2.0;
};

// theta(u) = zeta(1 - (1 - u)^n) + alpha, n > 1. Turning happens early.
struct ExponentialAnticipated {
  double alpha = 0.0;
  double n = 2.0;
};

// Orientation law of a path segment. All angles are radians.
using MotionMode =
    std::variant<Tangential, Crab, ExponentialDelayed, ExponentialAnticipated>;

double ModeAlpha(const MotionMode& mode);
std::string_view ModeTag(const MotionMode& mode);

// Throws std::invalid_argument when an exponential mode has n <= 1 or any
// parameter is not finite.
void ValidateMode(const MotionMode& mode);

// Vehicle orientation and its parameter derivatives. theta is unwrapped
// along the segment unless produced by LocalOrientation().
struct OrientationJet {
  double theta = 0.0;
  double dtheta = 0.0;
  double ddtheta = 0.0;
  double dddtheta = 0.0;
};

// Path heading zeta = atan2(C'_y, C'_x) (principal branch) with its first
// three parameter derivatives.
struct HeadingJet {
  double zeta = 0.0;
  double d1 = 0.0;
  double d2 = 0.0;
  double d3 = 0.0;
};

// Throws SingularParameterizationError when ||C'(u)|| == 0.
HeadingJet EvaluateHeading(const BezierCurve& curve, double u);

// Exact orientation derivatives with theta left on the principal branch of
// the heading. Cheap; used where only rates matter (speed limits).
// Endpoint limits of the exponential reparameterizations are taken
// analytically: a vanishing factor times an unbounded one resolves to zero,
// otherwise the unbounded derivative is reported as +-infinity.
OrientationJet LocalOrientation(const MotionMode& mode,
                                const BezierCurve& curve, double u);

// Continuous angle along u in [0, 1] by nearest-branch selection against a
// dense grid of samples.
class AngleUnwrapper {
 public:
  static constexpr int kDefaultIntervals = 4096;

  AngleUnwrapper() = default;
  // raw(u) returns a principal-branch angle; it may throw at isolated points,
  // in which case the previous grid value is carried over.
  template <typename RawAngle>
  AngleUnwrapper(RawAngle&& raw, int intervals = kDefaultIntervals);

  // Shifts `raw` (an angle sampled at u) by a multiple of 2*pi onto the
  // branch of the grid.
  double Unwrap(double u, double raw) const;

  // Grid value linearly interpolated at u.
  double Reference(double u) const;

 private:
  void Append(double raw);
  std::vector<double> grid_;
};

// Binds a motion mode to a curve and reports unwrapped orientation.
class SegmentOrientation {
 public:
  SegmentOrientation(const MotionMode& mode, const BezierCurve& curve);

  // Throws DomainError outside [0, 1] and SingularParameterizationError at
  // irregular points.
  OrientationJet At(double u) const;

  // One-sided jet at u = 0 or u = 1.
  OrientationJet AtEnd(CurveEnd end) const;

  const MotionMode& mode() const { return mode_; }
  const BezierCurve& curve() const { return curve_; }

 private:
  MotionMode mode_;
  BezierCurve curve_;
  AngleUnwrapper heading_;
};

OrientationJet Orientation(const MotionMode& mode, const BezierCurve& curve,
                           double u);

OrientationJet ModeJetAtJunction(const MotionMode& mode,
                                 const BezierCurve& curve, CurveEnd end);

// ---------------------------------------------------------------------------

template <typename RawAngle>
AngleUnwrapper::AngleUnwrapper(RawAngle&& raw, int intervals) {
  grid_.reserve(intervals + 1);
  for (int i = 0; i <= intervals; ++i) {
    const double u = static_cast<double>(i) / intervals;
    double value;
    try {
      value = raw(u);
    } catch (const std::exception&) {
      value = grid_.empty() ? 0.0 : grid_.back();
    }
    Append(value);
  }
}

}  // namespace agvpath

#endif  // AGVPATH_MOTION_HPP_
