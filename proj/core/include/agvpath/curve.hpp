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

#ifndef AGVPATH_CURVE_HPP_
#define AGVPATH_CURVE_HPP_

#include <array>
#include <optional>
#include <utility>
#include <vector>

#include <Eigen/Core>
#include <Eigen/Geometry>

namespace agvpath {

// Planar point or vector, meters (or meters per unit-u^k for derivatives).
using Point2 = Eigen::Vector2d;

enum class CurveEnd { kStart, kEnd };

// Position and parameter derivatives of a curve at one parameter value.
struct CurveJet {
  Point2 position = Point2::Zero();
  Point2 d1 = Point2::Zero();
  Point2 d2 = Point2::Zero();
  Point2 d3 = Point2::Zero();
};

// z-component of the planar cross product, det(a, b).
inline double Cross(const Point2& a, const Point2& b) {
  return a.x() * b.y() - a.y() * b.x();
}

// Immutable planar Bezier curve on u in [0, 1].
//
// Derivatives are evaluated exactly by running de Casteljau on the
// precomputed hodograph control polygons; orders beyond the degree are zero.
class BezierCurve {
 public:
  static constexpr int kMaxDerivative = 4;

  // Throws std::invalid_argument for fewer than two points or non-finite
  // coordinates.
  explicit BezierCurve(std::vector<Point2> control_points);

  int degree() const { return static_cast<int>(points_.size()) - 1; }
  const std::vector<Point2>& control_points() const { return points_; }

  Point2 Point(double u) const;

  // k-th parameter derivative, 0 <= k <= kMaxDerivative.
  Point2 Derivative(double u, int k) const;

  // Throws DomainError when u is outside [0, 1] or order outside [0, 3].
  CurveJet Evaluate(double u, int order = 3) const;

  // De Casteljau subdivision at s in (0, 1); both halves are parameterized
  // on [0, 1].
  std::pair<BezierCurve, BezierCurve> Split(double s) const;

  // Same geometry and parameterization, one degree higher.
  BezierCurve Elevated() const;

  BezierCurve Reversed() const;

  // Applies p -> rotation * p + translation to every control point.
  BezierCurve Transformed(const Eigen::Rotation2Dd& rotation,
                          const Point2& translation) const;

  friend bool operator==(const BezierCurve& a, const BezierCurve& b) {
    return a.points_ == b.points_;
  }

 private:
  std::vector<Point2> points_;
  // hodographs_[k] holds the control polygon of the (k+1)-th derivative.
  std::array<std::vector<Point2>, kMaxDerivative> hodographs_;
};

// Arc length between u1 <= u2 by adaptive 24-point Gauss-Legendre
// quadrature of ||C'(u)||.
double ArcLength(const BezierCurve& curve, double u1 = 0.0, double u2 = 1.0);

// Signed curvature det(C', C'') / ||C'||^3, positive for counter-clockwise
// turning. Throws SingularParameterizationError when ||C'|| == 0.
double Curvature(const CurveJet& jet);

// d(kappa)/ds = (d(kappa)/du) / ||C'||, expanded analytically from d1..d3.
double CurvatureArcDerivative(const CurveJet& jet);

// Shape parameters relating one-sided derivatives at a junction. beta1 > 0.
struct ShapeParameters {
  double beta1 = 1.0;
  double beta2 = 0.0;
  std::optional<double> beta3;
};

// Norm of one continuity condition's defect, plus the magnitude of the
// condition's right-hand side so callers can apply relative tolerances.
struct ContinuityDefect {
  double defect = 0.0;
  double scale = 0.0;

  // defect / max(1, scale)
  double relative() const;
};

// Defects of the geometric continuity conditions of orders 0..order between
// the left jet (at u-) and the right jet (at u+):
//   C(u-)    = C(u+)
//   C'(u-)   = b1 C'(u+)
//   C''(u-)  = b1^2 C''(u+) + b2 C'(u+)
//   C'''(u-) = b1^3 C'''(u+) + 3 b1 b2 C''(u+) + b3 C'(u+)
// Throws std::invalid_argument if beta1 <= 0, order > 3, or beta3 is missing
// for order 3.
std::vector<ContinuityDefect> CheckGeometricContinuity(
    const CurveJet& left, const CurveJet& right, const ShapeParameters& params,
    int order);

// True when every defect's relative() is below tolerance.
bool WithinTolerance(const std::vector<ContinuityDefect>& defects,
                     double relative_tolerance);

}  // namespace agvpath

#endif  // AGVPATH_CURVE_HPP_
