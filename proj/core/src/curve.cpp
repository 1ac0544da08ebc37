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

#include "agvpath/curve.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

#include "agvpath/errors.hpp"
#include "agvpath/quadrature.hpp"

namespace agvpath {

namespace {

Point2 DeCasteljau(std::vector<Point2> points, double u) {
  for (std::size_t level = points.size(); level > 1; --level) {
    for (std::size_t i = 0; i + 1 < level; ++i) {
      points[i] = (1.0 - u) * points[i] + u * points[i + 1];
    }
  }
  return points.front();
}

void CheckParameter(double u) {
  if (!(u >= 0.0 && u <= 1.0)) {
    throw DomainError("curve parameter " + std::to_string(u) +
                      " outside [0, 1]");
  }
}

}  // namespace

BezierCurve::BezierCurve(std::vector<Point2> control_points)
    : points_(std::move(control_points)) {
  if (points_.size() < 2) {
    throw std::invalid_argument("Bezier curve needs at least two points");
  }
  for (const Point2& p : points_) {
    if (!p.allFinite()) {
      throw std::invalid_argument("Bezier control point is not finite");
    }
  }
  const std::vector<Point2>* previous = &points_;
  for (int k = 0; k < kMaxDerivative; ++k) {
    const int n = static_cast<int>(previous->size()) - 1;
    std::vector<Point2>& out = hodographs_[k];
    if (n >= 1) {
      out.reserve(n);
      for (int i = 0; i < n; ++i) {
        out.push_back(n * ((*previous)[i + 1] - (*previous)[i]));
      }
    }
    previous = &out;
  }
}

Point2 BezierCurve::Point(double u) const { return DeCasteljau(points_, u); }

Point2 BezierCurve::Derivative(double u, int k) const {
  if (k == 0) return Point(u);
  if (k < 0 || k > kMaxDerivative) {
    throw std::invalid_argument("derivative order out of range");
  }
  const auto& hodograph = hodographs_[k - 1];
  if (hodograph.empty()) return Point2::Zero();
  return DeCasteljau(hodograph, u);
}

CurveJet BezierCurve::Evaluate(double u, int order) const {
  CheckParameter(u);
  if (order < 0 || order > 3) {
    throw DomainError("jet order must be within 0..3");
  }
  CurveJet jet;
  jet.position = Point(u);
  if (order >= 1) jet.d1 = Derivative(u, 1);
  if (order >= 2) jet.d2 = Derivative(u, 2);
  if (order >= 3) jet.d3 = Derivative(u, 3);
  return jet;
}

std::pair<BezierCurve, BezierCurve> BezierCurve::Split(double s) const {
  if (!(s > 0.0 && s < 1.0)) {
    throw DomainError("split parameter must lie in (0, 1)");
  }
  const std::size_t count = points_.size();
  std::vector<Point2> left(count);
  std::vector<Point2> right(count);
  std::vector<Point2> work = points_;
  for (std::size_t level = 0; level < count; ++level) {
    left[level] = work.front();
    right[count - 1 - level] = work[count - 1 - level];
    for (std::size_t i = 0; i + 1 < count - level; ++i) {
      work[i] = (1.0 - s) * work[i] + s * work[i + 1];
    }
  }
  return {BezierCurve(std::move(left)), BezierCurve(std::move(right))};
}

BezierCurve BezierCurve::Elevated() const {
  const int n = degree();
  std::vector<Point2> out(n + 2);
  out.front() = points_.front();
  out.back() = points_.back();
  for (int i = 1; i <= n; ++i) {
    const double a = static_cast<double>(i) / (n + 1);
    out[i] = a * points_[i - 1] + (1.0 - a) * points_[i];
  }
  return BezierCurve(std::move(out));
}

BezierCurve BezierCurve::Reversed() const {
  return BezierCurve(std::vector<Point2>(points_.rbegin(), points_.rend()));
}

BezierCurve BezierCurve::Transformed(const Eigen::Rotation2Dd& rotation,
                                     const Point2& translation) const {
  std::vector<Point2> out;
  out.reserve(points_.size());
  for (const Point2& p : points_) out.push_back(rotation * p + translation);
  return BezierCurve(std::move(out));
}

double ArcLength(const BezierCurve& curve, double u1, double u2) {
  CheckParameter(u1);
  CheckParameter(u2);
  if (u1 > u2) throw DomainError("arc length requires u1 <= u2");
  if (u1 == u2) return 0.0;
  return IntegrateAdaptive(
      [&curve](double u) { return curve.Derivative(u, 1).norm(); }, u1, u2,
      1e-9);
}

double Curvature(const CurveJet& jet) {
  const double speed = jet.d1.norm();
  if (speed == 0.0) {
    throw SingularParameterizationError("curvature undefined: ||C'|| = 0");
  }
  return Cross(jet.d1, jet.d2) / (speed * speed * speed);
}

double CurvatureArcDerivative(const CurveJet& jet) {
  const double n2 = jet.d1.squaredNorm();
  if (n2 == 0.0) {
    throw SingularParameterizationError(
        "curvature derivative undefined: ||C'|| = 0");
  }
  const double speed = std::sqrt(n2);
  const double x12 = Cross(jet.d1, jet.d2);
  const double x13 = Cross(jet.d1, jet.d3);
  const double dot12 = jet.d1.dot(jet.d2);
  const double dkappa_du =
      x13 / (n2 * speed) - 3.0 * x12 * dot12 / (n2 * n2 * speed);
  return dkappa_du / speed;
}

double ContinuityDefect::relative() const {
  return defect / std::max(1.0, scale);
}

std::vector<ContinuityDefect> CheckGeometricContinuity(
    const CurveJet& left, const CurveJet& right, const ShapeParameters& params,
    int order) {
  if (order < 0 || order > 3) {
    throw std::invalid_argument("continuity order must be within 0..3");
  }
  if (!(params.beta1 > 0.0)) {
    throw std::invalid_argument("beta1 must be positive");
  }
  if (order == 3 && !params.beta3) {
    throw std::invalid_argument("order-3 continuity requires beta3");
  }
  const double b1 = params.beta1;
  const double b2 = params.beta2;
  std::vector<ContinuityDefect> out;
  out.push_back({(left.position - right.position).norm(),
                 right.position.norm()});
  if (order >= 1) {
    const Point2 rhs = b1 * right.d1;
    out.push_back({(left.d1 - rhs).norm(), rhs.norm()});
  }
  if (order >= 2) {
    const Point2 rhs = b1 * b1 * right.d2 + b2 * right.d1;
    out.push_back({(left.d2 - rhs).norm(), rhs.norm()});
  }
  if (order >= 3) {
    const Point2 rhs = b1 * b1 * b1 * right.d3 + 3.0 * b1 * b2 * right.d2 +
                       (*params.beta3) * right.d1;
    out.push_back({(left.d3 - rhs).norm(), rhs.norm()});
  }
  return out;
}

bool WithinTolerance(const std::vector<ContinuityDefect>& defects,
                     double relative_tolerance) {
  return std::all_of(defects.begin(), defects.end(),
                     [relative_tolerance](const ContinuityDefect& d) {
                       return d.relative() < relative_tolerance;
                     });
}

}  // namespace agvpath
