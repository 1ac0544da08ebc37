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

#include <cmath>
#include <numbers>
#include <stdexcept>

#include <gtest/gtest.h>

#include "agvpath/errors.hpp"
#include "oracles.hpp"

namespace agvpath {
namespace {

using testing::BasisDerivative;
using testing::RandomInputs;

BezierCurve Straight(double length) {
  return BezierCurve({Point2(0, 0), Point2(length / 3, 0),
                      Point2(2 * length / 3, 0), Point2(length, 0)});
}

TEST(BezierCurveTest, RejectsTooFewOrNonFinitePoints) {
  EXPECT_THROW(BezierCurve({Point2(0, 0)}), std::invalid_argument);
  EXPECT_THROW(BezierCurve({Point2(0, 0), Point2(NAN, 1)}),
               std::invalid_argument);
}

TEST(BezierCurveTest, DerivativesMatchBernsteinBasisOracle) {
  RandomInputs rng(7);
  for (int trial = 0; trial < 50; ++trial) {
    const BezierCurve c = rng.Curve(rng.Integer(1, 8));
    for (double u : {0.0, 0.17, 0.5, 0.93, 1.0}) {
      for (int k = 0; k <= BezierCurve::kMaxDerivative; ++k) {
        const Point2 expected = BasisDerivative(c.control_points(), u, k);
        const Point2 got = k == 0 ? c.Point(u) : c.Derivative(u, k);
        EXPECT_LT((got - expected).norm(), 1e-9 * (1.0 + expected.norm()))
            << "degree " << c.degree() << " u " << u << " k " << k;
      }
    }
  }
}

TEST(BezierCurveTest, EvaluateRejectsParameterOutsideUnitInterval) {
  const BezierCurve c = Straight(3.0);
  EXPECT_THROW(c.Evaluate(-0.1), DomainError);
  EXPECT_THROW(c.Evaluate(1.5), DomainError);
}

TEST(BezierCurveTest, EndpointDerivativesFollowControlPolygon) {
  const BezierCurve c({Point2(0, 0), Point2(1, 2), Point2(3, 3), Point2(4, 0),
                       Point2(6, 1)});
  const auto& p = c.control_points();
  EXPECT_TRUE(c.Derivative(0.0, 1).isApprox(4.0 * (p[1] - p[0])));
  EXPECT_TRUE(c.Derivative(1.0, 1).isApprox(4.0 * (p[4] - p[3])));
  EXPECT_TRUE(
      c.Derivative(0.0, 2).isApprox(12.0 * (p[2] - 2.0 * p[1] + p[0])));
}

TEST(BezierCurveTest, SplitHalvesTraceTheOriginal) {
  RandomInputs rng(11);
  const BezierCurve c = rng.Curve(5);
  const auto [a, b] = c.Split(0.3);
  for (double t : {0.0, 0.25, 0.8, 1.0}) {
    EXPECT_LT((a.Point(t) - c.Point(0.3 * t)).norm(), 1e-12);
    EXPECT_LT((b.Point(t) - c.Point(0.3 + 0.7 * t)).norm(), 1e-12);
  }
  // Chain rule: d/dt a(t) = 0.3 C'(0.3 t).
  EXPECT_LT((a.Derivative(1.0, 1) - 0.3 * c.Derivative(0.3, 1)).norm(), 1e-12);
}

TEST(BezierCurveTest, ElevationReversalAndTransformPreserveShape) {
  RandomInputs rng(3);
  const BezierCurve c = rng.Curve(4);
  const BezierCurve e = c.Elevated();
  EXPECT_EQ(e.degree(), 5);
  const BezierCurve r = c.Reversed();
  const Eigen::Rotation2Dd rot(0.7);
  const Point2 shift(1.5, -2.0);
  const BezierCurve t = c.Transformed(rot, shift);
  for (double u : {0.0, 0.4, 1.0}) {
    EXPECT_LT((e.Point(u) - c.Point(u)).norm(), 1e-12);
    EXPECT_LT((r.Point(u) - c.Point(1.0 - u)).norm(), 1e-12);
    EXPECT_LT((t.Point(u) - (rot * c.Point(u) + shift)).norm(), 1e-12);
  }
}

TEST(ArcLengthTest, StraightLineIsExact) {
  EXPECT_NEAR(ArcLength(Straight(3.0)), 3.0, 1e-12);
  EXPECT_NEAR(ArcLength(Straight(3.0), 0.25, 0.75), 1.5, 1e-12);
}

TEST(ArcLengthTest, MatchesFinePolyline) {
  RandomInputs rng(5);
  const BezierCurve c = rng.Curve(6);
  // Richardson-extrapolated chord sums.
  auto chords = [&](int n) {
    double sum = 0.0;
    for (int i = 0; i < n; ++i) {
      sum += (BasisDerivative(c.control_points(), double(i + 1) / n, 0) -
              BasisDerivative(c.control_points(), double(i) / n, 0))
                 .norm();
    }
    return sum;
  };
  const double extrapolated = (4.0 * chords(40000) - chords(20000)) / 3.0;
  EXPECT_NEAR(ArcLength(c), extrapolated, 1e-9);
}

TEST(CurvatureTest, ParabolaVertex) {
  // (u, u^2) on [-1, 1] mapped to [0, 1]: vertex curvature 2.
  const BezierCurve c({Point2(-1, 1), Point2(0, -1), Point2(1, 1)});
  EXPECT_NEAR(Curvature(c.Evaluate(0.5)), 2.0, 1e-12);
  EXPECT_NEAR(CurvatureArcDerivative(c.Evaluate(0.5)), 0.0, 1e-12);
}

TEST(CurvatureTest, SingularJetThrows) {
  const BezierCurve c({Point2(0, 0), Point2(0, 0), Point2(1, 0)});
  EXPECT_THROW(Curvature(c.Evaluate(0.0)), SingularParameterizationError);
}

TEST(CurvatureTest, ArcDerivativeMatchesFiniteDifference) {
  RandomInputs rng(19);
  for (int trial = 0; trial < 20; ++trial) {
    const BezierCurve c = rng.Curve(rng.Integer(3, 7));
    const double u = rng.Uniform(0.1, 0.9);
    auto kappa = [&](double v) {
      const Point2 d1 = BasisDerivative(c.control_points(), v, 1);
      const Point2 d2 = BasisDerivative(c.control_points(), v, 2);
      return Cross(d1, d2) / std::pow(d1.norm(), 3);
    };
    const double dkdu = testing::CentralDifference(kappa, u, 1e-4);
    const double expected = dkdu / c.Derivative(u, 1).norm();
    EXPECT_NEAR(CurvatureArcDerivative(c.Evaluate(u)), expected,
                1e-6 * (1.0 + std::abs(expected)));
  }
}

TEST(GeometricContinuityTest, SplitCurveIsParametricallyContinuous) {
  RandomInputs rng(23);
  const BezierCurve c = rng.Curve(6);
  const auto [a, b] = c.Split(0.5);
  // Both halves have du/dt = 0.5, so beta1 = 1 and beta2 = beta3 = 0.
  const auto defects = CheckGeometricContinuity(
      a.Evaluate(1.0), b.Evaluate(0.0), ShapeParameters{1.0, 0.0, 0.0}, 3);
  ASSERT_EQ(defects.size(), 4u);
  EXPECT_TRUE(WithinTolerance(defects, 1e-12));
}

TEST(GeometricContinuityTest, UnequalSplitRecoversBeta1) {
  RandomInputs rng(29);
  const BezierCurve c = rng.Curve(6);
  const auto [a, b] = c.Split(0.3);
  // a(t) = C(0.3 t), b(t) = C(0.3 + 0.7 t): a' = 0.3 C', b' = 0.7 C'.
  const double beta1 = 0.3 / 0.7;
  const ShapeParameters params{beta1, 0.0, 0.0};
  EXPECT_TRUE(WithinTolerance(
      CheckGeometricContinuity(a.Evaluate(1.0), b.Evaluate(0.0), params, 3),
      1e-12));
  const ShapeParameters wrong{1.0, 0.0, 0.0};
  EXPECT_FALSE(WithinTolerance(
      CheckGeometricContinuity(a.Evaluate(1.0), b.Evaluate(0.0), wrong, 1),
      1e-6));
}

TEST(GeometricContinuityTest, ThirdOrderUsesThreeBeta1Beta2) {
  // Reparameterize the right piece by a quadratic map with known
  // derivatives: right(t) = b(phi(t)), phi(0) = 0, phi'(0) = 1/beta1 etc.
  RandomInputs rng(31);
  const BezierCurve c = rng.Curve(5);
  const CurveJet left = c.Evaluate(0.5);
  // C(u) at u = 0.5 + t * s with s scaled: the right jet is the left jet
  // seen through u = 0.5 + p1 t + p2 t^2 / 2 + p3 t^3 / 6.
  const double p1 = 0.6, p2 = 0.2, p3 = -0.1;
  CurveJet right;
  right.position = left.position;
  right.d1 = p1 * left.d1;
  right.d2 = p1 * p1 * left.d2 + p2 * left.d1;
  right.d3 = p1 * p1 * p1 * left.d3 + 3 * p1 * p2 * left.d2 + p3 * left.d1;
  // Inverting the map gives beta1 = 1/p1, beta2 = -p2/p1^3,
  // beta3 = 3 p2^2 / p1^5 - p3 / p1^4.
  const ShapeParameters params{1 / p1, -p2 / std::pow(p1, 3),
                               3 * p2 * p2 / std::pow(p1, 5) -
                                   p3 / std::pow(p1, 4)};
  EXPECT_TRUE(
      WithinTolerance(CheckGeometricContinuity(left, right, params, 3), 1e-12));
}

TEST(GeometricContinuityTest, RejectsInvalidParameters) {
  const CurveJet j = Straight(1.0).Evaluate(0.0);
  EXPECT_THROW(CheckGeometricContinuity(j, j, ShapeParameters{0.0, 0.0, {}}, 1),
               std::invalid_argument);
  EXPECT_THROW(CheckGeometricContinuity(j, j, ShapeParameters{1.0, 0.0, {}}, 3),
               std::invalid_argument);
  EXPECT_THROW(CheckGeometricContinuity(j, j, ShapeParameters{1.0, 0.0, 0.0}, 4),
               std::invalid_argument);
}

}  // namespace
}  // namespace agvpath
