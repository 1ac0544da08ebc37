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

#include "agvpath/repair.hpp"

#include <cmath>
#include <stdexcept>

#include <gtest/gtest.h>

#include "agvpath/layout.hpp"
#include "oracles.hpp"

namespace agvpath {
namespace {

using testing::FixturePath;
using testing::RandomInputs;

Layout Fixture(const std::string& name) {
  return BuildLayout(ReadLayoutFile(FixturePath(name)));
}

TEST(DerivativeToControlPointsTest, UnchangedJetLeavesCurveUnchanged) {
  RandomInputs rng(201);
  const BezierCurve c = rng.Curve(6);
  for (CurveEnd end : {CurveEnd::kStart, CurveEnd::kEnd}) {
    const CurveJet jet = c.Evaluate(end == CurveEnd::kStart ? 0.0 : 1.0, 3);
    const BezierCurve same = DerivativeToControlPoints(c, end, jet, 3);
    for (int i = 0; i <= 6; ++i) {
      EXPECT_LT((same.control_points()[i] - c.control_points()[i]).norm(),
                1e-12);
    }
  }
}

TEST(DerivativeToControlPointsTest, DoublingFirstDerivativeMovesOnePoint) {
  RandomInputs rng(203);
  const BezierCurve c = rng.Curve(6);
  CurveJet jet = c.Evaluate(0.0, 1);
  jet.d1 *= 2.0;
  const BezierCurve m = DerivativeToControlPoints(c, CurveEnd::kStart, jet, 1);
  const auto& p = c.control_points();
  EXPECT_LT((m.control_points()[1] - (p[0] + 2.0 * (p[1] - p[0]))).norm(),
            1e-12);
  for (int i : {0, 2, 3, 4, 5, 6}) {
    EXPECT_EQ(m.control_points()[i], p[i]);
  }
}

TEST(DerivativeToControlPointsTest, MatchesPrescribedJetAtEnd) {
  RandomInputs rng(207);
  const BezierCurve c = rng.Curve(5);
  CurveJet target;
  target.position = c.Point(1.0);
  target.d1 = Point2(3, 1);
  target.d2 = Point2(-2, 4);
  target.d3 = Point2(5, -6);
  const BezierCurve m = DerivativeToControlPoints(c, CurveEnd::kEnd, target, 3);
  const CurveJet got = m.Evaluate(1.0, 3);
  EXPECT_LT((got.d1 - target.d1).norm(), 1e-12);
  EXPECT_LT((got.d2 - target.d2).norm(), 1e-11);
  EXPECT_LT((got.d3 - target.d3).norm(), 1e-10);
  EXPECT_EQ(m.control_points()[0], c.control_points()[0]);
  EXPECT_EQ(m.control_points()[1], c.control_points()[1]);
  EXPECT_EQ(m.control_points()[5], c.control_points()[5]);
}

TEST(DerivativeToControlPointsTest, RejectsOrderAboveDegree) {
  const BezierCurve c({Point2(0, 0), Point2(1, 0), Point2(2, 1)});
  EXPECT_THROW(DerivativeToControlPoints(c, CurveEnd::kStart, c.Evaluate(0), 3),
               std::invalid_argument);
}

TEST(DerivativeToControlPointsTest, PublishedRepairedJetReproducesPoints) {
  // Prescribing the repaired right-curve jet onto the initial right curve
  // must land on the repaired control points.
  const Layout a = Fixture("layout_va.json");
  const Layout b = Fixture("layout_vb_published.json");
  const BezierCurve& target = b.path.segments[1].curve;
  const BezierCurve m = DerivativeToControlPoints(
      a.path.segments[1].curve, CurveEnd::kStart, target.Evaluate(0.0, 3), 3);
  for (int i = 0; i < 4; ++i) {
    EXPECT_LT((m.control_points()[i] - target.control_points()[i]).norm(), 1e-3);
  }
}

TEST(TravelTimeTest, StraightSegmentAtConstantLimit) {
  const PathSegment s{"s",
                      BezierCurve({Point2(0, 0), Point2(1, 0), Point2(2, 0),
                                   Point2(3, 0)}),
                      Tangential{0.0}, 1.5};
  EXPECT_NEAR(EstimateTravelTime(s, DefaultSixWheelVehicle()), 2.0, 1e-12);
}

TEST(TravelTimeTest, HalvingActuatorLimitsDoublesTime) {
  const PathSegment s{"s",
                      BezierCurve({Point2(0, 0), Point2(1, 1), Point2(2, -1),
                                   Point2(3, 0)}),
                      Tangential{0.0}, 1e6};
  VehicleModel v = DefaultSixWheelVehicle();
  const double full = EstimateTravelTime(s, v);
  for (Wheel& w : v.wheels) {
    w.v_max /= 2;
    w.omega_max /= 2;
  }
  EXPECT_NEAR(EstimateTravelTime(s, v), 2.0 * full, 1e-9 * full);
}

TEST(RepairTangentialTest, AlreadySmoothNeedsNoDisplacement) {
  RandomInputs rng(211);
  const BezierCurve c = rng.Curve(8);
  const auto [a, b] = c.Split(0.5);
  const VehicleModel v = DefaultSixWheelVehicle();
  const PathSegment l{"a", a, Tangential{0.0}, 1.5};
  const PathSegment r{"b", b, Tangential{0.0}, 1.5};
  RepairOptions options;
  options.objective = RepairObjective::kMinDisplacement;
  const RepairResult res = RepairTangential({{l, r, v}, options});
  ASSERT_TRUE(res.feasible);
  EXPECT_LT(res.displacement, 1e-9);
  EXPECT_EQ(res.report_after.verdict, Verdict::kSmooth);
  EXPECT_EQ(res.left.curve, a);
}

TEST(RepairTangentialTest, RandomG1JunctionsBecomeSmooth) {
  const VehicleModel v = DefaultSixWheelVehicle();
  int repaired = 0;
  for (unsigned seed = 0; seed < 100; ++seed) {
    RandomInputs rng(1000 + seed);
    const BezierCurve a = rng.Curve(rng.Integer(4, 6));
    std::vector<Point2> rp = rng.Curve(rng.Integer(4, 6)).control_points();
    for (Point2& p : rp) p += a.control_points().back();
    // Only G1: tangent direction matches, second derivative arbitrary.
    rp = testing::ContinueWithBeta(a.control_points(), rp, rng.Uniform(0.5, 2),
                                   rng.Uniform(-1, 1), rng.Uniform(-1, 1))
             .control_points();
    rp[2] += Point2(rng.Uniform(-0.3, 0.3), rng.Uniform(-0.3, 0.3));
    const double alpha = rng.Uniform(-1, 1);
    const PathSegment l{"a", a, Tangential{alpha}, 1.5};
    const PathSegment r{"b", BezierCurve(rp), Tangential{alpha}, 1.5};
    RepairOptions options;
    options.objective = seed % 10 ? RepairObjective::kMinDisplacement
                                  : RepairObjective::kMinTravelTime;
    options.search.max_evaluations = 600;
    options.time_pieces = 4;
    const RepairResult res = RepairTangential({{l, r, v}, options});
    if (res.feasible && res.report_after.verdict == Verdict::kSmooth) {
      ++repaired;
    }
    // Far end points and the junction never move.
    EXPECT_EQ(res.right.curve.control_points().front(), rp.front());
    EXPECT_EQ(res.right.curve.control_points().back(), rp.back());
    EXPECT_EQ(res.left.curve, a);
  }
  EXPECT_EQ(repaired, 100);
}

TEST(RepairTangentialTest, BothSidesMoveNearJunctionOnly) {
  const Layout a = Fixture("layout_va.json");
  RepairOptions options;
  options.side = RepairSide::kBoth;
  options.objective = RepairObjective::kMinDisplacement;
  const RepairResult res = RepairTangential(
      {{a.path.segments[0], a.path.segments[1], a.vehicle}, options});
  ASSERT_TRUE(res.feasible);
  const auto& before = a.path.segments[0].curve.control_points();
  const auto& after = res.left.curve.control_points();
  for (int i = 0; i <= 2; ++i) EXPECT_EQ(after[i], before[i]);
  EXPECT_EQ(after.back(), before.back());
  EXPECT_FALSE(res.moved.empty());
}

TEST(RepairTangentialTest, OffsetMismatchIsInfeasible) {
  const Layout a = Fixture("layout_va.json");
  PathSegment r = a.path.segments[1];
  r.mode = Tangential{0.2};
  const RepairResult res =
      RepairTangential({{a.path.segments[0], r, a.vehicle}, {}});
  EXPECT_FALSE(res.feasible);
  EXPECT_FALSE(res.diagnostics.empty());
}

TEST(RepairExponentialTest, ColinearStraightSegmentsAreUnchanged) {
  const BezierCurve l({Point2(0, 0), Point2(1, 0), Point2(2, 0), Point2(3, 0),
                       Point2(4, 0)});
  const BezierCurve r({Point2(4, 0), Point2(5, 0), Point2(6, 0), Point2(7, 0),
                       Point2(8, 0)});
  const VehicleModel v = DefaultSixWheelVehicle();
  const PathSegment a{"a", l, Tangential{0.2}, 1.5};
  const PathSegment b{"b", r, ExponentialAnticipated{0.2, 1.7}, 1.5};
  const RepairResult res = RepairExponential({{a, b, v}, {}});
  ASSERT_TRUE(res.feasible);
  EXPECT_LT(res.displacement, 1e-9);
}

TEST(RepairExponentialTest, ZeroCurvatureAndPreservedHeading) {
  const Layout a = Fixture("layout_va.json");
  const VehicleModel v = DefaultSixWheelVehicle();
  const double alpha = 14.0 * std::numbers::pi / 180.0;
  const PathSegment l{"a", a.path.segments[0].curve, Tangential{alpha}, 1.5};
  const PathSegment r{"b", a.path.segments[1].curve,
                      ExponentialAnticipated{alpha, 1.7}, 1.5};
  const RepairResult res = RepairExponential({{l, r, v}, {}});
  ASSERT_TRUE(res.feasible);
  ASSERT_EQ(res.multipliers.size(), 4u);
  const CurveJet lj = res.left.curve.Evaluate(1.0, 3);
  const CurveJet rj = res.right.curve.Evaluate(0.0, 3);
  EXPECT_LT(std::abs(Cross(lj.d1, lj.d2)), 1e-9);
  EXPECT_LT(std::abs(Cross(rj.d1, rj.d2)), 1e-9);
  const Point2 t0 = l.curve.Derivative(1.0, 1).normalized();
  EXPECT_LT((lj.d1.normalized() - t0).norm(), 1e-9);
  EXPECT_LT((rj.d1.normalized() - t0).norm(), 1e-9);
  const double b1 = res.beta.beta1;
  EXPECT_NEAR(b1, res.multipliers[0] / res.multipliers[2], 1e-12);
  EXPECT_LT((lj.d3 - b1 * b1 * b1 * 1.7 * 1.7 * rj.d3).norm(),
            1e-9 * (1 + lj.d3.norm()));
  ASSERT_TRUE(res.report_after.exponential);
  EXPECT_TRUE(res.report_after.exponential->passes);
  EXPECT_EQ(res.report_after.verdict, Verdict::kSmooth);
}

TEST(RepairJunctionTest, UnsupportedPairIsInfeasible) {
  const Layout a = Fixture("layout_va.json");
  PathSegment r = a.path.segments[1];
  r.mode = ExponentialDelayed{0.0, 2.0};
  const RepairResult res =
      RepairJunction({{a.path.segments[0], r, a.vehicle}, {}});
  EXPECT_FALSE(res.feasible);
  EXPECT_THROW(RepairTangential({{a.path.segments[0], r, a.vehicle}, {}}),
               std::invalid_argument);
}

}  // namespace
}  // namespace agvpath
