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

#ifndef AGVPATH_REPAIR_HPP_
#define AGVPATH_REPAIR_HPP_

#include <string>
#include <utility>
#include <vector>

#include "agvpath/continuity.hpp"
#include "agvpath/curve.hpp"
#include "agvpath/kinematics.hpp"
#include "agvpath/optimize.hpp"
#include "agvpath/path.hpp"
#include "agvpath/vehicle.hpp"

namespace agvpath {

enum class RepairObjective { kMinTravelTime, kMinDisplacement };

// Which segments may change. kRight moves the right curve's control points
// next to the junction; kBoth also moves the left curve's.
enum class RepairSide { kRight, kBoth };

struct RepairOptions {
  RepairObjective objective = RepairObjective::kMinTravelTime;
  RepairSide side = RepairSide::kRight;
  NelderMeadOptions search{1500, 1e-15, 1e-12, 0.05};
  int time_pieces = 8;  // composite quadrature pieces per segment
  // Added to travel time, s/m^2; makes flat objectives pick the least motion.
  double displacement_weight = 1e-6;
  Tolerances tolerances;
};

struct RepairProblem {
  JunctionContext ctx;
  RepairOptions options;
};

struct MovedPoint {
  std::string segment_id;
  int index = 0;
  Point2 before = Point2::Zero();
  Point2 after = Point2::Zero();
};

struct RepairResult {
  RepairResult(PathSegment l, PathSegment r)
      : left(std::move(l)), right(std::move(r)) {}

  bool feasible = false;
  PathSegment left;
  PathSegment right;
  ShapeParameters beta;
  std::vector<double> multipliers;  // exponential repair only
  double objective_value = 0.0;     // s or m^2 depending on the objective
  double travel_time = 0.0;         // s, both segments
  double displacement = 0.0;        // m, largest control-point move
  ContinuityReport report_after;
  std::vector<MovedPoint> moved;
  std::vector<std::string> diagnostics;
};

// Right-side jet from the left jet and shape parameters, orders 1..order:
//   r1 = l1 / b1
//   r2 = (l2 - b2 r1) / b1^2
//   r3 = (l3 - 3 b1 b2 r2 - b3 r1) / b1^3
// The position is copied from the left jet.
CurveJet RightJetFromLeft(const CurveJet& left, const ShapeParameters& beta,
                          int order);

// Moves the `order` control points next to `end` so the endpoint derivatives
// up to `order` equal the target's; the end point itself stays fixed.
// Throws std::invalid_argument if order is outside 1..3 or exceeds the degree.
BezierCurve DerivativeToControlPoints(const BezierCurve& curve, CurveEnd end,
                                      const CurveJet& target, int order);

// Integral of ds / v_max(s) over the segment, by composite Gauss-Legendre in
// u. +infinity when the speed limit vanishes at a quadrature node.
double EstimateTravelTime(const PathSegment& segment,
                          const VehicleModel& vehicle, int pieces = 8);

// Both modes tangential with equal offsets: searches (b1, b2, b3) and
// prescribes the right curve's jet up to third order. With kBoth, two normal
// offsets of the left jet's second and third derivatives join the search.
// Both modes crab: the same up to second order. Throws std::invalid_argument
// for other mode pairs.
RepairResult RepairTangential(const RepairProblem& problem);

// Tangential into exponential-anticipated: first and second derivatives on
// both sides become multiples x1..x4 of the left end tangent, zeroing the
// junction curvatures, and the right third derivative is set to
// l3 / (b1^3 n^2) with b1 = x1 / x3. Throws std::invalid_argument for other
// mode pairs.
RepairResult RepairExponential(const RepairProblem& problem);

// Dispatches on the mode pair; unsupported pairs yield an infeasible result.
RepairResult RepairJunction(const RepairProblem& problem);

}  // namespace agvpath

#endif  // AGVPATH_REPAIR_HPP_
