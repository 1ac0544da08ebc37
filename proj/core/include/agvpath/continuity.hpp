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

#ifndef AGVPATH_CONTINUITY_HPP_
#define AGVPATH_CONTINUITY_HPP_

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "agvpath/curve.hpp"
#include "agvpath/motion.hpp"
#include "agvpath/path.hpp"
#include "agvpath/vehicle.hpp"

namespace agvpath {

// position in meters, angle in radians; derivative conditions are relative:
// defect / max(1, |right-hand side|).
struct Tolerances {
  double position = 1e-6;
  double angle = 1e-8;
  double relative = 1e-6;
};

enum class Verdict { kSmooth, kSmoothAtRestOnly, kDiscontinuous };

std::string_view VerdictLabel(Verdict verdict);

// The junction between the end (u = 1) of `left` and the start (u = 0) of
// `right`. Holds references; the segments and vehicle must outlive it.
struct JunctionContext {
  const PathSegment& left;
  const PathSegment& right;
  const VehicleModel& vehicle;
};

// One-sided jets at the junction; orientation on the principal branch.
struct JunctionJets {
  CurveJet curve_left;
  CurveJet curve_right;
  OrientationJet mode_left;
  OrientationJet mode_right;
};

JunctionJets EvaluateJunction(const JunctionContext& ctx);

enum class BetaRoute { kMode, kCurve, kIndeterminate };

struct BetaExtraction {
  std::optional<ShapeParameters> beta;
  BetaRoute route = BetaRoute::kIndeterminate;
  // The candidate beta1 was <= 0: the heading reverses at the junction.
  bool heading_reversal = false;
};

// Shape parameters from the curve jets alone: beta1 by projecting C'(u-)
// onto C'(u+), beta2 and beta3 by least squares on the second- and
// third-order conditions.
BetaExtraction CurveShapeParameters(const JunctionJets& jets);

// Mode route first: beta1 = theta'(u-)/theta'(u+),
// beta2 = (theta''(u-) - beta1^2 theta''(u+)) / theta'(u+). Falls back to
// CurveShapeParameters() when theta'(u+) vanishes or the mode route is not
// finite. beta3 is always the curve least-squares value.
BetaExtraction ExtractShapeParameters(const JunctionContext& ctx);

// Both modes tangential: mode G1 <=> equal curvature, mode G2 <=> equal
// d(kappa)/ds.
struct TangentialSection {
  double alpha_mismatch = 0.0;  // rad, wrapped
  double curvature_left = 0.0;
  double curvature_right = 0.0;
  double curvature_residual = 0.0;  // relative
  double curvature_rate_left = 0.0;
  double curvature_rate_right = 0.0;
  double curvature_rate_residual = 0.0;  // relative
  bool passes = false;
  bool agrees_with_theorem = false;
};

// Tangential into exponential-anticipated: both endpoint curvatures vanish
// and C'''(1-) = beta1^3 n^2 C'''(0+).
struct ExponentialSection {
  double alpha_mismatch = 0.0;
  double n = 0.0;
  double beta1 = 0.0;  // from curve G1
  double curvature_left = 0.0;
  double curvature_right = 0.0;
  double tangent_alignment = 0.0;      // |det(C1', C2')| normalized
  double left_scalar_multiple = 0.0;   // |det(C1', C1'')| normalized
  double right_scalar_multiple = 0.0;  // |det(C2', C2'')| normalized
  double third_derivative_residual = 0.0;  // full vector, relative
  // Component normal to the junction tangent only; this is the part the
  // mode G2 condition constrains.
  double third_derivative_normal_residual = 0.0;
  bool passes = false;
};

struct ContinuityReport {
  std::string left_id;
  std::string right_id;
  double g0_position = 0.0;     // m
  double g0_orientation = 0.0;  // rad, wrapped into [0, pi]
  std::optional<ShapeParameters> beta;       // used for all residuals
  std::optional<ShapeParameters> mode_beta;  // mode-route cross-check
  BetaRoute mode_route = BetaRoute::kIndeterminate;
  double beta_cross_check = 0.0;  // max relative beta disagreement
  double curve_g1 = 0.0;
  double curve_g2 = 0.0;
  double curve_g3 = 0.0;  // informational
  double mode_g1 = 0.0;
  double mode_g2 = 0.0;
  Verdict verdict = Verdict::kDiscontinuous;
  std::vector<std::string> notes;
  std::optional<TangentialSection> tangential;
  std::optional<ExponentialSection> exponential;
  Tolerances tolerances;

  bool g0_passes() const;
  bool g1_passes() const;
  bool g2_passes() const;
};

// Evaluates position, orientation, curve G1/G2 and mode G1/G2 with one
// shared set of shape parameters. smooth iff all hold; smooth_at_rest_only
// iff G0 and G1 hold but G2 does not.
ContinuityReport CheckTheorem(const JunctionContext& ctx,
                              const Tolerances& tol = {});

struct WheelAudit {
  std::string wheel_id;
  double beta_w1 = 0.0;
  double beta_w2 = 0.0;
  double beta_w1_error = 0.0;  // |beta_w1 - beta1|
  double beta_w2_error = 0.0;  // |beta_w2 - beta2|
  double g1 = 0.0;             // wheel-curve G1, relative, shared beta
  double g2 = 0.0;             // wheel-curve G2, relative, shared beta
  bool passes = false;
};

// Per-wheel shape parameters isolated from the wheel-curve conditions, and
// wheel-curve G1/G2 residuals under the vehicle's shape parameters.
std::vector<WheelAudit> WheelLevelAudit(const JunctionContext& ctx,
                                        const ShapeParameters& beta,
                                        const Tolerances& tol = {});

// Throws std::invalid_argument unless both modes are tangential.
TangentialSection CheckTangentialSpecial(const JunctionContext& ctx,
                                         const Tolerances& tol = {});

// Throws std::invalid_argument unless left is tangential and right is
// exponential-anticipated.
ExponentialSection CheckExponentialSpecial(const JunctionContext& ctx,
                                           const Tolerances& tol = {});

// One report per interior junction of a linear path.
std::vector<ContinuityReport> CheckPath(const Path& path,
                                        const VehicleModel& vehicle,
                                        const Tolerances& tol = {});

// kSmooth if all reports are smooth, kSmoothAtRestOnly if the worst is
// rest-only, else kDiscontinuous. Empty input is smooth.
Verdict AggregateVerdict(const std::vector<ContinuityReport>& reports);

}  // namespace agvpath

#endif  // AGVPATH_CONTINUITY_HPP_
