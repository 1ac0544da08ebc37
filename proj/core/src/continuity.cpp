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

#include "agvpath/continuity.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <stdexcept>

#include "agvpath/kinematics.hpp"

namespace agvpath {

namespace {

constexpr double kInfinity = std::numeric_limits<double>::infinity();

double Relative(double defect, double scale) {
  const double r = defect / std::max(1.0, std::abs(scale));
  return std::isnan(r) ? kInfinity : r;
}

bool Below(double value, double tolerance) { return value < tolerance; }

double WrappedAngle(double a) {
  const double two_pi = 2.0 * std::numbers::pi;
  double r = std::fmod(a, two_pi);
  if (r > std::numbers::pi) r -= two_pi;
  if (r < -std::numbers::pi) r += two_pi;
  return std::abs(r);
}

// Fills beta3 by least squares on the third-order curve condition.
double CurveBeta3(const JunctionJets& j, double b1, double b2) {
  const Point2& r1 = j.curve_right.d1;
  const Point2 rest = j.curve_left.d3 - b1 * b1 * b1 * j.curve_right.d3 -
                      3.0 * b1 * b2 * j.curve_right.d2;
  return rest.dot(r1) / r1.squaredNorm();
}

TangentialSection TangentialFromJets(const JunctionContext& ctx,
                                     const JunctionJets& j,
                                     const Tolerances& tol) {
  TangentialSection t;
  t.alpha_mismatch =
      WrappedAngle(ModeAlpha(ctx.left.mode) - ModeAlpha(ctx.right.mode));
  t.curvature_left = Curvature(j.curve_left);
  t.curvature_right = Curvature(j.curve_right);
  t.curvature_residual =
      Relative(std::abs(t.curvature_left - t.curvature_right),
               t.curvature_right);
  t.curvature_rate_left = CurvatureArcDerivative(j.curve_left);
  t.curvature_rate_right = CurvatureArcDerivative(j.curve_right);
  t.curvature_rate_residual =
      Relative(std::abs(t.curvature_rate_left - t.curvature_rate_right),
               t.curvature_rate_right);
  const Point2& l1 = j.curve_left.d1;
  const Point2& r1 = j.curve_right.d1;
  const bool tangent_continuous =
      l1.dot(r1) > 0.0 &&
      Below(std::abs(Cross(l1, r1)) / std::max(1.0, l1.norm() * r1.norm()),
            tol.relative);
  t.passes = Below(t.alpha_mismatch, tol.angle) && tangent_continuous &&
             Below(t.curvature_residual, tol.relative) &&
             Below(t.curvature_rate_residual, tol.relative);
  return t;
}

ExponentialSection ExponentialFromJets(const JunctionContext& ctx,
                                       const JunctionJets& j,
                                       const Tolerances& tol) {
  const auto& mode = std::get<ExponentialAnticipated>(ctx.right.mode);
  ExponentialSection e;
  e.n = mode.n;
  e.alpha_mismatch =
      WrappedAngle(ModeAlpha(ctx.left.mode) - ModeAlpha(ctx.right.mode));
  const Point2& l1 = j.curve_left.d1;
  const Point2& l2 = j.curve_left.d2;
  const Point2& r1 = j.curve_right.d1;
  const Point2& r2 = j.curve_right.d2;
  e.beta1 = l1.dot(r1) / r1.squaredNorm();
  e.curvature_left = Curvature(j.curve_left);
  e.curvature_right = Curvature(j.curve_right);
  e.tangent_alignment =
      std::abs(Cross(l1, r1)) / std::max(1.0, l1.norm() * r1.norm());
  e.left_scalar_multiple =
      std::abs(Cross(l1, l2)) / std::max(1.0, l1.norm() * l2.norm());
  e.right_scalar_multiple =
      std::abs(Cross(r1, r2)) / std::max(1.0, r1.norm() * r2.norm());
  const double factor = e.beta1 * e.beta1 * e.beta1 * e.n * e.n;
  const Point2 rhs = factor * j.curve_right.d3;
  e.third_derivative_residual =
      Relative((j.curve_left.d3 - rhs).norm(), rhs.norm());
  const Point2 tangent = r1.normalized();
  const double rhs_normal = Cross(tangent, rhs);
  e.third_derivative_normal_residual = Relative(
      std::abs(Cross(tangent, j.curve_left.d3) - rhs_normal), rhs_normal);
  e.passes = Below(e.alpha_mismatch, tol.angle) && e.beta1 > 0.0 &&
             Below(e.tangent_alignment, tol.relative) &&
             Below(std::abs(e.curvature_left), tol.relative) &&
             Below(std::abs(e.curvature_right), tol.relative) &&
             Below(e.left_scalar_multiple, tol.relative) &&
             Below(e.right_scalar_multiple, tol.relative) &&
             Below(e.third_derivative_residual, tol.relative);
  return e;
}

}  // namespace

std::string_view VerdictLabel(Verdict verdict) {
  switch (verdict) {
    case Verdict::kSmooth:
      return "smooth";
    case Verdict::kSmoothAtRestOnly:
      return "smooth_at_rest_only";
    case Verdict::kDiscontinuous:
      return "discontinuous";
  }
  return "discontinuous";
}

JunctionJets EvaluateJunction(const JunctionContext& ctx) {
  JunctionJets j;
  j.curve_left = ctx.left.curve.Evaluate(1.0, 3);
  j.curve_right = ctx.right.curve.Evaluate(0.0, 3);
  j.mode_left = LocalOrientation(ctx.left.mode, ctx.left.curve, 1.0);
  j.mode_right = LocalOrientation(ctx.right.mode, ctx.right.curve, 0.0);
  return j;
}

BetaExtraction CurveShapeParameters(const JunctionJets& j) {
  BetaExtraction out;
  const Point2& r1 = j.curve_right.d1;
  const double r2norm = r1.squaredNorm();
  if (r2norm == 0.0 || j.curve_left.d1.squaredNorm() == 0.0) return out;
  const double b1 = j.curve_left.d1.dot(r1) / r2norm;
  if (!(b1 > 0.0)) {
    out.heading_reversal = true;
    return out;
  }
  const double b2 =
      (j.curve_left.d2 - b1 * b1 * j.curve_right.d2).dot(r1) / r2norm;
  out.beta = ShapeParameters{b1, b2, CurveBeta3(j, b1, b2)};
  out.route = BetaRoute::kCurve;
  return out;
}

BetaExtraction ExtractShapeParameters(const JunctionContext& ctx) {
  const JunctionJets j = EvaluateJunction(ctx);
  const double dr = j.mode_right.dtheta;
  const double scale = std::max(
      {1.0, std::abs(j.mode_left.dtheta), std::abs(j.mode_right.dtheta)});
  if (std::isfinite(dr) && std::abs(dr) > 1e-12 * scale) {
    const double b1 = j.mode_left.dtheta / dr;
    const double b2 = (j.mode_left.ddtheta - b1 * b1 * j.mode_right.ddtheta) / dr;
    if (std::isfinite(b1) && !(b1 > 0.0)) {
      BetaExtraction out;
      out.route = BetaRoute::kMode;
      out.heading_reversal = true;
      return out;
    }
    if (std::isfinite(b1) && std::isfinite(b2) &&
        j.curve_right.d1.squaredNorm() > 0.0) {
      BetaExtraction out;
      out.route = BetaRoute::kMode;
      out.beta = ShapeParameters{b1, b2, CurveBeta3(j, b1, b2)};
      return out;
    }
  }
  return CurveShapeParameters(j);
}

bool ContinuityReport::g0_passes() const {
  return Below(g0_position, tolerances.position) &&
         Below(g0_orientation, tolerances.angle);
}

bool ContinuityReport::g1_passes() const {
  return beta.has_value() && Below(curve_g1, tolerances.relative) &&
         Below(mode_g1, tolerances.relative);
}

bool ContinuityReport::g2_passes() const {
  return beta.has_value() && Below(curve_g2, tolerances.relative) &&
         Below(mode_g2, tolerances.relative);
}

ContinuityReport CheckTheorem(const JunctionContext& ctx,
                              const Tolerances& tol) {
  ContinuityReport report;
  report.left_id = ctx.left.id;
  report.right_id = ctx.right.id;
  report.tolerances = tol;
  report.curve_g1 = report.curve_g2 = report.curve_g3 = kInfinity;
  report.mode_g1 = report.mode_g2 = kInfinity;

  JunctionJets j;
  try {
    j = EvaluateJunction(ctx);
    (void)Curvature(j.curve_left);
    (void)Curvature(j.curve_right);
  } catch (const std::exception& e) {
    report.notes.push_back(std::string("junction jets unavailable: ") +
                           e.what());
    return report;
  }

  report.g0_position = (j.curve_left.position - j.curve_right.position).norm();
  report.g0_orientation = WrappedAngle(j.mode_left.theta - j.mode_right.theta);
  if (!Below(report.g0_position, tol.position)) {
    report.notes.push_back(
        "position gap exceeds tolerance; junction analysis refused");
    return report;
  }

  const BetaExtraction curve_beta = CurveShapeParameters(j);
  if (curve_beta.heading_reversal) {
    report.notes.push_back(
        "heading reversal at junction (beta1 <= 0); only a rest point can "
        "join these segments");
  }
  if (curve_beta.beta) {
    const ShapeParameters& b = *curve_beta.beta;
    report.beta = b;
    const auto defects = CheckGeometricContinuity(j.curve_left, j.curve_right,
                                                  b, 3);
    report.curve_g1 = defects[1].relative();
    report.curve_g2 = defects[2].relative();
    report.curve_g3 = defects[3].relative();

    const OrientationJet& ml = j.mode_left;
    const OrientationJet& mr = j.mode_right;
    const double rhs1 = b.beta1 * mr.dtheta;
    report.mode_g1 = Relative(std::abs(ml.dtheta - rhs1), rhs1);
    const double rhs2 =
        b.beta1 * b.beta1 * mr.ddtheta + b.beta2 * mr.dtheta;
    report.mode_g2 = Relative(std::abs(ml.ddtheta - rhs2), rhs2);
  } else if (!curve_beta.heading_reversal) {
    report.notes.push_back("shape parameters indeterminate");
  }

  const BetaExtraction mode_beta = ExtractShapeParameters(ctx);
  report.mode_route = mode_beta.route;
  if (mode_beta.route == BetaRoute::kMode && mode_beta.beta && report.beta) {
    report.mode_beta = mode_beta.beta;
    report.beta_cross_check =
        std::max(Relative(std::abs(mode_beta.beta->beta1 - report.beta->beta1),
                          report.beta->beta1),
                 Relative(std::abs(mode_beta.beta->beta2 - report.beta->beta2),
                          report.beta->beta2));
    if (!Below(report.beta_cross_check, tol.relative)) {
      report.notes.push_back(
          "shape parameters from the motion mode disagree with the curve");
    }
  }

  if (report.g0_passes() && report.g1_passes()) {
    report.verdict = report.g2_passes() ? Verdict::kSmooth
                                        : Verdict::kSmoothAtRestOnly;
  } else {
    report.verdict = Verdict::kDiscontinuous;
  }
  if (!Below(report.g0_orientation, tol.angle)) {
    report.notes.push_back("orientation jumps at junction");
  }

  if (std::holds_alternative<Tangential>(ctx.left.mode) &&
      std::holds_alternative<Tangential>(ctx.right.mode)) {
    TangentialSection t = TangentialFromJets(ctx, j, tol);
    t.agrees_with_theorem = t.passes == (report.verdict == Verdict::kSmooth);
    report.tangential = t;
  }
  if (std::holds_alternative<Tangential>(ctx.left.mode) &&
      std::holds_alternative<ExponentialAnticipated>(ctx.right.mode)) {
    report.exponential = ExponentialFromJets(ctx, j, tol);
  }
  return report;
}

std::vector<WheelAudit> WheelLevelAudit(const JunctionContext& ctx,
                                        const ShapeParameters& beta,
                                        const Tolerances& tol) {
  const JunctionJets j = EvaluateJunction(ctx);
  const double b1 = beta.beta1;
  const double b2 = beta.beta2;
  const Eigen::Rotation2Dd rot(j.mode_right.theta);
  std::vector<WheelAudit> out;
  for (const Wheel& w : ctx.vehicle.wheels) {
    const Point2 q = rot * w.position;
    const Point2 jq(-q.y(), q.x());
    const Point2 denominator = j.curve_right.d1 + j.mode_right.dtheta * jq;
    const double dd = denominator.squaredNorm();
    const Point2 num1 = b1 * j.curve_right.d1 + j.mode_left.dtheta * jq;
    const Point2 num2 =
        b2 * j.curve_right.d1 +
        (j.mode_left.ddtheta - b1 * b1 * j.mode_right.ddtheta) * jq;

    WheelAudit a;
    a.wheel_id = w.id;
    a.beta_w1 = num1.dot(denominator) / dd;
    a.beta_w2 = num2.dot(denominator) / dd;
    a.beta_w1_error = std::abs(a.beta_w1 - b1);
    a.beta_w2_error = std::abs(a.beta_w2 - b2);

    const CurveJet left =
        ComposeWheelJet(j.curve_left, j.mode_left, w.position, 2);
    const CurveJet right =
        ComposeWheelJet(j.curve_right, j.mode_right, w.position, 2);
    const auto defects =
        CheckGeometricContinuity(left, right, ShapeParameters{b1, b2, {}}, 2);
    a.g1 = defects[1].relative();
    a.g2 = defects[2].relative();
    a.passes = Below(a.g1, tol.relative) && Below(a.g2, tol.relative) &&
               Below(Relative(a.beta_w1_error, b1), tol.relative) &&
               Below(Relative(a.beta_w2_error, b2), tol.relative);
    out.push_back(a);
  }
  return out;
}

TangentialSection CheckTangentialSpecial(const JunctionContext& ctx,
                                         const Tolerances& tol) {
  if (!std::holds_alternative<Tangential>(ctx.left.mode) ||
      !std::holds_alternative<Tangential>(ctx.right.mode)) {
    throw std::invalid_argument("both segments must use tangential mode");
  }
  return *CheckTheorem(ctx, tol).tangential;
}

ExponentialSection CheckExponentialSpecial(const JunctionContext& ctx,
                                           const Tolerances& tol) {
  if (!std::holds_alternative<Tangential>(ctx.left.mode) ||
      !std::holds_alternative<ExponentialAnticipated>(ctx.right.mode)) {
    throw std::invalid_argument(
        "expected tangential followed by exponential_anticipated");
  }
  return ExponentialFromJets(ctx, EvaluateJunction(ctx), tol);
}

std::vector<ContinuityReport> CheckPath(const Path& path,
                                        const VehicleModel& vehicle,
                                        const Tolerances& tol) {
  std::vector<ContinuityReport> out;
  for (std::size_t k = 1; k < path.segments.size(); ++k) {
    out.push_back(CheckTheorem(
        JunctionContext{path.segments[k - 1], path.segments[k], vehicle}, tol));
  }
  return out;
}

Verdict AggregateVerdict(const std::vector<ContinuityReport>& reports) {
  Verdict worst = Verdict::kSmooth;
  for (const ContinuityReport& r : reports) {
    if (r.verdict == Verdict::kDiscontinuous) return Verdict::kDiscontinuous;
    if (r.verdict == Verdict::kSmoothAtRestOnly) {
      worst = Verdict::kSmoothAtRestOnly;
    }
  }
  return worst;
}

}  // namespace agvpath
