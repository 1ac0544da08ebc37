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

#include <algorithm>
#include <cmath>
#include <functional>
#include <limits>
#include <numbers>
#include <optional>
#include <stdexcept>

#include "agvpath/errors.hpp"
#include "agvpath/quadrature.hpp"

namespace agvpath {

namespace {

constexpr double kInfinity = std::numeric_limits<double>::infinity();

struct Candidate {
  BezierCurve left;
  BezierCurve right;
  ShapeParameters beta;
  std::vector<double> multipliers;
};

using Builder = std::function<Candidate(const Eigen::VectorXd&)>;

double SquaredDisplacement(const BezierCurve& a, const BezierCurve& b) {
  double sum = 0.0;
  for (std::size_t i = 0; i < a.control_points().size(); ++i) {
    sum += (a.control_points()[i] - b.control_points()[i]).squaredNorm();
  }
  return sum;
}

double MaxDisplacement(const BezierCurve& a, const BezierCurve& b) {
  double worst = 0.0;
  for (std::size_t i = 0; i < a.control_points().size(); ++i) {
    worst = std::max(worst,
                     (a.control_points()[i] - b.control_points()[i]).norm());
  }
  return worst;
}

void RecordMoves(const std::string& id, const BezierCurve& before,
                 const BezierCurve& after, std::vector<MovedPoint>& out) {
  for (std::size_t i = 0; i < before.control_points().size(); ++i) {
    if (before.control_points()[i] != after.control_points()[i]) {
      out.push_back(MovedPoint{id, static_cast<int>(i),
                               before.control_points()[i],
                               after.control_points()[i]});
    }
  }
}

PathSegment WithCurve(const PathSegment& s, BezierCurve curve) {
  return PathSegment{s.id, std::move(curve), s.mode, s.v_max};
}

RepairResult Infeasible(const RepairProblem& p, std::string why) {
  RepairResult r(p.ctx.left, p.ctx.right);
  r.objective_value = kInfinity;
  r.travel_time = kInfinity;
  r.report_after = CheckTheorem(p.ctx, p.options.tolerances);
  r.diagnostics.push_back(std::move(why));
  return r;
}

// Feasible, unchanged result when the junction already passes.
std::optional<RepairResult> AlreadySmooth(const RepairProblem& p) {
  const ContinuityReport before = CheckTheorem(p.ctx, p.options.tolerances);
  if (before.verdict != Verdict::kSmooth) return std::nullopt;
  if (before.exponential && !before.exponential->passes) return std::nullopt;
  RepairResult r(p.ctx.left, p.ctx.right);
  r.feasible = true;
  if (before.beta) r.beta = *before.beta;
  r.travel_time =
      EstimateTravelTime(p.ctx.left, p.ctx.vehicle, p.options.time_pieces) +
      EstimateTravelTime(p.ctx.right, p.ctx.vehicle, p.options.time_pieces);
  r.objective_value = p.options.objective == RepairObjective::kMinDisplacement
                          ? 0.0
                          : r.travel_time;
  r.report_after = before;
  r.diagnostics.push_back("junction already smooth; unchanged");
  return r;
}

double ObjectiveValue(const RepairProblem& p, const Candidate& c) {
  if (!IsRegular(c.left) || !IsRegular(c.right)) return kInfinity;
  const double moved = SquaredDisplacement(p.ctx.left.curve, c.left) +
                       SquaredDisplacement(p.ctx.right.curve, c.right);
  if (p.options.objective == RepairObjective::kMinDisplacement) return moved;
  double time = EstimateTravelTime(WithCurve(p.ctx.right, c.right),
                                   p.ctx.vehicle, p.options.time_pieces);
  if (!(c.left == p.ctx.left.curve)) {
    time += EstimateTravelTime(WithCurve(p.ctx.left, c.left), p.ctx.vehicle,
                               p.options.time_pieces);
  }
  return time + p.options.displacement_weight * moved;
}

RepairResult Solve(const RepairProblem& p, const Builder& build,
                   const std::vector<Eigen::VectorXd>& starts,
                   const Bounds& bounds) {
  const Objective objective = [&](const Eigen::VectorXd& x) {
    try {
      return ObjectiveValue(p, build(x));
    } catch (const std::exception&) {
      return kInfinity;
    }
  };
  const OptimizationResult best =
      MultiStart(objective, starts, bounds, p.options.search);
  if (!std::isfinite(best.value)) {
    return Infeasible(p, "no admissible shape parameters within bounds");
  }
  Candidate c = build(best.x);
  RepairResult r(WithCurve(p.ctx.left, c.left),
                 WithCurve(p.ctx.right, c.right));
  r.feasible = true;
  r.beta = c.beta;
  r.multipliers = c.multipliers;
  r.objective_value = best.value;
  r.travel_time =
      EstimateTravelTime(r.left, p.ctx.vehicle, p.options.time_pieces) +
      EstimateTravelTime(r.right, p.ctx.vehicle, p.options.time_pieces);
  r.displacement = std::max(MaxDisplacement(p.ctx.left.curve, c.left),
                            MaxDisplacement(p.ctx.right.curve, c.right));
  RecordMoves(p.ctx.left.id, p.ctx.left.curve, c.left, r.moved);
  RecordMoves(p.ctx.right.id, p.ctx.right.curve, c.right, r.moved);
  r.report_after = CheckTheorem(JunctionContext{r.left, r.right, p.ctx.vehicle},
                                p.options.tolerances);
  if (!best.converged) {
    r.diagnostics.push_back("search stopped at the evaluation limit");
  }
  if (r.report_after.verdict != Verdict::kSmooth) {
    r.feasible = false;
    r.diagnostics.push_back("repaired junction is not smooth: " +
                            std::string(VerdictLabel(r.report_after.verdict)));
  }
  return r;
}

// Symmetric interval [-10 c, 10 c] with c = max(1, |init|).
void ScaledBound(double init, double& lo, double& hi) {
  const double c = 10.0 * std::max(1.0, std::abs(init));
  lo = -c;
  hi = c;
}

std::string Precheck(const RepairProblem& p, int left_order,
                     int right_order) {
  const JunctionContext& ctx = p.ctx;
  const double gap = (ctx.left.curve.Point(1.0) - ctx.right.curve.Point(0.0))
                         .norm();
  if (gap >= p.options.tolerances.position) {
    return "junction endpoints do not meet";
  }
  double d = std::remainder(ModeAlpha(ctx.left.mode) - ModeAlpha(ctx.right.mode),
                            2.0 * std::numbers::pi);
  if (std::abs(d) >= p.options.tolerances.angle) {
    return "angle offsets differ; no control-point change can fix this";
  }
  if (ctx.right.curve.degree() <= right_order) {
    return "right curve degree too low to move " +
           std::to_string(right_order) + " points and keep its far end";
  }
  if (left_order > 0 && ctx.left.curve.degree() <= left_order) {
    return "left curve degree too low to move " + std::to_string(left_order) +
           " points and keep its far end";
  }
  if (ctx.left.curve.Derivative(1.0, 1).squaredNorm() == 0.0) {
    return "left curve is singular at the junction";
  }
  return {};
}

}  // namespace

CurveJet RightJetFromLeft(const CurveJet& left, const ShapeParameters& beta,
                          int order) {
  if (!(beta.beta1 > 0.0)) throw std::invalid_argument("beta1 must be > 0");
  const double b1 = beta.beta1;
  const double b2 = beta.beta2;
  CurveJet r;
  r.position = left.position;
  r.d1 = left.d1 / b1;
  if (order >= 2) r.d2 = (left.d2 - b2 * r.d1) / (b1 * b1);
  if (order >= 3) {
    r.d3 = (left.d3 - 3.0 * b1 * b2 * r.d2 - beta.beta3.value_or(0.0) * r.d1) /
           (b1 * b1 * b1);
  }
  return r;
}

BezierCurve DerivativeToControlPoints(const BezierCurve& curve, CurveEnd end,
                                      const CurveJet& target, int order) {
  const int n = curve.degree();
  if (order < 1 || order > 3) throw std::invalid_argument("order must be 1..3");
  if (n < order) throw std::invalid_argument("curve degree below order");
  std::vector<Point2> p = curve.control_points();
  const double n1 = n;
  const double n2 = n1 * (n - 1);
  const double n3 = n2 * (n - 2);
  if (end == CurveEnd::kStart) {
    p[1] = p[0] + target.d1 / n1;
    if (order >= 2) p[2] = target.d2 / n2 + 2.0 * p[1] - p[0];
    if (order >= 3) p[3] = target.d3 / n3 + 3.0 * p[2] - 3.0 * p[1] + p[0];
  } else {
    const int m = n;
    p[m - 1] = p[m] - target.d1 / n1;
    if (order >= 2) p[m - 2] = target.d2 / n2 - p[m] + 2.0 * p[m - 1];
    if (order >= 3) {
      p[m - 3] = p[m] - 3.0 * p[m - 1] + 3.0 * p[m - 2] - target.d3 / n3;
    }
  }
  return BezierCurve(std::move(p));
}

double EstimateTravelTime(const PathSegment& segment,
                          const VehicleModel& vehicle, int pieces) {
  bool stalled = false;
  const double t = IntegrateComposite(
      [&](double u) {
        const double speed = segment.curve.Derivative(u, 1).norm();
        const double v = SpeedLimit(segment, vehicle, u).v_max;
        if (!(v > 0.0)) {
          stalled = true;
          return 0.0;
        }
        return speed / v;
      },
      0.0, 1.0, pieces, GaussLegendre24());
  return stalled ? kInfinity : t;
}

RepairResult RepairTangential(const RepairProblem& p) {
  const JunctionContext& ctx = p.ctx;
  const bool tangential = std::holds_alternative<Tangential>(ctx.left.mode) &&
                          std::holds_alternative<Tangential>(ctx.right.mode);
  const bool crab = std::holds_alternative<Crab>(ctx.left.mode) &&
                    std::holds_alternative<Crab>(ctx.right.mode);
  if (!tangential && !crab) {
    throw std::invalid_argument("expected two tangential or two crab modes");
  }
  const int order = tangential ? 3 : 2;
  const bool both = p.options.side == RepairSide::kBoth;
  if (auto why = Precheck(p, both ? order : 0, order); !why.empty()) {
    return Infeasible(p, why);
  }
  if (auto done = AlreadySmooth(p)) return *std::move(done);

  const CurveJet left = ctx.left.curve.Evaluate(1.0, order);
  const CurveJet right = ctx.right.curve.Evaluate(0.0, order);
  const Point2 normal = Point2(-left.d1.y(), left.d1.x()).normalized();

  // Start from the shape parameters of the unrepaired junction.
  double b1 = left.d1.norm() / std::max(right.d1.norm(), 1e-12);
  double b2 = 0.0;
  double b3 = 0.0;
  const BetaExtraction current =
      CurveShapeParameters(JunctionJets{left, right, {}, {}});
  if (current.beta) {
    b1 = current.beta->beta1;
    b2 = current.beta->beta2;
    b3 = current.beta->beta3.value_or(0.0);
  }
  b1 = std::clamp(b1, 0.1, 10.0);

  const int dims = order + (both ? order - 1 : 0);
  Bounds bounds{Eigen::VectorXd(dims), Eigen::VectorXd(dims)};
  Eigen::VectorXd x0(dims);
  bounds.lower(0) = 0.1;
  bounds.upper(0) = 10.0;
  x0(0) = b1;
  ScaledBound(b2, bounds.lower(1), bounds.upper(1));
  x0(1) = b2;
  if (order == 3) {
    ScaledBound(b3, bounds.lower(2), bounds.upper(2));
    x0(2) = b3;
  }
  if (both) {
    for (int k = 0; k < order - 1; ++k) {
      const double scale = (k == 0 ? left.d2 : left.d3).norm();
      ScaledBound(scale, bounds.lower(order + k), bounds.upper(order + k));
      x0(order + k) = 0.0;
    }
  }

  const Builder build = [&, order, both](const Eigen::VectorXd& x) {
    CurveJet l = left;
    BezierCurve new_left = ctx.left.curve;
    if (both) {
      l.d2 += x(order) * normal;
      if (order == 3) l.d3 += x(order + 1) * normal;
      new_left =
          DerivativeToControlPoints(ctx.left.curve, CurveEnd::kEnd, l, order);
    }
    ShapeParameters beta{x(0), x(1), {}};
    if (order == 3) beta.beta3 = x(2);
    const CurveJet r = RightJetFromLeft(l, beta, order);
    return Candidate{
        std::move(new_left),
        DerivativeToControlPoints(ctx.right.curve, CurveEnd::kStart, r, order),
        beta,
        {}};
  };

  std::vector<Eigen::VectorXd> starts{x0};
  for (double f : {0.8, 1.25}) {
    Eigen::VectorXd s = x0;
    s(0) = std::clamp(b1 * f, 0.1, 10.0);
    starts.push_back(s);
  }
  Eigen::VectorXd zero = x0;
  zero.segment(1, order - 1).setZero();
  starts.push_back(zero);
  return Solve(p, build, starts, bounds);
}

RepairResult RepairExponential(const RepairProblem& p) {
  const JunctionContext& ctx = p.ctx;
  if (!std::holds_alternative<Tangential>(ctx.left.mode) ||
      !std::holds_alternative<ExponentialAnticipated>(ctx.right.mode)) {
    throw std::invalid_argument(
        "expected tangential followed by exponential_anticipated");
  }
  if (auto why = Precheck(p, 2, 3); !why.empty()) return Infeasible(p, why);
  if (auto done = AlreadySmooth(p)) return *std::move(done);
  const double n = std::get<ExponentialAnticipated>(ctx.right.mode).n;

  const CurveJet left = ctx.left.curve.Evaluate(1.0, 2);
  const CurveJet right = ctx.right.curve.Evaluate(0.0, 2);
  const Point2 t = left.d1;  // heading direction is preserved
  const double tt = t.squaredNorm();
  const double i1 = 1.0;
  const double i2 = left.d2.dot(t) / tt;
  const double i3 = std::max(right.d1.norm() / std::sqrt(tt), 1e-3);
  const double i4 = right.d2.dot(t) / tt;

  Bounds bounds{Eigen::VectorXd(4), Eigen::VectorXd(4)};
  bounds.lower(0) = 0.1 * i1;
  bounds.upper(0) = 10.0 * i1;
  ScaledBound(i2, bounds.lower(1), bounds.upper(1));
  bounds.lower(2) = 0.1 * i3;
  bounds.upper(2) = 10.0 * i3;
  ScaledBound(i4, bounds.lower(3), bounds.upper(3));
  Eigen::VectorXd x0(4);
  x0 << i1, i2, i3, i4;

  const Builder build = [&, n](const Eigen::VectorXd& x) {
    CurveJet l = left;
    l.d1 = x(0) * t;
    l.d2 = x(1) * t;
    BezierCurve new_left =
        DerivativeToControlPoints(ctx.left.curve, CurveEnd::kEnd, l, 2);
    const Point2 l3 = new_left.Derivative(1.0, 3);
    const double b1 = x(0) / x(2);
    CurveJet r;
    r.position = right.position;
    r.d1 = x(2) * t;
    r.d2 = x(3) * t;
    r.d3 = l3 / (b1 * b1 * b1 * n * n);
    const double b2 = (x(1) - b1 * b1 * x(3)) / x(2);
    const double b3 =
        (l3 - b1 * b1 * b1 * r.d3 - 3.0 * b1 * b2 * r.d2).dot(r.d1) /
        r.d1.squaredNorm();
    return Candidate{
        std::move(new_left),
        DerivativeToControlPoints(ctx.right.curve, CurveEnd::kStart, r, 3),
        ShapeParameters{b1, b2, b3},
        {x(0), x(1), x(2), x(3)}};
  };

  std::vector<Eigen::VectorXd> starts{x0};
  for (double f : {0.8, 1.25}) {
    Eigen::VectorXd s = x0;
    s(2) = i3 * f;
    starts.push_back(s);
  }
  Eigen::VectorXd flat = x0;
  flat(1) = flat(3) = 0.0;
  starts.push_back(flat);
  return Solve(p, build, starts, bounds);
}

RepairResult RepairJunction(const RepairProblem& p) {
  const MotionMode& a = p.ctx.left.mode;
  const MotionMode& b = p.ctx.right.mode;
  if ((std::holds_alternative<Tangential>(a) &&
       std::holds_alternative<Tangential>(b)) ||
      (std::holds_alternative<Crab>(a) && std::holds_alternative<Crab>(b))) {
    return RepairTangential(p);
  }
  if (std::holds_alternative<Tangential>(a) &&
      std::holds_alternative<ExponentialAnticipated>(b)) {
    return RepairExponential(p);
  }
  return Infeasible(p, "no repair construction for modes " +
                           std::string(ModeTag(a)) + " -> " +
                           std::string(ModeTag(b)));
}

}  // namespace agvpath
