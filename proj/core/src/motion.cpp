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

#include "agvpath/motion.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <stdexcept>

#include "agvpath/errors.hpp"

namespace agvpath {

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;

template <class... Ts>
struct Overloaded : Ts... {
  using Ts::operator()...;
};
template <class... Ts>
Overloaded(Ts...) -> Overloaded<Ts...>;

// coefficient * base^exponent with 0 * inf resolved to 0.
double ScaledPower(double coefficient, double base, double exponent) {
  if (coefficient == 0.0) return 0.0;
  return coefficient * std::pow(base, exponent);
}

// a * b where a vanishing factor wins over an unbounded one.
double LimitProduct(double a, double b) {
  if (a == 0.0 || b == 0.0) return 0.0;
  return a * b;
}

// Parameter map g(u) and its derivatives.
struct Reparameterization {
  double g = 0.0;
  double d1 = 1.0;
  double d2 = 0.0;
  double d3 = 0.0;
};

Reparameterization Delayed(double n, double u) {
  return {std::pow(u, n), ScaledPower(n, u, n - 1.0),
          ScaledPower(n * (n - 1.0), u, n - 2.0),
          ScaledPower(n * (n - 1.0) * (n - 2.0), u, n - 3.0)};
}

Reparameterization Anticipated(double n, double u) {
  const double w = 1.0 - u;
  return {1.0 - std::pow(w, n), ScaledPower(n, w, n - 1.0),
          -ScaledPower(n * (n - 1.0), w, n - 2.0),
          ScaledPower(n * (n - 1.0) * (n - 2.0), w, n - 3.0)};
}

// theta = zeta(g(u)) + alpha by the chain rule.
OrientationJet Compose(const HeadingJet& h, const Reparameterization& g,
                       double alpha) {
  OrientationJet jet;
  jet.theta = h.zeta + alpha;
  jet.dtheta = h.d1 * g.d1;
  jet.ddtheta = h.d2 * g.d1 * g.d1 + LimitProduct(h.d1, g.d2);
  jet.dddtheta = h.d3 * g.d1 * g.d1 * g.d1 +
                 LimitProduct(3.0 * h.d2 * g.d1, g.d2) +
                 LimitProduct(h.d1, g.d3);
  return jet;
}

void CheckParameter(double u) {
  if (!(u >= 0.0 && u <= 1.0)) {
    throw DomainError("orientation parameter outside [0, 1]");
  }
}

}  // namespace

double ModeAlpha(const MotionMode& mode) {
  return std::visit([](const auto& m) { return m.alpha; }, mode);
}

std::string_view ModeTag(const MotionMode& mode) {
  return std::visit(
      Overloaded{
          [](const Tangential&) { return std::string_view("tangential"); },
          [](const Crab&) { return std::string_view("crab"); },
          [](const ExponentialDelayed&) {
            return std::string_view("exponential_delayed");
          },
          [](const ExponentialAnticipated&) {
            return std::string_view("exponential_anticipated");
          }},
      mode);
}

void ValidateMode(const MotionMode& mode) {
  if (!std::isfinite(ModeAlpha(mode))) {
    throw std::invalid_argument("mode alpha must be finite");
  }
  auto check_n = [](double n) {
    if (!std::isfinite(n) || !(n > 1.0)) {
      throw std::invalid_argument("n must exceed 1");
    }
  };
  if (const auto* m = std::get_if<ExponentialDelayed>(&mode)) check_n(m->n);
  if (const auto* m = std::get_if<ExponentialAnticipated>(&mode)) {
    check_n(m->n);
  }
}

HeadingJet EvaluateHeading(const BezierCurve& curve, double u) {
  const Point2 d1 = curve.Derivative(u, 1);
  const double n2 = d1.squaredNorm();
  if (n2 == 0.0) {
    throw SingularParameterizationError("heading undefined: ||C'|| = 0");
  }
  const Point2 d2 = curve.Derivative(u, 2);
  const Point2 d3 = curve.Derivative(u, 3);
  const Point2 d4 = curve.Derivative(u, 4);

  // zeta' = a / N with a = det(C', C''), N = |C'|^2, N' = 2 C'.C''.
  const double a = Cross(d1, d2);
  const double a1 = Cross(d1, d3);
  const double a2 = Cross(d2, d3) + Cross(d1, d4);
  const double dot = d1.dot(d2);
  const double dot1 = d2.squaredNorm() + d1.dot(d3);

  HeadingJet h;
  h.zeta = std::atan2(d1.y(), d1.x());
  h.d1 = a / n2;
  h.d2 = a1 / n2 - 2.0 * a * dot / (n2 * n2);
  h.d3 = a2 / n2 - 4.0 * a1 * dot / (n2 * n2) - 2.0 * a * dot1 / (n2 * n2) +
         8.0 * a * dot * dot / (n2 * n2 * n2);
  return h;
}

OrientationJet LocalOrientation(const MotionMode& mode,
                                const BezierCurve& curve, double u) {
  CheckParameter(u);
  return std::visit(
      Overloaded{
          [&](const Tangential& m) {
            return Compose(EvaluateHeading(curve, u), Reparameterization{u},
                           m.alpha);
          },
          [&](const Crab& m) { return OrientationJet{m.alpha, 0.0, 0.0, 0.0}; },
          [&](const ExponentialDelayed& m) {
            const Reparameterization g = Delayed(m.n, u);
            return Compose(EvaluateHeading(curve, g.g), g, m.alpha);
          },
          [&](const ExponentialAnticipated& m) {
            const Reparameterization g = Anticipated(m.n, u);
            return Compose(EvaluateHeading(curve, g.g), g, m.alpha);
          }},
      mode);
}

void AngleUnwrapper::Append(double raw) {
  if (grid_.empty()) {
    grid_.push_back(raw);
    return;
  }
  const double turns = std::round((grid_.back() - raw) / kTwoPi);
  grid_.push_back(raw + turns * kTwoPi);
}

double AngleUnwrapper::Reference(double u) const {
  if (grid_.empty()) return 0.0;
  const int intervals = static_cast<int>(grid_.size()) - 1;
  if (intervals == 0) return grid_.front();
  const double x = std::clamp(u, 0.0, 1.0) * intervals;
  const int i = std::min(static_cast<int>(x), intervals - 1);
  const double t = x - i;
  return (1.0 - t) * grid_[i] + t * grid_[i + 1];
}

double AngleUnwrapper::Unwrap(double u, double raw) const {
  if (grid_.empty()) return raw;
  const double ref = Reference(u);
  return raw + std::round((ref - raw) / kTwoPi) * kTwoPi;
}

SegmentOrientation::SegmentOrientation(const MotionMode& mode,
                                       const BezierCurve& curve)
    : mode_(mode), curve_(curve) {
  ValidateMode(mode_);
  if (!std::holds_alternative<Crab>(mode_)) {
    heading_ = AngleUnwrapper([this](double s) {
      const Point2 d1 = curve_.Derivative(s, 1);
      if (d1.squaredNorm() == 0.0) {
        throw SingularParameterizationError("singular heading sample");
      }
      return std::atan2(d1.y(), d1.x());
    });
  }
}

OrientationJet SegmentOrientation::At(double u) const {
  OrientationJet jet = LocalOrientation(mode_, curve_, u);
  if (std::holds_alternative<Crab>(mode_)) return jet;
  // The heading grid is indexed by the curve parameter, which differs from u
  // for the exponential modes.
  double s = u;
  if (const auto* m = std::get_if<ExponentialDelayed>(&mode_)) {
    s = Delayed(m->n, u).g;
  } else if (const auto* m = std::get_if<ExponentialAnticipated>(&mode_)) {
    s = Anticipated(m->n, u).g;
  }
  const double alpha = ModeAlpha(mode_);
  jet.theta = heading_.Unwrap(s, jet.theta - alpha) + alpha;
  return jet;
}

OrientationJet SegmentOrientation::AtEnd(CurveEnd end) const {
  return At(end == CurveEnd::kStart ? 0.0 : 1.0);
}

OrientationJet Orientation(const MotionMode& mode, const BezierCurve& curve,
                           double u) {
  return SegmentOrientation(mode, curve).At(u);
}

OrientationJet ModeJetAtJunction(const MotionMode& mode,
                                 const BezierCurve& curve, CurveEnd end) {
  return SegmentOrientation(mode, curve).AtEnd(end);
}

}  // namespace agvpath
