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

#include "agvpath/quadrature.hpp"

#include <numbers>
#include <stdexcept>

namespace agvpath {

QuadratureRule GaussLegendreRule(int n) {
  if (n < 1) throw std::invalid_argument("quadrature order must be >= 1");
  QuadratureRule rule;
  rule.nodes.resize(n);
  rule.weights.resize(n);
  const int m = (n + 1) / 2;
  for (int i = 0; i < m; ++i) {
    double z = std::cos(std::numbers::pi * (i + 0.75) / (n + 0.5));
    double dp = 0.0;
    for (int iter = 0; iter < 100; ++iter) {
      double p1 = 1.0;
      double p2 = 0.0;
      for (int j = 1; j <= n; ++j) {
        const double p3 = p2;
        p2 = p1;
        p1 = ((2.0 * j - 1.0) * z * p2 - (j - 1.0) * p3) / j;
      }
      dp = n * (z * p1 - p2) / (z * z - 1.0);
      const double z_prev = z;
      z = z_prev - p1 / dp;
      if (std::abs(z - z_prev) < 1e-15) break;
    }
    rule.nodes[i] = -z;
    rule.nodes[n - 1 - i] = z;
    const double w = 2.0 / ((1.0 - z * z) * dp * dp);
    rule.weights[i] = w;
    rule.weights[n - 1 - i] = w;
  }
  return rule;
}

const QuadratureRule& GaussLegendre24() {
  static const QuadratureRule rule = GaussLegendreRule(24);
  return rule;
}

namespace {

double AdaptiveStep(const std::function<double(double)>& f, double a,
                    double b, double whole, double tolerance, int depth) {
  const double mid = 0.5 * (a + b);
  const double left = IntegrateFixed(f, a, mid, GaussLegendre24());
  const double right = IntegrateFixed(f, mid, b, GaussLegendre24());
  if (depth <= 0 || std::abs(left + right - whole) < tolerance) {
    return left + right;
  }
  return AdaptiveStep(f, a, mid, left, 0.5 * tolerance, depth - 1) +
         AdaptiveStep(f, mid, b, right, 0.5 * tolerance, depth - 1);
}

}  // namespace

double IntegrateAdaptive(const std::function<double(double)>& f, double a,
                         double b, double tolerance, int max_depth) {
  if (a == b) return 0.0;
  const double whole = IntegrateFixed(f, a, b, GaussLegendre24());
  return AdaptiveStep(f, a, b, whole, tolerance, max_depth);
}

}  // namespace agvpath
