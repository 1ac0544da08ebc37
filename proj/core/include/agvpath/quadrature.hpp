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

#ifndef AGVPATH_QUADRATURE_HPP_
#define AGVPATH_QUADRATURE_HPP_

#include <cmath>
#include <functional>
#include <vector>

namespace agvpath {

// Nodes and weights on [-1, 1].
struct QuadratureRule {
  std::vector<double> nodes;
  std::vector<double> weights;
};

// n-point Gauss-Legendre rule; nodes from Newton iteration on P_n.
QuadratureRule GaussLegendreRule(int n);

// Shared 24-point rule used for arc length and travel time.
const QuadratureRule& GaussLegendre24();

template <typename F>
double IntegrateFixed(F&& f, double a, double b, const QuadratureRule& rule) {
  const double half = 0.5 * (b - a);
  const double mid = 0.5 * (a + b);
  double sum = 0.0;
  for (std::size_t i = 0; i < rule.nodes.size(); ++i) {
    sum += rule.weights[i] * f(mid + half * rule.nodes[i]);
  }
  return sum * half;
}

// Composite rule over `pieces` equal subintervals.
template <typename F>
double IntegrateComposite(F&& f, double a, double b, int pieces,
                          const QuadratureRule& rule) {
  const double h = (b - a) / pieces;
  double sum = 0.0;
  for (int i = 0; i < pieces; ++i) {
    const double lo = a + i * h;
    const double hi = (i + 1 == pieces) ? b : lo + h;
    sum += IntegrateFixed(f, lo, hi, rule);
  }
  return sum;
}

// Recursive bisection until the whole-interval estimate and the sum of the
// two halves differ by less than `tolerance`.
double IntegrateAdaptive(const std::function<double(double)>& f, double a,
                         double b, double tolerance = 1e-9,
                         int max_depth = 40);

}  // namespace agvpath

#endif  // AGVPATH_QUADRATURE_HPP_
