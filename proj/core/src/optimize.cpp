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

#include "agvpath/optimize.hpp"

#include <algorithm>
#include <cmath>
#include <future>
#include <limits>
#include <numeric>
#include <stdexcept>

namespace agvpath {

namespace {

constexpr double kInfinity = std::numeric_limits<double>::infinity();

double Safe(const Objective& f, const Eigen::VectorXd& x, int& count) {
  ++count;
  const double v = f(x);
  return std::isnan(v) ? kInfinity : v;
}

}  // namespace

Eigen::VectorXd Bounds::Clamp(const Eigen::VectorXd& x) const {
  return x.cwiseMax(lower).cwiseMin(upper);
}

OptimizationResult NelderMead(const Objective& f, const Eigen::VectorXd& x0,
                              const Bounds& bounds,
                              const NelderMeadOptions& options) {
  const Eigen::Index n = x0.size();
  if (n == 0 || bounds.lower.size() != n || bounds.upper.size() != n) {
    throw std::invalid_argument("dimension mismatch between start and bounds");
  }
  if ((bounds.upper.array() < bounds.lower.array()).any()) {
    throw std::invalid_argument("empty search box");
  }
  int count = 0;
  std::vector<Eigen::VectorXd> simplex;
  std::vector<double> values;
  simplex.push_back(bounds.Clamp(x0));
  for (Eigen::Index i = 0; i < n; ++i) {
    Eigen::VectorXd v = simplex.front();
    double step = options.initial_step * (bounds.upper(i) - bounds.lower(i));
    if (step == 0.0) step = options.initial_step;
    v(i) = v(i) + step <= bounds.upper(i) ? v(i) + step : v(i) - step;
    simplex.push_back(bounds.Clamp(v));
  }
  for (const auto& v : simplex) values.push_back(Safe(f, v, count));

  std::vector<std::size_t> order(simplex.size());
  bool converged = false;
  while (count < options.max_evaluations) {
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(), [&](auto a, auto b) {
      return values[a] < values[b];
    });
    std::vector<Eigen::VectorXd> s2;
    std::vector<double> v2;
    for (auto k : order) {
      s2.push_back(simplex[k]);
      v2.push_back(values[k]);
    }
    simplex.swap(s2);
    values.swap(v2);

    double diameter = 0.0;
    for (std::size_t k = 1; k < simplex.size(); ++k) {
      diameter = std::max(
          diameter, (simplex[k] - simplex[0]).lpNorm<Eigen::Infinity>());
    }
    const double spread = values.back() - values.front();
    if (diameter < options.x_tolerance ||
        (std::isfinite(spread) && spread < options.f_tolerance &&
         diameter < std::sqrt(options.x_tolerance))) {
      converged = true;
      break;
    }

    Eigen::VectorXd centroid = Eigen::VectorXd::Zero(n);
    for (Eigen::Index k = 0; k < n; ++k) centroid += simplex[k];
    centroid /= static_cast<double>(n);
    const Eigen::VectorXd& worst = simplex.back();

    const Eigen::VectorXd xr = bounds.Clamp(centroid + (centroid - worst));
    const double fr = Safe(f, xr, count);
    if (fr < values.front()) {
      const Eigen::VectorXd xe =
          bounds.Clamp(centroid + 2.0 * (centroid - worst));
      const double fe = Safe(f, xe, count);
      if (fe < fr) {
        simplex.back() = xe;
        values.back() = fe;
      } else {
        simplex.back() = xr;
        values.back() = fr;
      }
      continue;
    }
    if (fr < values[values.size() - 2]) {
      simplex.back() = xr;
      values.back() = fr;
      continue;
    }
    const bool outside = fr < values.back();
    const Eigen::VectorXd xc =
        outside ? bounds.Clamp(centroid + 0.5 * (xr - centroid))
                : bounds.Clamp(centroid + 0.5 * (worst - centroid));
    const double fc = Safe(f, xc, count);
    if (fc < (outside ? fr : values.back())) {
      simplex.back() = xc;
      values.back() = fc;
      continue;
    }
    for (std::size_t k = 1; k < simplex.size(); ++k) {
      simplex[k] = simplex[0] + 0.5 * (simplex[k] - simplex[0]);
      values[k] = Safe(f, simplex[k], count);
    }
  }
  const auto best = std::min_element(values.begin(), values.end()) -
                    values.begin();
  return OptimizationResult{simplex[best], values[best], count, converged};
}

bool BetterResult(const OptimizationResult& a, const OptimizationResult& b) {
  if (a.value != b.value) return a.value < b.value;
  return std::lexicographical_compare(a.x.begin(), a.x.end(), b.x.begin(),
                                      b.x.end());
}

OptimizationResult MultiStart(const Objective& f,
                              const std::vector<Eigen::VectorXd>& starts,
                              const Bounds& bounds,
                              const NelderMeadOptions& options) {
  if (starts.empty()) throw std::invalid_argument("no start points");
  std::vector<std::future<OptimizationResult>> runs;
  runs.reserve(starts.size());
  for (const auto& x0 : starts) {
    runs.push_back(std::async(std::launch::async, [&f, &bounds, &options, x0] {
      return NelderMead(f, x0, bounds, options);
    }));
  }
  std::vector<OptimizationResult> results;
  for (auto& r : runs) results.push_back(r.get());
  return *std::min_element(results.begin(), results.end(), BetterResult);
}

}  // namespace agvpath
