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

#ifndef AGVPATH_OPTIMIZE_HPP_
#define AGVPATH_OPTIMIZE_HPP_

#include <functional>
#include <vector>

#include <Eigen/Core>

namespace agvpath {

// Box constraints; lower(i) <= upper(i).
struct Bounds {
  Eigen::VectorXd lower;
  Eigen::VectorXd upper;

  Eigen::VectorXd Clamp(const Eigen::VectorXd& x) const;
};

struct NelderMeadOptions {
  int max_evaluations = 3000;
  double f_tolerance = 1e-14;  // spread of simplex values
  double x_tolerance = 1e-12;  // simplex diameter
  // Initial simplex edge as a fraction of each bound's width.
  double initial_step = 0.05;
};

struct OptimizationResult {
  Eigen::VectorXd x;
  double value = 0.0;
  int evaluations = 0;
  bool converged = false;
};

using Objective = std::function<double(const Eigen::VectorXd&)>;

// Derivative-free simplex search; trial points are projected into the box.
// Non-finite objective values are treated as +infinity.
OptimizationResult NelderMead(const Objective& f, const Eigen::VectorXd& x0,
                              const Bounds& bounds,
                              const NelderMeadOptions& options = {});

// Runs NelderMead() from every start concurrently and returns the best result:
// lowest value, ties broken by lexicographic order of x. The objective must be
// safe to call from several threads.
OptimizationResult MultiStart(const Objective& f,
                              const std::vector<Eigen::VectorXd>& starts,
                              const Bounds& bounds,
                              const NelderMeadOptions& options = {});

// True when a is preferred over b under the MultiStart() tie-break.
bool BetterResult(const OptimizationResult& a, const OptimizationResult& b);

}  // namespace agvpath

#endif  // AGVPATH_OPTIMIZE_HPP_
