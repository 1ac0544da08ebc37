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

#include <atomic>
#include <cmath>
#include <limits>

#include <gtest/gtest.h>

namespace agvpath {
namespace {

Bounds Box(int n, double lo, double hi) {
  return Bounds{Eigen::VectorXd::Constant(n, lo), Eigen::VectorXd::Constant(n, hi)};
}

TEST(NelderMeadTest, MinimizesRosenbrock) {
  const Objective rosenbrock = [](const Eigen::VectorXd& x) {
    return 100.0 * std::pow(x(1) - x(0) * x(0), 2) + std::pow(1.0 - x(0), 2);
  };
  NelderMeadOptions options;
  options.max_evaluations = 20000;
  const auto r = NelderMead(rosenbrock, Eigen::Vector2d(-1.2, 1.0),
                            Box(2, -5, 5), options);
  EXPECT_NEAR(r.x(0), 1.0, 1e-5);
  EXPECT_NEAR(r.x(1), 1.0, 1e-5);
  EXPECT_TRUE(r.converged);
}

TEST(NelderMeadTest, StaysInsideBounds) {
  // Unconstrained minimum at (3, -3) lies outside the box.
  const Objective f = [](const Eigen::VectorXd& x) {
    return std::pow(x(0) - 3.0, 2) + std::pow(x(1) + 3.0, 2);
  };
  const auto r = NelderMead(f, Eigen::Vector2d(0, 0), Box(2, -1, 1));
  EXPECT_NEAR(r.x(0), 1.0, 1e-6);
  EXPECT_NEAR(r.x(1), -1.0, 1e-6);
}

TEST(NelderMeadTest, TreatsNanAsInfinity) {
  const Objective f = [](const Eigen::VectorXd& x) {
    return x(0) < 0.0 ? std::numeric_limits<double>::quiet_NaN()
                      : (x(0) - 0.5) * (x(0) - 0.5);
  };
  const auto r = NelderMead(f, Eigen::VectorXd::Constant(1, 0.9), Box(1, -1, 1));
  EXPECT_NEAR(r.x(0), 0.5, 1e-6);
}

TEST(NelderMeadTest, RejectsMismatchedBounds) {
  const Objective f = [](const Eigen::VectorXd&) { return 0.0; };
  EXPECT_THROW(NelderMead(f, Eigen::Vector2d(0, 0), Box(3, -1, 1)),
               std::invalid_argument);
}

TEST(MultiStartTest, PicksGlobalMinimumOfTwoWells) {
  // Wells at -2 (depth 0) and +2 (depth 1).
  const Objective f = [](const Eigen::VectorXd& x) {
    const double a = std::pow(x(0) + 2.0, 2);
    const double b = std::pow(x(0) - 2.0, 2) + 1.0;
    return std::min(a, b);
  };
  std::vector<Eigen::VectorXd> starts{Eigen::VectorXd::Constant(1, 3.0),
                                      Eigen::VectorXd::Constant(1, -3.0)};
  const auto r = MultiStart(f, starts, Box(1, -5, 5));
  EXPECT_NEAR(r.x(0), -2.0, 1e-6);
}

TEST(MultiStartTest, TiesBreakLexicographically) {
  OptimizationResult a{Eigen::Vector2d(0.0, 1.0), 1.0, 0, true};
  OptimizationResult b{Eigen::Vector2d(0.0, 2.0), 1.0, 0, true};
  OptimizationResult c{Eigen::Vector2d(-5.0, 9.0), 2.0, 0, true};
  EXPECT_TRUE(BetterResult(a, b));
  EXPECT_FALSE(BetterResult(b, a));
  EXPECT_TRUE(BetterResult(b, c));
}

TEST(MultiStartTest, DeterministicAcrossRuns) {
  const Objective flat = [](const Eigen::VectorXd& x) {
    return std::floor(std::abs(x(0)));  // plateaus
  };
  std::vector<Eigen::VectorXd> starts;
  for (double s : {0.9, -0.5, 0.3, 0.7}) {
    starts.push_back(Eigen::VectorXd::Constant(1, s));
  }
  const auto first = MultiStart(flat, starts, Box(1, -1, 1));
  for (int i = 0; i < 5; ++i) {
    const auto again = MultiStart(flat, starts, Box(1, -1, 1));
    EXPECT_EQ(again.x(0), first.x(0));
    EXPECT_EQ(again.value, first.value);
  }
}

}  // namespace
}  // namespace agvpath
