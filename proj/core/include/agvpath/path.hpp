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

#ifndef AGVPATH_PATH_HPP_
#define AGVPATH_PATH_HPP_

#include <string>
#include <vector>

#include "agvpath/curve.hpp"
#include "agvpath/motion.hpp"

namespace agvpath {

// One path segment: nominal curve of the tracking point, orientation law,
// and segment speed limit (m/s).
struct PathSegment {
  std::string id;
  BezierCurve curve;
  MotionMode mode;
  double v_max = 0.0;
};

struct Path {
  std::vector<PathSegment> segments;
};

// Minimum of ||C'(u)|| over 1024 uniform samples plus both endpoints.
double MinimumParametricSpeed(const BezierCurve& curve, int samples = 1024);

// True when MinimumParametricSpeed() exceeds `threshold`.
bool IsRegular(const BezierCurve& curve, double threshold = 1e-9);

struct PathViolation {
  std::string segment_id;
  std::string message;
};

// Checks segment invariants (regular curve, valid mode, v_max > 0), a
// non-empty segment list, and junction position gaps below `gap_tolerance`.
std::vector<PathViolation> ValidatePath(const Path& path,
                                        double gap_tolerance = 1e-9);

}  // namespace agvpath

#endif  // AGVPATH_PATH_HPP_
