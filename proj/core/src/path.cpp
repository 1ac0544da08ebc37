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

#include "agvpath/path.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

namespace agvpath {

double MinimumParametricSpeed(const BezierCurve& curve, int samples) {
  double best = std::numeric_limits<double>::infinity();
  for (int i = 0; i <= samples; ++i) {
    const double u = static_cast<double>(i) / samples;
    best = std::min(best, curve.Derivative(u, 1).norm());
  }
  return best;
}

bool IsRegular(const BezierCurve& curve, double threshold) {
  return MinimumParametricSpeed(curve) > threshold;
}

std::vector<PathViolation> ValidatePath(const Path& path,
                                        double gap_tolerance) {
  std::vector<PathViolation> out;
  if (path.segments.empty()) {
    out.push_back({"", "path has no segments"});
    return out;
  }
  for (std::size_t k = 0; k < path.segments.size(); ++k) {
    const PathSegment& seg = path.segments[k];
    if (!IsRegular(seg.curve)) {
      out.push_back({seg.id, "curve is not regularly parameterized"});
    }
    try {
      ValidateMode(seg.mode);
    } catch (const std::invalid_argument& e) {
      out.push_back({seg.id, e.what()});
    }
    if (!(seg.v_max > 0.0)) {
      out.push_back({seg.id, "v_max must be positive"});
    }
    if (k > 0) {
      const Point2 a = path.segments[k - 1].curve.control_points().back();
      const Point2 b = seg.curve.control_points().front();
      if (!((a - b).norm() < gap_tolerance)) {
        out.push_back({seg.id, "segment does not start where " +
                                   path.segments[k - 1].id + " ends"});
      }
    }
  }
  return out;
}

}  // namespace agvpath
