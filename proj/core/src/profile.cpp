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

#include "agvpath/profile.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

#include "agvpath/errors.hpp"

namespace agvpath {

namespace {

double SegmentTime(double ds, double v0, double v1) {
  const double vs = v0 + v1;
  if (ds == 0.0) return 0.0;
  if (!(vs > 0.0)) {
    throw DomainError("planned speed is zero over a path interval");
  }
  return 2.0 * ds / vs;
}

}  // namespace

double VelocityProfile::length() const {
  return samples.empty() ? 0.0 : samples.back().s;
}

double VelocityProfile::total_time() const {
  return samples.empty() ? 0.0 : samples.back().t;
}

VelocityProfile PlanVelocity(const Path& path, const VehicleModel& vehicle,
                             const ProfileOptions& options) {
  if (path.segments.empty()) throw std::invalid_argument("empty path");
  if (!(options.a_max > 0.0)) throw std::invalid_argument("a_max must be > 0");
  if (options.samples_per_segment < 2) {
    throw std::invalid_argument("need at least 2 samples per segment");
  }
  if (options.v_start < 0.0 || options.v_end < 0.0) {
    throw std::invalid_argument("boundary speeds must be >= 0");
  }

  VelocityProfile profile;
  profile.a_max = options.a_max;
  profile.v_start = options.v_start;
  profile.v_end = options.v_end;
  profile.junctions = CheckPath(path, vehicle, options.tolerances);
  for (const ContinuityReport& r : profile.junctions) {
    if (r.verdict == Verdict::kDiscontinuous && !options.diagnostic) {
      throw DiscontinuousPathError("junction " + r.left_id + " -> " +
                                   r.right_id + " is discontinuous");
    }
  }

  const int n = options.samples_per_segment;
  auto& out = profile.samples;
  double s = 0.0;
  for (std::size_t k = 0; k < path.segments.size(); ++k) {
    const PathSegment& seg = path.segments[k];
    double prev_u = 0.0;
    for (int i = 0; i < n; ++i) {
      const double u = static_cast<double>(i) / (n - 1);
      const SpeedLimitSample lim = SpeedLimit(seg, vehicle, u);
      if (i == 0 && k > 0) {
        // Merge with the junction sample recorded for the left segment.
        ProfileSample& j = out.back();
        if (lim.v_max < j.v_max) {
          j.v_max = lim.v_max;
          j.binding = lim.binding;
        }
        const Verdict verdict = profile.junctions[k - 1].verdict;
        j.rest = verdict == Verdict::kSmoothAtRestOnly;
        continue;
      }
      if (i > 0) s += ArcLength(seg.curve, prev_u, u);
      prev_u = u;
      ProfileSample p;
      p.segment = k;
      p.u = u;
      p.s = s;
      p.v_max = lim.v_max;
      p.binding = lim.binding;
      p.junction = i == n - 1 && k + 1 < path.segments.size();
      out.push_back(p);
    }
  }
  out.front().rest = options.v_start == 0.0;
  out.back().rest = options.v_end == 0.0;

  // Forward then backward pass on v^2, which is linear in s at a_max.
  const double two_a = 2.0 * options.a_max;
  for (std::size_t i = 0; i < out.size(); ++i) {
    double cap = out[i].v_max;
    if (out[i].rest) cap = 0.0;
    if (i == 0) {
      out[i].v = std::min(cap, options.v_start);
    } else {
      const double ds = out[i].s - out[i - 1].s;
      out[i].v = std::min(cap, std::sqrt(out[i - 1].v * out[i - 1].v +
                                         two_a * ds));
    }
  }
  out.back().v = std::min(out.back().v, options.v_end);
  for (std::size_t i = out.size() - 1; i-- > 0;) {
    const double ds = out[i + 1].s - out[i].s;
    out[i].v = std::min(out[i].v,
                        std::sqrt(out[i + 1].v * out[i + 1].v + two_a * ds));
  }

  out.front().t = 0.0;
  for (std::size_t i = 1; i < out.size(); ++i) {
    out[i].t = out[i - 1].t +
               SegmentTime(out[i].s - out[i - 1].s, out[i - 1].v, out[i].v);
  }
  return profile;
}

double TimeAlong(const VelocityProfile& profile, double s) {
  const auto& p = profile.samples;
  if (p.empty() || s < 0.0 || s > p.back().s) {
    throw std::out_of_range("arc length outside the profile");
  }
  auto it = std::upper_bound(
      p.begin(), p.end(), s,
      [](double value, const ProfileSample& q) { return value < q.s; });
  if (it == p.end()) return p.back().t;
  const ProfileSample& b = *it;
  const ProfileSample& a = *(it - 1);
  const double ds = b.s - a.s;
  if (ds == 0.0 || s == a.s) return a.t;
  const double w = (s - a.s) / ds;
  const double v = std::sqrt(a.v * a.v + (b.v * b.v - a.v * a.v) * w);
  return a.t + SegmentTime(s - a.s, a.v, v);
}

}  // namespace agvpath
