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

#ifndef AGVPATH_PROFILE_HPP_
#define AGVPATH_PROFILE_HPP_

#include <cstddef>
#include <vector>

#include "agvpath/continuity.hpp"
#include "agvpath/kinematics.hpp"
#include "agvpath/path.hpp"
#include "agvpath/vehicle.hpp"

namespace agvpath {

struct ProfileOptions {
  double a_max = 0.5;    // m/s^2
  double v_start = 0.0;  // m/s
  double v_end = 0.0;    // m/s
  int samples_per_segment = 1000;
  // Plan even across discontinuous junctions instead of refusing.
  bool diagnostic = false;
  Tolerances tolerances;
};

struct ProfileSample {
  std::size_t segment = 0;  // index into Path::segments
  double u = 0.0;
  double s = 0.0;      // m, along the whole path
  double v = 0.0;      // m/s, planned
  double v_max = 0.0;  // m/s, speed-limit curve
  double t = 0.0;      // s
  BindingConstraint binding;
  bool junction = false;  // shared end point of two segments
  bool rest = false;      // v forced to zero here
};

struct VelocityProfile {
  std::vector<ProfileSample> samples;
  std::vector<ContinuityReport> junctions;
  double a_max = 0.0;
  double v_start = 0.0;
  double v_end = 0.0;

  double length() const;
  double total_time() const;
};

// Samples the speed-limit curve uniformly in u per segment, then applies a
// forward (acceleration) and backward (deceleration) pass. A junction is one
// sample, labeled with the left segment at u = 1 and limited by the smaller
// one-sided limit. Junctions that are smooth only at rest get v = 0.
// Throws DiscontinuousPathError for discontinuous junctions unless
// options.diagnostic is set, std::invalid_argument for bad options or an
// empty path, and DomainError if the vehicle can never leave a stall.
VelocityProfile PlanVelocity(const Path& path, const VehicleModel& vehicle,
                             const ProfileOptions& options = {});

// Time at arc length s, assuming constant acceleration between samples.
// Throws std::out_of_range outside [0, length()].
double TimeAlong(const VelocityProfile& profile, double s);

}  // namespace agvpath

#endif  // AGVPATH_PROFILE_HPP_
