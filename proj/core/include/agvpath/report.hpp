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

#ifndef AGVPATH_REPORT_HPP_
#define AGVPATH_REPORT_HPP_

#include <string>
#include <vector>

#include "agvpath/continuity.hpp"
#include "agvpath/kinematics.hpp"
#include "agvpath/path.hpp"
#include "agvpath/profile.hpp"
#include "agvpath/repair.hpp"
#include "agvpath/vehicle.hpp"

namespace agvpath {

// Shortest decimal that round-trips; "nan", "inf", "-inf" otherwise. Negative
// zero prints as "0".
std::string FormatNumber(double value);

struct JunctionReport {
  std::string id;
  ContinuityReport report;
  std::vector<WheelAudit> wheels;  // empty when beta is unavailable
};

// Names of the failed conditions: g0_position, g0_orientation, beta,
// curve_g1, curve_g2, mode_g1, mode_g2.
std::vector<std::string> FailedConditions(const ContinuityReport& report);

// Overall verdict plus one entry per junction. Text and JSON carry the same
// verdicts.
std::string ReportJson(const std::vector<JunctionReport>& junctions,
                       Verdict overall);
std::string ReportText(const std::vector<JunctionReport>& junctions,
                       Verdict overall);

// Repair summary: parameters, objective and moved control points.
std::string RepairJson(const std::string& junction_id,
                       const RepairResult& result);

// Header: segment,u,s_m,t_s,v_mps,v_max_mps,binding followed, for each
// wheel W, by W_delta_deg,W_R_v,W_R_omega,W_kappa_w,W_v_w_mps,
// W_omega_w_degps. Steering angles are continuous across segments. Values
// undefined at a pivoting wheel are left empty. LF line endings.
std::string ProfileCsv(const Path& path, const VehicleModel& vehicle,
                       const VelocityProfile& profile,
                       const KinematicsOptions& options = {});

}  // namespace agvpath

#endif  // AGVPATH_REPORT_HPP_
