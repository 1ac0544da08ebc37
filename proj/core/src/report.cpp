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

#include "agvpath/report.hpp"

#include <charconv>
#include <cmath>
#include <numbers>
#include <sstream>

#include <nlohmann/json.hpp>

namespace agvpath {

namespace {

using Json = nlohmann::ordered_json;

constexpr double kToDegrees = 180.0 / std::numbers::pi;

// JSON has no infinity or NaN; those become null.
Json Num(double v) { return std::isfinite(v) ? Json(v) : Json(nullptr); }

Json BetaJson(const std::optional<ShapeParameters>& b) {
  if (!b) return nullptr;
  Json j;
  j["beta1"] = Num(b->beta1);
  j["beta2"] = Num(b->beta2);
  j["beta3"] = b->beta3 ? Num(*b->beta3) : Json(nullptr);
  return j;
}

std::string_view RouteLabel(BetaRoute route) {
  switch (route) {
    case BetaRoute::kMode:
      return "mode";
    case BetaRoute::kCurve:
      return "curve";
    case BetaRoute::kIndeterminate:
      return "indeterminate";
  }
  return "indeterminate";
}

Json ContinuityJson(const JunctionReport& jr) {
  const ContinuityReport& r = jr.report;
  Json j;
  j["id"] = jr.id;
  j["from"] = r.left_id;
  j["to"] = r.right_id;
  j["verdict"] = std::string(VerdictLabel(r.verdict));
  j["failed"] = FailedConditions(r);
  j["g0"] = {{"position_m", Num(r.g0_position)},
             {"orientation_rad", Num(r.g0_orientation)}};
  j["beta"] = BetaJson(r.beta);
  j["mode_beta"] = BetaJson(r.mode_beta);
  j["mode_beta_route"] = std::string(RouteLabel(r.mode_route));
  j["residuals"] = {{"curve_g1", Num(r.curve_g1)},
                    {"curve_g2", Num(r.curve_g2)},
                    {"curve_g3", Num(r.curve_g3)},
                    {"mode_g1", Num(r.mode_g1)},
                    {"mode_g2", Num(r.mode_g2)}};
  if (r.tangential) {
    const TangentialSection& t = *r.tangential;
    j["tangential"] = {
        {"alpha_mismatch_rad", Num(t.alpha_mismatch)},
        {"curvature_left", Num(t.curvature_left)},
        {"curvature_right", Num(t.curvature_right)},
        {"curvature_residual", Num(t.curvature_residual)},
        {"curvature_rate_left", Num(t.curvature_rate_left)},
        {"curvature_rate_right", Num(t.curvature_rate_right)},
        {"curvature_rate_residual", Num(t.curvature_rate_residual)},
        {"passes", t.passes},
        {"agrees_with_theorem", t.agrees_with_theorem}};
  }
  if (r.exponential) {
    const ExponentialSection& e = *r.exponential;
    j["exponential"] = {
        {"alpha_mismatch_rad", Num(e.alpha_mismatch)},
        {"n", Num(e.n)},
        {"beta1", Num(e.beta1)},
        {"curvature_left", Num(e.curvature_left)},
        {"curvature_right", Num(e.curvature_right)},
        {"tangent_alignment", Num(e.tangent_alignment)},
        {"left_scalar_multiple", Num(e.left_scalar_multiple)},
        {"right_scalar_multiple", Num(e.right_scalar_multiple)},
        {"third_derivative_residual", Num(e.third_derivative_residual)},
        {"third_derivative_normal_residual",
         Num(e.third_derivative_normal_residual)},
        {"passes", e.passes}};
  }
  Json wheels = Json::array();
  for (const WheelAudit& w : jr.wheels) {
    wheels.push_back({{"id", w.wheel_id},
                      {"beta_w1", Num(w.beta_w1)},
                      {"beta_w2", Num(w.beta_w2)},
                      {"g1", Num(w.g1)},
                      {"g2", Num(w.g2)},
                      {"passes", w.passes}});
  }
  j["wheels"] = wheels;
  j["notes"] = r.notes;
  return j;
}

std::string Pass(bool ok) { return ok ? "ok" : "FAIL"; }

}  // namespace

std::string FormatNumber(double value) {
  if (std::isnan(value)) return "nan";
  if (std::isinf(value)) return value > 0 ? "inf" : "-inf";
  if (value == 0.0) return "0";
  char buffer[64];
  const auto result = std::to_chars(buffer, buffer + sizeof(buffer), value);
  return std::string(buffer, result.ptr);
}

std::vector<std::string> FailedConditions(const ContinuityReport& r) {
  const Tolerances& tol = r.tolerances;
  std::vector<std::string> out;
  if (!(r.g0_position < tol.position)) out.push_back("g0_position");
  if (!(r.g0_orientation < tol.angle)) out.push_back("g0_orientation");
  if (!r.beta) out.push_back("beta");
  if (!(r.curve_g1 < tol.relative)) out.push_back("curve_g1");
  if (!(r.curve_g2 < tol.relative)) out.push_back("curve_g2");
  if (!(r.mode_g1 < tol.relative)) out.push_back("mode_g1");
  if (!(r.mode_g2 < tol.relative)) out.push_back("mode_g2");
  return out;
}

std::string ReportJson(const std::vector<JunctionReport>& junctions,
                       Verdict overall) {
  Json root;
  root["verdict"] = std::string(VerdictLabel(overall));
  Json list = Json::array();
  for (const JunctionReport& jr : junctions) list.push_back(ContinuityJson(jr));
  root["junctions"] = list;
  return root.dump(2) + "\n";
}

std::string ReportText(const std::vector<JunctionReport>& junctions,
                       Verdict overall) {
  std::ostringstream out;
  for (const JunctionReport& jr : junctions) {
    const ContinuityReport& r = jr.report;
    const Tolerances& tol = r.tolerances;
    out << "junction " << jr.id << " (" << r.left_id << " -> " << r.right_id
        << "): " << VerdictLabel(r.verdict) << "\n";
    out << "  G0 position " << FormatNumber(r.g0_position) << " m ["
        << Pass(r.g0_position < tol.position) << "], orientation "
        << FormatNumber(r.g0_orientation) << " rad ["
        << Pass(r.g0_orientation < tol.angle) << "]\n";
    if (r.beta) {
      out << "  beta1 " << FormatNumber(r.beta->beta1) << ", beta2 "
          << FormatNumber(r.beta->beta2) << ", beta3 "
          << FormatNumber(r.beta->beta3.value_or(0.0)) << "\n";
    } else {
      out << "  beta unavailable\n";
    }
    out << "  curve G1 " << FormatNumber(r.curve_g1) << " ["
        << Pass(r.curve_g1 < tol.relative) << "], G2 "
        << FormatNumber(r.curve_g2) << " [" << Pass(r.curve_g2 < tol.relative)
        << "], G3 " << FormatNumber(r.curve_g3) << "\n";
    out << "  mode G1 " << FormatNumber(r.mode_g1) << " ["
        << Pass(r.mode_g1 < tol.relative) << "], G2 "
        << FormatNumber(r.mode_g2) << " [" << Pass(r.mode_g2 < tol.relative)
        << "]\n";
    if (r.tangential) {
      out << "  tangential: curvature " << FormatNumber(r.tangential->curvature_left)
          << " / " << FormatNumber(r.tangential->curvature_right)
          << ", dkappa/ds " << FormatNumber(r.tangential->curvature_rate_left)
          << " / " << FormatNumber(r.tangential->curvature_rate_right) << " ["
          << Pass(r.tangential->passes) << "]\n";
    }
    if (r.exponential) {
      out << "  exponential: curvature "
          << FormatNumber(r.exponential->curvature_left) << " / "
          << FormatNumber(r.exponential->curvature_right)
          << ", third-derivative residual "
          << FormatNumber(r.exponential->third_derivative_residual)
          << " (normal "
          << FormatNumber(r.exponential->third_derivative_normal_residual)
          << ") [" << Pass(r.exponential->passes) << "]\n";
    }
    for (const std::string& note : r.notes) out << "  note: " << note << "\n";
  }
  out << "overall: " << VerdictLabel(overall) << "\n";
  return out.str();
}

std::string RepairJson(const std::string& junction_id,
                       const RepairResult& result) {
  Json j;
  j["junction"] = junction_id;
  j["feasible"] = result.feasible;
  j["beta"] = BetaJson(result.beta);
  Json multipliers = Json::array();
  for (double x : result.multipliers) multipliers.push_back(Num(x));
  j["multipliers"] = multipliers;
  j["objective_value"] = Num(result.objective_value);
  j["travel_time_s"] = Num(result.travel_time);
  j["max_displacement_m"] = Num(result.displacement);
  Json moved = Json::array();
  for (const MovedPoint& m : result.moved) {
    moved.push_back({{"segment", m.segment_id},
                     {"index", m.index},
                     {"before", {m.before.x(), m.before.y()}},
                     {"after", {m.after.x(), m.after.y()}}});
  }
  j["moved"] = moved;
  j["verdict_after"] = std::string(VerdictLabel(result.report_after.verdict));
  j["diagnostics"] = result.diagnostics;
  return j.dump();
}

std::string ProfileCsv(const Path& path, const VehicleModel& vehicle,
                       const VelocityProfile& profile,
                       const KinematicsOptions& options) {
  std::vector<SegmentKinematics> kinematics;
  kinematics.reserve(path.segments.size());
  for (const PathSegment& s : path.segments) {
    kinematics.emplace_back(s, vehicle, options);
  }
  std::string out = "segment,u,s_m,t_s,v_mps,v_max_mps,binding";
  for (const Wheel& w : vehicle.wheels) {
    for (const char* c : {"_delta_deg", "_R_v", "_R_omega", "_kappa_w",
                          "_v_w_mps", "_omega_w_degps"}) {
      out += "," + w.id + c;
    }
  }
  out += "\n";

  const std::size_t nw = vehicle.wheels.size();
  // Per-wheel 2 pi shift keeping steering continuous across segments.
  std::vector<double> shift(nw, 0.0);
  std::vector<double> last(nw, 0.0);
  std::size_t current = static_cast<std::size_t>(-1);
  for (const ProfileSample& p : profile.samples) {
    if (p.segment != current) {
      current = p.segment;
      for (std::size_t w = 0; w < nw && current > 0; ++w) {
        const double start = kinematics[current].State(w, 0.0).steering;
        shift[w] = std::round((last[w] - start) / (2.0 * std::numbers::pi)) *
                   2.0 * std::numbers::pi;
      }
    }
    out += path.segments[p.segment].id + "," + FormatNumber(p.u) + "," +
           FormatNumber(p.s) + "," + FormatNumber(p.t) + "," +
           FormatNumber(p.v) + "," + FormatNumber(p.v_max) + "," +
           BindingLabel(p.binding);
    for (std::size_t w = 0; w < nw; ++w) {
      const WheelState st = kinematics[p.segment].State(w, p.u);
      const double delta = st.steering + shift[w];
      last[w] = delta;
      const bool defined = st.curvature_defined;
      out += "," + FormatNumber(delta * kToDegrees);
      out += "," + FormatNumber(st.ratio_v);
      out += "," + (defined ? FormatNumber(st.ratio_omega) : std::string());
      out += "," + (defined ? FormatNumber(st.curvature) : std::string());
      out += "," + FormatNumber(p.v * st.ratio_v);
      out += "," + (defined ? FormatNumber(p.v * st.ratio_omega * kToDegrees)
                            : std::string());
    }
    out += "\n";
  }
  return out;
}

}  // namespace agvpath
