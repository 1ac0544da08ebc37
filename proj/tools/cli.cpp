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

#include "cli.hpp"

#include <fstream>
#include <numbers>
#include <optional>
#include <sstream>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "agvpath/continuity.hpp"
#include "agvpath/errors.hpp"
#include "agvpath/layout.hpp"
#include "agvpath/profile.hpp"
#include "agvpath/repair.hpp"
#include "agvpath/report.hpp"

namespace agvpath::cli {

namespace {

struct CheckArgs {
  std::string layout;
  std::string format = "text";
  std::optional<double> tol_position;
  std::optional<double> tol_angle_deg;
  std::optional<double> tol_relative;
  bool allow_rest = false;
};

struct RepairArgs {
  std::string layout;
  std::string junction;
  std::string objective = "travel_time";
  std::string side = "right";
  std::string out;
};

struct ProfileArgs {
  std::string layout;
  int samples = 1000;
  double a_max = 0.5;
  double v_start = 0.0;
  double v_end = 0.0;
  std::string out;
  bool diagnostic = false;
};

void WriteOutput(const std::string& path, const std::string& text,
                 std::ostream& out) {
  if (path.empty() || path == "-") {
    out << text;
    return;
  }
  std::ofstream file(path, std::ios::binary);
  if (!file) throw std::runtime_error("cannot write " + path);
  file << text;
}

int Check(const CheckArgs& a, std::ostream& out) {
  const LayoutDocument doc = ReadLayoutFile(a.layout);
  Layout layout = BuildLayout(doc);
  if (a.tol_position) layout.tolerances.position = *a.tol_position;
  if (a.tol_angle_deg) {
    layout.tolerances.angle = *a.tol_angle_deg * std::numbers::pi / 180.0;
  }
  if (a.tol_relative) layout.tolerances.relative = *a.tol_relative;

  std::vector<JunctionReport> reports;
  std::vector<ContinuityReport> plain;
  for (const JunctionRef& j : layout.junctions) {
    const JunctionContext ctx{layout.path.segments[j.from],
                              layout.path.segments[j.to], layout.vehicle};
    JunctionReport jr{j.id, CheckTheorem(ctx, layout.tolerances), {}};
    if (jr.report.beta && jr.report.g0_passes()) {
      jr.wheels = WheelLevelAudit(ctx, *jr.report.beta, layout.tolerances);
    }
    plain.push_back(jr.report);
    reports.push_back(std::move(jr));
  }
  const Verdict overall = AggregateVerdict(plain);
  out << (a.format == "json" ? ReportJson(reports, overall)
                             : ReportText(reports, overall));
  if (overall == Verdict::kSmooth) return kExitOk;
  if (overall == Verdict::kSmoothAtRestOnly && a.allow_rest) return kExitOk;
  return kExitFailed;
}

void AddRepairAnnotation(LayoutDocument& doc, const std::string& diff) {
  using Json = nlohmann::ordered_json;
  Json annotations = doc.annotations.empty() ? Json::object()
                                             : Json::parse(doc.annotations);
  if (!annotations.is_object()) {
    annotations = Json{{"previous", annotations}};
  }
  annotations["repairs"].push_back(Json::parse(diff));
  doc.annotations = annotations.dump();
}

int Repair(const RepairArgs& a, std::ostream& out, std::ostream& err) {
  LayoutDocument doc = ReadLayoutFile(a.layout);
  const Layout layout = BuildLayout(doc);
  const JunctionRef* ref = nullptr;
  for (const JunctionRef& j : layout.junctions) {
    if (j.id == a.junction) ref = &j;
  }
  if (ref == nullptr) {
    err << "error: unknown junction '" << a.junction << "'\n";
    return kExitUsage;
  }
  const JunctionContext ctx{layout.path.segments[ref->from],
                            layout.path.segments[ref->to], layout.vehicle};
  const ContinuityReport before = CheckTheorem(ctx, layout.tolerances);
  if (before.verdict == Verdict::kSmooth) {
    err << "junction " << a.junction << " is already smooth; unchanged\n";
    WriteOutput(a.out, SerializeLayout(doc), out);
    return kExitOk;
  }

  RepairOptions options;
  options.objective = a.objective == "displacement"
                          ? RepairObjective::kMinDisplacement
                          : RepairObjective::kMinTravelTime;
  options.side = a.side == "both" ? RepairSide::kBoth : RepairSide::kRight;
  options.tolerances = layout.tolerances;
  const RepairResult result = RepairJunction(RepairProblem{ctx, options});
  if (!result.feasible) {
    err << "error: repair of junction " << a.junction << " is infeasible\n";
    for (const std::string& d : result.diagnostics) err << "  " << d << "\n";
    return kExitFailed;
  }
  SetControlPoints(doc, result.left.id, result.left.curve);
  SetControlPoints(doc, result.right.id, result.right.curve);
  AddRepairAnnotation(doc, RepairJson(a.junction, result));
  WriteOutput(a.out, SerializeLayout(doc), out);
  err << "junction " << a.junction << " repaired: "
      << result.moved.size() << " control points moved, travel time "
      << FormatNumber(result.travel_time) << " s\n";
  return kExitOk;
}

int Profile(const ProfileArgs& a, std::ostream& out, std::ostream& err) {
  const LayoutDocument doc = ReadLayoutFile(a.layout);
  const Layout layout = BuildLayout(doc);
  ProfileOptions options;
  options.a_max = a.a_max;
  options.v_start = a.v_start;
  options.v_end = a.v_end;
  options.samples_per_segment = a.samples;
  options.diagnostic = a.diagnostic;
  options.tolerances = layout.tolerances;
  VelocityProfile profile;
  try {
    profile = PlanVelocity(layout.path, layout.vehicle, options);
  } catch (const DiscontinuousPathError& e) {
    err << "error: " << e.what()
        << " (use --diagnostic to plan anyway)\n";
    return kExitFailed;
  }
  WriteOutput(a.out, ProfileCsv(layout.path, layout.vehicle, profile), out);
  if (!a.out.empty() && a.out != "-") {
    err << "total time " << FormatNumber(profile.total_time()) << " s over "
        << FormatNumber(profile.length()) << " m\n";
  }
  return kExitOk;
}

}  // namespace

int Run(const std::vector<std::string>& args, std::ostream& out,
        std::ostream& err) {
  CLI::App app{"Continuity checking, repair and velocity profiles for "
               "multi-wheeled AGV paths",
               "agvpath"};
  app.require_subcommand(1);
  app.set_version_flag("--version", "agvpath 0.1.0");

  CheckArgs check;
  CLI::App* check_cmd = app.add_subcommand(
      "check", "Verify continuity at every junction of a layout");
  check_cmd->add_option("layout", check.layout, "Layout JSON file")
      ->required();
  check_cmd->add_option("--format", check.format, "Report format")
      ->check(CLI::IsMember({"text", "json"}));
  check_cmd->add_option("--tol-position", check.tol_position,
                        "Position tolerance, m");
  check_cmd->add_option("--tol-angle", check.tol_angle_deg,
                        "Orientation tolerance, deg");
  check_cmd->add_option("--tol-relative", check.tol_relative,
                        "Relative tolerance on derivative conditions");
  check_cmd->add_flag("--allow-rest", check.allow_rest,
                      "Accept junctions that are smooth only at rest");

  RepairArgs repair;
  CLI::App* repair_cmd =
      app.add_subcommand("repair", "Make one junction smooth");
  repair_cmd->add_option("layout", repair.layout, "Layout JSON file")
      ->required();
  repair_cmd->add_option("--junction", repair.junction, "Junction id")
      ->required();
  repair_cmd->add_option("--objective", repair.objective, "Search objective")
      ->check(CLI::IsMember({"travel_time", "displacement"}));
  repair_cmd->add_option("--side", repair.side, "Segments allowed to change")
      ->check(CLI::IsMember({"right", "both"}));
  repair_cmd->add_option("--out", repair.out,
                         "Repaired layout file (default stdout)");

  ProfileArgs profile;
  CLI::App* profile_cmd =
      app.add_subcommand("profile", "Plan a velocity profile and write CSV");
  profile_cmd->add_option("layout", profile.layout, "Layout JSON file")
      ->required();
  profile_cmd->add_option("--samples", profile.samples, "Samples per segment")
      ->check(CLI::Range(2, 1000000));
  profile_cmd->add_option("--a-max", profile.a_max, "Acceleration bound, m/s^2")
      ->check(CLI::PositiveNumber);
  profile_cmd->add_option("--v-start", profile.v_start, "Initial speed, m/s")
      ->check(CLI::NonNegativeNumber);
  profile_cmd->add_option("--v-end", profile.v_end, "Final speed, m/s")
      ->check(CLI::NonNegativeNumber);
  profile_cmd->add_option("--out", profile.out, "CSV file (default stdout)");
  profile_cmd->add_flag("--diagnostic", profile.diagnostic,
                        "Plan across discontinuous junctions");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    return app.exit(e, out, err) == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (check_cmd->parsed()) return Check(check, out);
    if (repair_cmd->parsed()) return Repair(repair, out, err);
    return Profile(profile, out, err);
  } catch (const LayoutError& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kExitFailed;
  }
}

}  // namespace agvpath::cli
