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

#include "agvpath/layout.hpp"

#include <cstdlib>
#include <numbers>

#include <gtest/gtest.h>

#include "oracles.hpp"

namespace agvpath {
namespace {

using testing::FixturePath;

constexpr const char* kMinimal = R"({
  "schema_version": 1,
  "vehicle": {"wheels": [
    {"id": "w1", "position": [0.75, 0.45], "v_max": 1.7, "omega_max_degps": 45.0},
    {"id": "w2", "position": [-0.75, -0.45], "v_max": 1.7, "omega_max_degps": 45.0}
  ]},
  "segments": [
    {"id": "s1", "control_points": [[0, 0], [1, 0], [2, 0], [3, 0]],
     "mode": {"type": "tangential", "alpha_deg": 0.0}, "v_max": 1.5}
  ]
})";

std::string Replace(std::string text, const std::string& from,
                    const std::string& to) {
  text.replace(text.find(from), from.size(), to);
  return text;
}

std::string ErrorLocation(const std::string& text) {
  try {
    ParseLayout(text);
  } catch (const LayoutError& e) {
    return e.location();
  }
  return "<no error>";
}

TEST(ParseLayoutTest, MinimalDocument) {
  const LayoutDocument doc = ParseLayout(kMinimal);
  ASSERT_EQ(doc.wheels.size(), 2u);
  ASSERT_EQ(doc.segments.size(), 1u);
  EXPECT_EQ(doc.segments[0].control_points[3][0], 3.0);
  EXPECT_EQ(doc.segments[0].mode.type, "tangential");
  EXPECT_TRUE(EffectiveJunctions(doc).empty());
}

TEST(ParseLayoutTest, RoundTripIsByteStable) {
  const std::string once = SerializeLayout(ParseLayout(kMinimal));
  const LayoutDocument doc = ParseLayout(once);
  EXPECT_EQ(SerializeLayout(doc), once);
  EXPECT_EQ(doc, ParseLayout(kMinimal));
}

TEST(ParseLayoutTest, FixturesRoundTrip) {
  for (const char* name : {"layout_va.json", "layout_vb.json",
                           "layout_vb_published.json", "layout_vc.json"}) {
    const LayoutDocument doc = ReadLayoutFile(FixturePath(name));
    EXPECT_EQ(ParseLayout(SerializeLayout(doc)), doc) << name;
  }
}

TEST(ParseLayoutTest, FixturesHoldPublishedCoordinates) {
  const LayoutDocument a = ReadLayoutFile(FixturePath("layout_va.json"));
  EXPECT_EQ(a.segments[0].control_points[0], (std::array<double, 2>{0.188, -3.187}));
  EXPECT_EQ(a.segments[1].control_points[3], (std::array<double, 2>{5.873, 0.787}));
  const LayoutDocument b = ReadLayoutFile(FixturePath("layout_vb_published.json"));
  EXPECT_EQ(b.segments[1].control_points[1], (std::array<double, 2>{4.823, -0.962}));
  const LayoutDocument c = ReadLayoutFile(FixturePath("layout_vc.json"));
  EXPECT_EQ(c.segments[0].control_points[4], (std::array<double, 2>{3.495, -3.174}));
  EXPECT_EQ(c.segments[1].control_points[3], (std::array<double, 2>{5.572, -0.312}));
  EXPECT_EQ(c.segments[1].mode.type, "exponential_anticipated");
  EXPECT_EQ(*c.segments[1].mode.n, 1.7);
  EXPECT_EQ(c.segments[1].mode.alpha_deg, 14.0);
  EXPECT_EQ(c.wheels.size(), 6u);
}

TEST(ParseLayoutTest, RepairedFixtureStaysWithinRounding) {
  const LayoutDocument pub = ReadLayoutFile(FixturePath("layout_vb_published.json"));
  const LayoutDocument rep = ReadLayoutFile(FixturePath("layout_vb.json"));
  for (std::size_t s = 0; s < 2; ++s) {
    for (std::size_t i = 0; i < pub.segments[s].control_points.size(); ++i) {
      for (int k = 0; k < 2; ++k) {
        EXPECT_LE(std::abs(pub.segments[s].control_points[i][k] -
                           rep.segments[s].control_points[i][k]),
                  5e-4);
      }
    }
  }
}

TEST(ParseLayoutTest, ErrorsCarryLocations) {
  EXPECT_EQ(ErrorLocation(Replace(kMinimal, "\"tangential\"", "\"spin\"")),
            "$.segments[0].mode.type");
  EXPECT_EQ(ErrorLocation(Replace(kMinimal, "\"schema_version\": 1",
                                  "\"schema_version\": 7")),
            "$.schema_version");
  EXPECT_EQ(ErrorLocation(Replace(kMinimal, "\"v_max\": 1.5", "\"v_max\": -1")),
            "$.segments[0].v_max");
  EXPECT_EQ(ErrorLocation(Replace(kMinimal, "[[0, 0], [1, 0], [2, 0], [3, 0]]",
                                  "[[0, 0]]")),
            "$.segments[0].control_points");
  EXPECT_EQ(ErrorLocation(Replace(kMinimal, "[0.75, 0.45]", "[0.75]")),
            "$.vehicle.wheels[0].position");
  EXPECT_EQ(ErrorLocation(Replace(kMinimal, "\"id\": \"w2\"", "\"id\": \"w1\"")),
            "$.vehicle.wheels[1].id");
  EXPECT_EQ(ErrorLocation("{\"schema_version\": 1,").rfind("byte ", 0), 0u);
  EXPECT_EQ(ErrorLocation(Replace(kMinimal, "\"v_max\": 1.5", "\"speed\": 1.5")),
            "$.segments[0].speed");
}

TEST(ParseLayoutTest, EmptySegmentListIsRejected) {
  EXPECT_EQ(ErrorLocation(R"({"schema_version": 1, "vehicle": {"wheels": [
      {"id": "w1", "position": [0, 0], "v_max": 1, "omega_max_degps": 1}]},
      "segments": []})"),
            "$.segments");
}

TEST(ParseLayoutTest, ExponentialNeedsExponentAboveOne) {
  const std::string text =
      Replace(kMinimal, R"({"type": "tangential", "alpha_deg": 0.0})",
              R"({"type": "exponential_anticipated", "alpha_deg": 0.0, "n": 1.0})");
  try {
    ParseLayout(text);
    FAIL() << "expected an error";
  } catch (const LayoutError& e) {
    EXPECT_EQ(e.location(), "$.segments[0].mode.n");
    EXPECT_NE(std::string(e.what()).find("n must exceed 1"), std::string::npos);
  }
}

TEST(BuildLayoutTest, ConvertsUnitsAndImpliedJunctions) {
  const Layout l = BuildLayout(ReadLayoutFile(FixturePath("layout_vc.json")));
  ASSERT_EQ(l.path.segments.size(), 2u);
  EXPECT_NEAR(ModeAlpha(l.path.segments[0].mode), 14.0 * std::numbers::pi / 180,
              1e-15);
  EXPECT_NEAR(l.vehicle.wheels[0].omega_max, std::numbers::pi / 4, 1e-15);
  ASSERT_EQ(l.junctions.size(), 1u);
  EXPECT_EQ(l.junctions[0].id, "j1");
  EXPECT_EQ(l.junctions[0].from, 0u);
  EXPECT_EQ(l.junctions[0].to, 1u);
}

TEST(BuildLayoutTest, DifferentialModeUsesWheelPair) {
  const std::string text =
      Replace(kMinimal, R"({"type": "tangential", "alpha_deg": 0.0})",
              R"({"type": "differential"})");
  const LayoutDocument doc = ParseLayout(text);
  const Layout l = BuildLayout(doc);
  EXPECT_NEAR(ModeAlpha(l.path.segments[0].mode), DifferentialAlpha(l.vehicle),
              1e-15);
  EXPECT_EQ(SerializeLayout(ParseLayout(SerializeLayout(doc))),
            SerializeLayout(doc));
}

TEST(BuildLayoutTest, ExplicitJunctionsMustReferenceSegments) {
  std::string text = Replace(kMinimal, "\n  ]\n}",
                             "\n  ],\n  \"junctions\": [{\"id\": \"x\", "
                             "\"from\": \"s1\", \"to\": \"s9\"}]\n}");
  EXPECT_EQ(ErrorLocation(text), "$.junctions[0].to");
}

TEST(ToleranceTest, OverrideParsesKeys) {
  const Tolerances t =
      ApplyToleranceOverride({}, "position=1e-3,angle=1,relative=1e-4");
  EXPECT_EQ(t.position, 1e-3);
  EXPECT_NEAR(t.angle, std::numbers::pi / 180, 1e-15);
  EXPECT_EQ(t.relative, 1e-4);
  EXPECT_THROW(ApplyToleranceOverride({}, "speed=1"), LayoutError);
  EXPECT_THROW(ApplyToleranceOverride({}, "position=abc"), LayoutError);
}

TEST(ToleranceTest, EnvironmentOverride) {
  const LayoutDocument doc = ParseLayout(kMinimal);
  setenv("AGV_PATH_KIT_TOL", "relative=0.5", 1);
  const Tolerances t = EffectiveTolerances(doc);
  unsetenv("AGV_PATH_KIT_TOL");
  EXPECT_EQ(t.relative, 0.5);
  EXPECT_EQ(EffectiveTolerances(doc).relative, 1e-6);
}

TEST(SetControlPointsTest, UpdatesNamedSegment) {
  LayoutDocument doc = ParseLayout(kMinimal);
  SetControlPoints(doc, "s1", BezierCurve({Point2(0, 0), Point2(5, 5)}));
  EXPECT_EQ(doc.segments[0].control_points.size(), 2u);
  EXPECT_THROW(SetControlPoints(doc, "nope", BezierCurve({Point2(0, 0), Point2(1, 1)})),
               std::out_of_range);
}

}  // namespace
}  // namespace agvpath
