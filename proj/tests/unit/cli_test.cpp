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

#include <filesystem>
#include <fstream>
#include <sstream>

#include <gtest/gtest.h>
#include <nlohmann/json.hpp>

#include "agvpath/layout.hpp"
#include "oracles.hpp"

namespace agvpath::cli {
namespace {

using agvpath::testing::FixturePath;

struct Outcome {
  int code;
  std::string out;
  std::string err;
};

Outcome Invoke(const std::vector<std::string>& args) {
  std::ostringstream out;
  std::ostringstream err;
  const int code = Run(args, out, err);
  return {code, out.str(), err.str()};
}

class CliTest : public ::testing::Test {
 protected:
  void SetUp() override {
    dir_ = std::filesystem::temp_directory_path() /
           ("agvpath_cli_" + std::to_string(::getpid()) + "_" +
            ::testing::UnitTest::GetInstance()->current_test_info()->name());
    std::filesystem::create_directories(dir_);
  }
  void TearDown() override { std::filesystem::remove_all(dir_); }

  std::string Write(const std::string& name, const std::string& text) {
    const std::string path = (dir_ / name).string();
    std::ofstream(path) << text;
    return path;
  }
  static std::string Slurp(const std::string& path) {
    std::ifstream in(path);
    return {std::istreambuf_iterator<char>(in), {}};
  }

  std::filesystem::path dir_;
};

TEST_F(CliTest, CheckExitCodes) {
  EXPECT_EQ(Invoke({"check", FixturePath("layout_va.json")}).code, kExitFailed);
  EXPECT_EQ(Invoke({"check", FixturePath("layout_vb.json")}).code, kExitOk);
  const Outcome text = Invoke({"check", FixturePath("layout_vb.json"),
                               "--format", "text"});
  EXPECT_NE(text.out.find("overall: smooth"), std::string::npos);
  const Outcome json =
      Invoke({"check", FixturePath("layout_va.json"), "--format", "json"});
  EXPECT_EQ(nlohmann::json::parse(json.out)["verdict"], "discontinuous");
}

TEST_F(CliTest, ToleranceFlagsLoosenCheck) {
  EXPECT_EQ(Invoke({"check", FixturePath("layout_vb_published.json"),
                    "--tol-relative", "1e-2", "--tol-angle", "0.1"})
                .code,
            kExitOk);
}

TEST_F(CliTest, SchemaAndUsageErrors) {
  const std::string empty = Write("empty.json", R"({"schema_version": 1,
    "vehicle": {"wheels": [{"id": "w1", "position": [0, 0], "v_max": 1,
    "omega_max_degps": 1}]}, "segments": []})");
  const Outcome o = Invoke({"check", empty});
  EXPECT_EQ(o.code, kExitUsage);
  EXPECT_NE(o.err.find("$.segments"), std::string::npos);
  EXPECT_EQ(Invoke({"check", (dir_ / "missing.json").string()}).code,
            kExitUsage);
  EXPECT_EQ(Invoke({"bogus"}).code, kExitUsage);
  EXPECT_EQ(Invoke({"check", FixturePath("layout_va.json"), "--format", "xml"})
                .code,
            kExitUsage);
  EXPECT_EQ(Invoke({"repair", FixturePath("layout_va.json"), "--junction",
                    "j9"})
                .code,
            kExitUsage);
  EXPECT_EQ(Invoke({"--help"}).code, kExitOk);
}

TEST_F(CliTest, RepairThenCheckPasses) {
  const std::string out = (dir_ / "repaired.json").string();
  const Outcome r = Invoke({"repair", FixturePath("layout_va.json"),
                            "--junction", "j1", "--objective", "displacement",
                            "--out", out});
  ASSERT_EQ(r.code, kExitOk) << r.err;
  EXPECT_EQ(Invoke({"check", out}).code, kExitOk);
  const LayoutDocument doc = ReadLayoutFile(out);
  const auto annotations = nlohmann::json::parse(doc.annotations);
  ASSERT_EQ(annotations["repairs"].size(), 1u);
  EXPECT_EQ(annotations["repairs"][0]["junction"], "j1");
  EXPECT_EQ(annotations["repairs"][0]["verdict_after"], "smooth");
  // The left segment and the far end of the right segment are untouched.
  const LayoutDocument before = ReadLayoutFile(FixturePath("layout_va.json"));
  EXPECT_EQ(doc.segments[0], before.segments[0]);
  EXPECT_EQ(doc.segments[1].control_points.back(),
            before.segments[1].control_points.back());
}

TEST_F(CliTest, RepairOfSmoothLayoutIsIdentity) {
  const Outcome r = Invoke({"repair", FixturePath("layout_vb.json"),
                            "--junction", "j1"});
  ASSERT_EQ(r.code, kExitOk);
  EXPECT_EQ(r.out, SerializeLayout(ReadLayoutFile(FixturePath("layout_vb.json"))));
}

TEST_F(CliTest, ProfileRefusesDiscontinuousUnlessDiagnostic) {
  const Outcome refused =
      Invoke({"profile", FixturePath("layout_va.json"), "--samples", "50"});
  EXPECT_EQ(refused.code, kExitFailed);
  EXPECT_NE(refused.err.find("--diagnostic"), std::string::npos);
  const std::string csv = (dir_ / "va.csv").string();
  EXPECT_EQ(Invoke({"profile", FixturePath("layout_va.json"), "--samples",
                    "50", "--diagnostic", "--out", csv})
                .code,
            kExitOk);
  EXPECT_EQ(Slurp(csv).rfind("segment,u,s_m", 0), 0u);
}

TEST_F(CliTest, ProfileIsDeterministic) {
  const Outcome a =
      Invoke({"profile", FixturePath("layout_vb.json"), "--samples", "80"});
  const Outcome b =
      Invoke({"profile", FixturePath("layout_vb.json"), "--samples", "80"});
  ASSERT_EQ(a.code, kExitOk);
  EXPECT_EQ(a.out, b.out);
}

}  // namespace
}  // namespace agvpath::cli
