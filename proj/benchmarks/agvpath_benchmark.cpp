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

#include <string>

#include <benchmark/benchmark.h>

#include "agvpath/continuity.hpp"
#include "agvpath/curve.hpp"
#include "agvpath/layout.hpp"
#include "agvpath/profile.hpp"
#include "agvpath/repair.hpp"

namespace agvpath {
namespace {

Layout Fixture(const std::string& name) {
  return BuildLayout(
      ReadLayoutFile(std::string(AGVPATH_FIXTURE_DIR) + "/" + name));
}

void BM_CurveEvaluate(benchmark::State& state) {
  const Layout l = Fixture("layout_va.json");
  const BezierCurve& curve = l.path.segments[0].curve;
  int i = 0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(curve.Evaluate(i / 1000.0, 3));
    i = i < 1000 ? i + 1 : 0;
  }
}
BENCHMARK(BM_CurveEvaluate);

void BM_CheckJunction(benchmark::State& state) {
  const Layout l = Fixture("layout_vc.json");
  const JunctionContext ctx{l.path.segments[0], l.path.segments[1], l.vehicle};
  for (auto _ : state) benchmark::DoNotOptimize(CheckTheorem(ctx));
}
BENCHMARK(BM_CheckJunction);

void BM_RepairJunction(benchmark::State& state) {
  const Layout l = Fixture("layout_va.json");
  RepairOptions options;
  options.objective = state.range(0) ? RepairObjective::kMinTravelTime
                                     : RepairObjective::kMinDisplacement;
  const RepairProblem problem{
      {l.path.segments[0], l.path.segments[1], l.vehicle}, options};
  for (auto _ : state) benchmark::DoNotOptimize(RepairJunction(problem));
}
BENCHMARK(BM_RepairJunction)
    ->Arg(0)
    ->Arg(1)
    ->Unit(benchmark::kMillisecond)
    ->UseRealTime();

void BM_PlanVelocity(benchmark::State& state) {
  const Layout l = Fixture("layout_vb.json");
  ProfileOptions options;
  options.samples_per_segment = static_cast<int>(state.range(0));
  for (auto _ : state) {
    benchmark::DoNotOptimize(PlanVelocity(l.path, l.vehicle, options));
  }
}
BENCHMARK(BM_PlanVelocity)->Arg(250)->Arg(1000)->Unit(benchmark::kMillisecond);

}  // namespace
}  // namespace agvpath

BENCHMARK_MAIN();
