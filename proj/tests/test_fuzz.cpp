// Copyright 2026 The plotgarden Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <doctest.h>

#include "plotgarden/fuzz.hpp"
#include "support.hpp"

using namespace pg;

namespace {

LawList planted(const InstanceSet& in) {
  LawCheck l("planted.every_third", "seeds divisible by three fail");
  if (in.seed % 3 == 0) l.refute("seed " + std::to_string(in.seed));
  return {l};
}

}  // namespace

TEST_CASE("a clean run passes and records observations") {
  FuzzOutcome o = run_fuzz(FuzzOptions{.seed = 1, .count = 20});
  CHECK(o.report.pass());
  CHECK_FALSE(o.failing_seed);
  CHECK_FALSE(o.counterexample);
  CHECK(o.report.observations["seeds"] == 20);
  CHECK(o.report.observations.contains("harvests"));
  CHECK(o.report.laws.size() > 50);
  for (const LawRecord& l : o.report.laws) CHECK(l.checked > 0);
}

TEST_CASE("reports do not depend on the thread count") {
  const std::string one = format_report_json(run_fuzz(FuzzOptions{.seed = 5, .count = 12, .threads = 1}).report);
  const std::string four = format_report_json(run_fuzz(FuzzOptions{.seed = 5, .count = 12, .threads = 4}).report);
  CHECK(one == four);
}

TEST_CASE("a planted failure is found at its lowest seed") {
  FuzzOutcome o = run_fuzz(FuzzOptions{.seed = 1, .count = 10, .threads = 3}, planted);
  CHECK_FALSE(o.report.pass());
  REQUIRE(o.failing_seed);
  CHECK(*o.failing_seed == 3);
  auto it = std::find_if(o.report.laws.begin(), o.report.laws.end(),
                         [](const LawRecord& l) { return l.id == "planted.every_third"; });
  REQUIRE(it != o.report.laws.end());
  CHECK(it->failures == 3);
  CHECK(it->witness == "seed 3");
  CHECK(o.report.observations["failing_seed"] == 3);

  // Not a plot law, so the whole instance set is kept.
  REQUIRE(o.counterexample);
  CHECK(serialize_workspace(*o.counterexample) ==
        serialize_workspace(instance_workspace(generate_instances(3, Profile{}))));
}

TEST_CASE("an exception in a suite becomes a failing law") {
  ExtraSuite boom = [](const InstanceSet& in) -> LawList {
    if (in.seed == 2) fail(Errc::PostconditionFailure, "planted");
    return {};
  };
  FuzzOutcome o = run_fuzz(FuzzOptions{.seed = 1, .count = 3}, boom);
  REQUIRE(o.failing_seed);
  CHECK(*o.failing_seed == 2);
  auto it = std::find_if(o.report.laws.begin(), o.report.laws.end(),
                         [](const LawRecord& l) { return l.id == "extra/no_exception"; });
  REQUIRE(it != o.report.laws.end());
  CHECK(it->witness.find("planted") != std::string::npos);
}

TEST_CASE("instance workspaces name everything") {
  InstanceSet in = generate_instances(4, Profile{});
  Workspace ws = instance_workspace(in);
  CHECK(ws.plots.count("plot0") == 1);
  CHECK(ws.gardens.count("garden0") == 1);
  CHECK(ws.plot_maps.count("plot_map0") == 1);
  CHECK(ws.garden_morphisms.size() == in.garden_morphisms.size());
}
