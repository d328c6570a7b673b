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

#include <stdexcept>

#include "plotgarden/shrink.hpp"
#include "support.hpp"

using namespace pg;

namespace {

bool has_branching_node(const PlotPtr& p) {
  for (NodeId n = 0; n < p->size(); ++n) {
    if (p->structure->successors(n).count() >= 2) return true;
  }
  return false;
}

}  // namespace

TEST_CASE("shrinking keeps the failure and minimises") {
  Profile big = parse_profile("min_nodes=5,max_nodes=7,edge_density=0.6");
  std::size_t shrunk = 0;
  test::for_plots(40, big, [&](std::uint64_t seed, const PlotPtr& p) {
    if (!has_branching_node(p)) return;
    ShrinkResult r = shrink_plot(p, has_branching_node);
    REQUIRE_MESSAGE(has_branching_node(r.plot), "seed " << seed);
    // One node with two successors needs at most three nodes and exactly two edges.
    CHECK(r.plot->size() <= 3);
    CHECK(r.plot->structure->edges().size() == 2);
    CHECK(r.plot->space->size() <= r.plot->size());
    shrunk += r.steps > 0;
  });
  CHECK(shrunk > 0);
}

TEST_CASE("points and opens shrink") {
  auto wide = [](const PlotPtr& p) { return p->space->size() >= 2; };
  test::for_plots(40, parse_profile("min_points=3,max_points=5,min_nodes=5,max_nodes=6"), [&](std::uint64_t, const PlotPtr& p) {
    ShrinkResult r = shrink_plot(p, wide);
    CHECK(r.plot->space->size() == 2);
    CHECK(r.plot->size() == 2);
    CHECK(r.plot->space->opens().size() == 2);
    CHECK(r.plot->structure->edges().empty());
  });
}

TEST_CASE("a predicate that never fails leaves the plot alone") {
  PlotPtr p = test::sierp();
  ShrinkResult r = shrink_plot(p, [](const PlotPtr&) { return false; });
  CHECK(r.steps == 0);
  CHECK(r.plot == p);
}

TEST_CASE("an exception in the predicate counts as passing") {
  PlotPtr p = test::fixtures().plots.at("tight_target");
  auto fails = [&](const PlotPtr& q) {
    if (q != p) throw std::runtime_error("unexpected");
    return true;
  };
  ShrinkResult r = shrink_plot(p, fails);
  CHECK(r.steps == 0);
  CHECK(r.plot == p);
}
