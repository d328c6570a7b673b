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

#include "plotgarden/stone.hpp"
#include "support.hpp"

using namespace pg;

TEST_CASE("identity box on a four-element algebra") {
  FramePtr b = powerset_frame(2);
  PlotPtr p = spec_boolean(b, {0, 1, 2, 3});
  REQUIRE(p->size() == 2);
  const TransitionStructure& s = *p->structure;
  CHECK(s.has_edge(0, 0));
  CHECK(s.has_edge(1, 1));
  CHECK_FALSE(s.has_edge(0, 1));
  CHECK_FALSE(s.has_edge(1, 0));
  CHECK(p->space->opens().size() == 4);
}

TEST_CASE("constant-top box has no transitions") {
  PlotPtr p = spec_boolean(powerset_frame(2), {3, 3, 3, 3});
  CHECK(p->structure->edges().empty());
}

TEST_CASE("two-element chain gives one reflexive node") {
  PlotPtr p = spec_boolean(chain_frame(2), {0, 1});
  REQUIRE(p->size() == 1);
  CHECK(p->structure->has_edge(0, 0));
}

TEST_CASE("non-Boolean and partial tables are rejected") {
  CHECK(test::error_of([] { spec_boolean(chain_frame(3), {0, 1, 2}); }) == Errc::NotBoolean);
  CHECK(test::error_of([] { spec_boolean(powerset_frame(2), {0, 1}); }) == Errc::ElementUnknown);
  CHECK(test::error_of([] { spec_boolean(powerset_frame(1), {0, 7}); }) == Errc::ElementUnknown);
}

TEST_CASE("the lifted box of a flat discrete plot gives the plot back") {
  for (std::uint64_t seed = 1; seed <= 200; ++seed) {
    Rng rng(seed);
    PlotPtr flat = random_flat_map(rng, Profile{}, FlatTopology::Discrete).source;
    Bed bed = lift_operators(*flat);
    PlotPtr back = spec_boolean(bed.frame, bed.box);
    REQUIRE(back->size() == flat->size());
    const FiniteSpace& space = *flat->space;
    std::vector<NodeId> image(flat->size());
    for (NodeId n = 0; n < flat->size(); ++n) {
      PointSet only;
      only.insert(flat->valuation[n]);
      ElemId atom = space.require_open(only);
      image[n] = back->structure->index("^" + bed.frame->name(atom));
    }
    for (NodeId a = 0; a < flat->size(); ++a) {
      for (NodeId c = 0; c < flat->size(); ++c) {
        CHECK_MESSAGE(flat->structure->has_edge(a, c) == back->structure->has_edge(image[a], image[c]), "seed " << seed);
      }
    }
  }
}
