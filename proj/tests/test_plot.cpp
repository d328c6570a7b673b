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

#include "plotgarden/adjunction.hpp"
#include "plotgarden/plot.hpp"
#include "plotgarden/suites.hpp"
#include "support.hpp"

using namespace pg;
using pg::test::error_of;
using pg::test::open_of;

TEST_CASE("validate_plot") {
  CHECK(test::sierp()->surjective);
  SpacePtr two = discrete_space({"a", "b"});
  auto one_node = [&] {
    validate_plot(validate_structure({"n"}, std::vector<std::pair<NodeId, NodeId>>{}), two, {0});
  };
  CHECK(error_of(one_node) == Errc::ValuationNotSurjective);
  auto short_valuation = [&] {
    validate_plot(validate_structure({"n", "m"}, std::vector<std::pair<NodeId, NodeId>>{}), two, {0});
  };
  CHECK(error_of(short_valuation) == Errc::ValuationNotTotal);
  PlotPtr empty = validate_plot(validate_structure({}, std::vector<std::pair<NodeId, NodeId>>{}),
                                validate_space({}, std::vector<PointSet>{PointSet{}}), {});
  CHECK(empty->size() == 0);
}

TEST_CASE("classify_plot_map on the worked maps") {
  PlotMapReport t = classify_plot_map(test::tight());
  CHECK(t.is_plot_map);
  CHECK(t.up_condition);
  CHECK(t.minus_condition);
  CHECK(t.is_lentile);
  CHECK_FALSE(t.is_simulation);

  PlotMapReport h = classify_plot_map(test::homeo());
  CHECK(h.is_plot_map);
  CHECK_FALSE(h.minus_condition);
  CHECK_FALSE(h.is_lentile);
  CHECK(h.lemma_consistent);

  PlotMapReport id = classify_plot_map(identity_map(test::sierp()));
  CHECK(id.is_plot_map);
  CHECK(id.up_condition);
  CHECK(id.minus_condition);
  CHECK(id.is_lentile);
  CHECK(id.is_simulation);
}

TEST_CASE("classify_plot_map rejects a failing square") {
  PlotMap m = identity_map(test::sierp());
  m.point_map = {1, 1};
  CHECK(error_of([&] { classify_plot_map(m); }) == Errc::SquareViolation);
}

TEST_CASE("lift of the Sierpinski plot") {
  const FiniteSpace& s = *test::sierpinski();
  Bed bed = lift_operators(*test::sierp());
  CHECK(bed.box[open_of(s, {})] == open_of(s, {"Q"}));
  CHECK(bed.box[open_of(s, {"Q"})] == open_of(s, {"P", "Q"}));
  CHECK(bed.box[open_of(s, {"P", "Q"})] == open_of(s, {"P", "Q"}));
  for (ElemId u = 0; u < bed.diamond.size(); ++u) CHECK(bed.diamond[u] == open_of(s, {}));
}

TEST_CASE("lift over a one-point space sees dead ends") {
  // The target of the tight map has a dead end R; its source has none.
  for (const PlotPtr& p : {test::tight().target, test::tight().source}) {
    const FiniteSpace& s = *p->space;
    Bed bed = lift_operators(*p);
    bool all_live = true;
    for (NodeId n = 0; n < p->size(); ++n) all_live = all_live && p->structure->successors(n).any();
    CHECK((bed.diamond[s.require_open(s.all())] == s.require_open(s.all())) == all_live);
    // box of the empty open is everything only when every node is a dead end
    bool all_dead = true;
    for (NodeId n = 0; n < p->size(); ++n) all_dead = all_dead && p->structure->successors(n).none();
    CHECK((bed.box[s.require_open(PointSet{})] == s.require_open(s.all())) == all_dead);
  }
}

TEST_CASE("lift of a flat discrete plot is the powerset pair") {
  for (std::uint64_t seed = 1; seed <= 100; ++seed) {
    Rng rng(seed);
    PlotMap m = random_flat_map(rng, Profile{}, FlatTopology::Discrete);
    const Plot& p = *m.source;
    Bed bed = lift_operators(p);
    OperatorTables ops = powerset_operators(*p.structure);
    const FiniteSpace& s = *p.space;
    for (ElemId u = 0; u < s.opens().size(); ++u) {
      // node i sits over point i
      const auto bits = static_cast<std::uint32_t>(s.open(u).bits());
      REQUIRE(s.open(bed.box[u]).bits() == ops.box[bits]);
      REQUIRE(s.open(bed.diamond[u]).bits() == ops.diamond[bits]);
    }
  }
}

TEST_CASE("lift laws on 200 random plots") {
  test::for_plots(200, Profile{}, [](std::uint64_t seed, const PlotPtr& p) {
    Lift lift = lift_with_laws(*p);
    const LawCheck* bad = first_failure(lift.laws);
    REQUIRE_MESSAGE(bad == nullptr, "seed " << seed << ": " << (bad ? bad->id + " " + bad->witness : ""));
    CHECK(lift.laws.size() == 9);
  });
}

TEST_CASE("classification properties on generated plot maps") {
  std::size_t lentile = 0;
  std::size_t flat_checked = 0;
  for (std::uint64_t seed = 1; seed <= 500; ++seed) {
    InstanceSet in = generate_instances(seed, Profile{});
    for (const PlotMap& m : in.plot_maps) {
      LawList laws = plot_map_suite(m);
      for (const LawCheck& l : laws) {
        REQUIRE_MESSAGE(l.pass, "seed " << seed << " " << l.id << ": " << l.witness);
        flat_checked += l.id == "plot_map/classify.flat_discrete_minus_simulation";
      }
      lentile += classify_plot_map(m).is_lentile;
    }
  }
  CHECK(lentile > 100);
  CHECK(flat_checked > 100);
}

TEST_CASE("functor G on objects") {
  GardenPtr g = functor_G_object(*test::sierp());
  CHECK(g->bed.box == lift_operators(*test::sierp()).box);
  for (ElemId x = 0; x < g->covering.size(); ++x) CHECK(g->covering[x] == x);

  PlotPtr empty = validate_plot(validate_structure({}, std::vector<std::pair<NodeId, NodeId>>{}),
                                validate_space({}, std::vector<PointSet>{PointSet{}}), {});
  CHECK(functor_G_object(*empty)->frame().size() == 1);
}

TEST_CASE("functor G on the worked maps") {
  GardenMorphism id = functor_G_arrow(identity_map(test::sierp()));
  for (ElemId x = 0; x < id.frame_map.size(); ++x) CHECK(id.frame_map[x] == x);
  CHECK(id.point_map == std::vector<PointId>{0, 1});

  GardenMorphism t = functor_G_arrow(test::tight());
  CHECK(t.frame_map.size() == 2);
  CHECK(t.frame_map[0] == t.target->frame().bottom());
  CHECK(t.frame_map[1] == t.target->frame().top());
  CHECK(check_garden_morphism(t).ok);

  CHECK(error_of([] { functor_G_arrow(test::homeo()); }) == Errc::NotLentile);
}

TEST_CASE("G is contravariant on composable lentile maps") {
  for (std::uint64_t seed = 1; seed <= 150; ++seed) {
    InstanceSet in = generate_instances(seed, Profile{});
    const PlotMap& constructed = in.lentile_maps[2].second;
    REQUIRE(in.lentile_maps[2].first == "constructed");
    LawCheck law = g_contravariance(constructed, geometric_unit(constructed.target));
    REQUIRE_MESSAGE(law.pass, law.witness);
    LawCheck with_identity = g_contravariance(identity_map(constructed.source), constructed);
    REQUIRE_MESSAGE(with_identity.pass, with_identity.witness);
  }
}
