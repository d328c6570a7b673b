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
#include "plotgarden/suites.hpp"
#include "support.hpp"

using namespace pg;
using pg::test::open_of;

namespace {

GardenPtr g_sierp() { return functor_G_object(*test::sierp()); }

PlotPtr empty_plot() {
  return validate_plot(validate_structure({}, std::vector<std::pair<NodeId, NodeId>>{}),
                       validate_space({}, std::vector<PointSet>{PointSet{}}), {});
}

// Chain topology a < ab < abc on three points, re-covered onto the
// Sierpinski space along P -> a, Q -> c.
GardenPtr chain_over_sierpinski(const PlotPtr& upper) {
  const FiniteSpace& u = *upper->space;
  const FiniteSpace& s = *test::sierpinski();
  const std::vector<PointId> psi{u.index("a"), u.index("c")};
  std::vector<ElemId> covering;
  for (PointSet v : u.opens()) {
    PointSet pulled;
    for (PointId p = 0; p < psi.size(); ++p) {
      if (v.contains(psi[p])) pulled.insert(p);
    }
    covering.push_back(s.require_open(pulled));
  }
  return validate_garden(functor_G_object(*upper)->bed, test::sierpinski(), covering);
}

SpacePtr chain3() {
  return validate_space({"a", "b", "c"}, std::vector<std::vector<std::string>>{{}, {"c"}, {"b", "c"}, {"a", "b", "c"}});
}

}  // namespace

TEST_CASE("algebraic unit of G(Sierpinski) is the identity on the 3-chain") {
  AlgebraicUnit u = algebraic_unit_with_laws(g_sierp());
  CHECK(u.report.ok());
  CHECK(u.morphism.frame_map == std::vector<ElemId>{0, 1, 2});
}

TEST_CASE("algebraic unit of a quotient covering has strict inequalities") {
  std::size_t strict = 0;
  std::size_t gardens = 0;
  SpacePtr space = chain3();
  for (std::uint64_t seed = 1; seed <= 60; ++seed) {
    Rng rng(seed);
    PlotPtr upper = random_plot_over(rng, space, rng.between(3, 6), 0.35);
    GardenPtr g = chain_over_sierpinski(upper);
    REQUIRE(g->frame().size() == 4);
    REQUIRE(g->covering != std::vector<ElemId>{0, 1, 2, 3});
    AlgebraicUnit u = algebraic_unit_with_laws(g);
    const LawCheck* bad = first_failure(u.report.laws);
    REQUIRE_MESSAGE(bad == nullptr, bad->id << " " << bad->witness);
    GardenMorphismReport r = check_garden_morphism(u.morphism);
    strict += (r.strict_box + r.strict_diamond) > 0;
    ++gardens;
  }
  CHECK(gardens == 60);
  CHECK(strict > 0);
}

TEST_CASE("algebraic unit of the empty garden") {
  AlgebraicUnit u = algebraic_unit_with_laws(functor_G_object(*empty_plot()));
  CHECK(u.report.ok());
  CHECK(u.morphism.frame_map == std::vector<ElemId>{0});
  CHECK(u.furnished->frame().size() == 1);
}

TEST_CASE("geometric unit of the Sierpinski plot") {
  PlotPtr p = test::sierp();
  const FiniteSpace& s = *p->space;
  const NodeId P = p->structure->index("P");
  const NodeId Q = p->structure->index("Q");
  CHECK(unit_flower(*p, P) == Flower{s.index("P"), open_of(s, {}), Filter{open_of(s, {"Q"})}});
  CHECK(unit_flower(*p, Q) == Flower{s.index("Q"), open_of(s, {"P", "Q"}), Filter{open_of(s, {})}});

  GardenPtr g = g_sierp();
  Harvest h = harvest(g);
  GeometricUnit u = geometric_unit_with_laws(p, h);
  CHECK(u.report.ok());
  const FlowerStructure& fs = h.all;
  const std::size_t from = *fs.find(u.flowers[P]);
  const std::size_t to = *fs.find(u.flowers[Q]);
  CHECK(fs.has_edge(from, to));
  for (std::size_t j = 0; j < fs.flowers.size(); ++j) CHECK_FALSE(fs.has_edge(to, j));
}

TEST_CASE("geometric unit without transitions") {
  test::for_plots(50, Profile{}, [](std::uint64_t, const PlotPtr& with_edges) {
    PlotPtr p = validate_plot(validate_structure(with_edges->structure->names(), std::vector<std::pair<NodeId, NodeId>>{}),
                              with_edges->space, with_edges->valuation);
    const FiniteSpace& s = *p->space;
    for (NodeId n = 0; n < p->size(); ++n) {
      CHECK(unit_stalk(*p, n) == s.require_open(s.all()));
      CHECK(unit_bloom(*p, n).generator == s.require_open(PointSet{}));
    }
  });
}

TEST_CASE("naturality on the worked maps") {
  CHECK(all_pass(geometric_naturality(identity_map(test::sierp()))));
  LawList t = geometric_naturality(test::tight());
  for (const char* id : {"naturality.root", "naturality.stalk", "naturality.bloom"}) {
    auto it = std::find_if(t.begin(), t.end(), [&](const LawCheck& l) { return l.id == id; });
    REQUIRE(it != t.end());
    CHECK(it->pass);
  }
  CHECK(all_pass(t));

  // F of a garden morphism, fed back as a lentile map.
  GardenMorphism gt = functor_G_arrow(test::tight());
  PlotMap back = functor_F_arrow(gt, harvest(gt.target), harvest(gt.source));
  CHECK(all_pass(geometric_naturality(back)));
  CHECK(all_pass(algebraic_naturality(gt)));
}

TEST_CASE("idempotency on the worked objects") {
  LawList plot = verify_idempotency(test::sierp());
  CHECK(all_pass(plot));
  auto tables = std::find_if(plot.begin(), plot.end(), [](const LawCheck& l) { return l.id == "idempotency.tables_equal"; });
  REQUIRE(tables != plot.end());

  // G of the harvest of G has the same operator tables on the same frame.
  Harvest h = harvest(g_sierp());
  Bed again = lift_operators(*h.plot);
  Bed once = lift_operators(*test::sierp());
  CHECK(again.box == once.box);
  CHECK(again.diamond == once.diamond);

  CHECK(all_pass(verify_idempotency(g_sierp())));
  CHECK(all_pass(verify_idempotency(empty_plot())));
  CHECK(all_pass(verify_idempotency(functor_G_object(*empty_plot()))));
}

TEST_CASE("idempotency on 200 plots and 200 gardens") {
  for (std::uint64_t seed = 1; seed <= 100; ++seed) {
    InstanceSet in = generate_instances(seed, Profile{});
    for (const PlotPtr& p : in.plots) {
      const LawCheck* bad = first_failure(verify_idempotency(p));
      REQUIRE_MESSAGE(bad == nullptr, "seed " << seed << ": " << bad->id << " " << bad->witness);
    }
    for (const GardenPtr& g : in.gardens) {
      const LawCheck* bad = first_failure(verify_idempotency(g));
      REQUIRE_MESSAGE(bad == nullptr, "seed " << seed << ": " << bad->id << " " << bad->witness);
    }
  }
}

TEST_CASE("naturality on generated maps and morphisms") {
  for (std::uint64_t seed = 1; seed <= 100; ++seed) {
    InstanceSet in = generate_instances(seed, Profile{});
    for (const auto& [name, m] : in.lentile_maps) {
      const LawCheck* bad = first_failure(lentile_map_suite(m));
      REQUIRE_MESSAGE(bad == nullptr, "seed " << seed << " " << name << ": " << bad->id << " " << bad->witness);
    }
    for (const auto& [name, gm] : in.garden_morphisms) {
      const LawCheck* bad = first_failure(garden_morphism_suite(gm));
      REQUIRE_MESSAGE(bad == nullptr, "seed " << seed << " " << name << ": " << bad->id << " " << bad->witness);
    }
  }
}

TEST_CASE("F is contravariant on composable garden morphisms") {
  for (std::uint64_t seed = 1; seed <= 100; ++seed) {
    InstanceSet in = generate_instances(seed, Profile{});
    const GardenMorphism& pull = in.garden_morphisms[1].second;
    const GardenMorphism& unit = in.garden_morphisms[2].second;
    REQUIRE(in.garden_morphisms[1].first == "pullback");
    REQUIRE(in.garden_morphisms[2].first == "algebraic_unit");
    LawCheck law = f_contravariance(pull, unit);
    REQUIRE_MESSAGE(law.pass, law.witness);
  }
}
