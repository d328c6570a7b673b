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

#include <algorithm>

#include "plotgarden/oracle.hpp"
#include "plotgarden/adjunction.hpp"
#include "plotgarden/suites.hpp"
#include "support.hpp"

using namespace pg;

namespace {

GardenPtr sierp_garden() { return test::fixtures().gardens.at("sierp_garden"); }

void require_pass(const LawCheck& l, std::uint64_t seed) {
  REQUIRE_MESSAGE(l.pass, "seed " << seed << ": " << l.id << " " << l.witness);
}

}  // namespace

TEST_CASE("oracles on the Sierpinski garden") {
  GardenPtr g = sierp_garden();
  CHECK(oracle::filters_by_subsets(g->frame()).size() == 3);
  CHECK(oracle::flowers_by_scan(*g).size() == 9);
  std::vector<Flower> core = oracle::harvest_by_rescan(*g);
  CHECK(core.size() == 3);
  CHECK(core == harvest(g).survivors);
  CHECK(oracle::healthy_by_definition(*g, core));

  std::string witness;
  CHECK_FALSE(oracle::healthy_by_definition(*g, oracle::flowers_by_scan(*g), &witness));
  CHECK_FALSE(witness.empty());

  const FiniteSpace& s = *test::sierpinski();
  CHECK(oracle::lens_by_definition(s, test::points(s, {"P"})) == test::points(s, {"P"}));
  CHECK(oracle::lens_by_definition(s, test::points(s, {"Q"})) == test::points(s, {"Q"}));
  CHECK(oracle::lens_by_definition(s, PointSet{}) == PointSet{});
  CHECK(all_pass(oracle::compare_all(g)));
  CHECK(all_pass(oracle::compare_all(test::sierp())));
}

TEST_CASE("lens of a gap in a chain fills it") {
  SpacePtr chain = validate_space({"a", "b", "c"}, std::vector<std::vector<std::string>>{{}, {"c"}, {"b", "c"}, {"a", "b", "c"}});
  CHECK(oracle::lens_by_definition(*chain, test::points(*chain, {"a", "c"})) == chain->all());
  CHECK(oracle::lens_by_definition(*chain, test::points(*chain, {"b"})) == test::points(*chain, {"b"}));
  CHECK(lens(*chain, test::points(*chain, {"a", "c"})) == chain->all());
}

TEST_CASE("oracles refuse oversized inputs") {
  CHECK(test::error_of([] { oracle::filters_by_subsets(*chain_frame(oracle::kMaxSubsetFrame + 1)); }) == Errc::SizeLimit);
}

TEST_CASE("oracles agree on small generated plots") {
  std::size_t compared = 0;
  for (std::uint64_t seed = 1; seed <= 200; ++seed) {
    Rng rng(seed);
    PlotPtr p = random_plot(rng, Profile{});
    GardenPtr g = functor_G_object(*p);
    if (!oracle_sized(*g)) continue;
    ++compared;
    for (const LawCheck& l : oracle::compare_all(p)) require_pass(l, seed);
  }
  CHECK(compared > 100);
}

TEST_CASE("oracles agree on small generated gardens") {
  std::size_t compared = 0;
  std::size_t nontrivial_harvests = 0;
  for (std::uint64_t seed = 1; seed <= 200; ++seed) {
    InstanceSet in = generate_instances(seed, Profile{});
    for (const GardenPtr& g : in.gardens) {
      if (!oracle_sized(*g)) continue;
      ++compared;
      for (const LawCheck& l : oracle::compare_all(g)) require_pass(l, seed);
      for (std::uint64_t order = 1; order <= 3; ++order) require_pass(oracle::compare_harvest_order(g, order), seed);
      Harvest h = harvest(g);
      nontrivial_harvests += h.survivors.size() < oracle::flowers_by_scan(*g).size();
    }
  }
  CHECK(compared > 100);
  CHECK(nontrivial_harvests > 0);
}
