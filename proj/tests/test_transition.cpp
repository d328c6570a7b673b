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

#include "plotgarden/transition.hpp"
#include "support.hpp"

using namespace pg;

namespace {

std::uint32_t mask(const TransitionStructure& s, std::initializer_list<const char*> names) {
  std::uint32_t m = 0;
  for (const char* n : names) m |= 1U << s.index(n);
  return m;
}

StructurePtr random_structure(Rng& rng, std::size_t n, double density) {
  std::vector<std::pair<NodeId, NodeId>> edges;
  for (NodeId a = 0; a < n; ++a) {
    for (NodeId b = 0; b < n; ++b) {
      if (rng.chance(density)) edges.emplace_back(a, b);
    }
  }
  std::vector<std::string> names;
  for (std::size_t i = 0; i < n; ++i) names.push_back("n" + std::to_string(i));
  return validate_structure(names, edges);
}

// Definition unfolding, for comparison with classify_node_map.
std::pair<bool, bool> classify_by_definition(const NodeMap& m) {
  const TransitionStructure& s = *m.source;
  const TransitionStructure& t = *m.target;
  bool morphism = true;
  bool simulation = true;
  for (NodeId p = 0; p < s.size(); ++p) {
    for (NodeId q = 0; q < s.size(); ++q) {
      if (s.has_edge(p, q) && !t.has_edge(m(p), m(q))) morphism = false;
    }
    for (NodeId r = 0; r < t.size(); ++r) {
      if (!t.has_edge(m(p), r)) continue;
      bool lifted = false;
      for (NodeId q = 0; q < s.size(); ++q) lifted = lifted || (s.has_edge(p, q) && m(q) == r);
      if (!lifted) simulation = false;
    }
  }
  return {morphism, morphism && simulation};
}

}  // namespace

TEST_CASE("powerset operators of the Sierpinski structure") {
  const TransitionStructure& s = *test::sierp()->structure;
  OperatorTables ops = powerset_operators(s);
  CHECK(ops.box[mask(s, {"Q"})] == mask(s, {"P", "Q"}));
  CHECK(ops.diamond[mask(s, {"Q"})] == mask(s, {"P"}));
  CHECK(ops.box[mask(s, {"P", "Q"})] == mask(s, {"P", "Q"}));
}

TEST_CASE("powerset operators of the empty relation") {
  StructurePtr s = validate_structure({"a", "b", "c"}, std::vector<std::pair<NodeId, NodeId>>{});
  OperatorTables ops = powerset_operators(*s);
  for (std::uint32_t e = 0; e < 8; ++e) {
    CHECK(ops.box[e] == 7U);
    CHECK(ops.diamond[e] == 0U);
  }
}

TEST_CASE("duality and relation recovery on random structures") {
  for (std::uint64_t seed = 1; seed <= 200; ++seed) {
    Rng rng(seed);
    const std::size_t n = rng.between(0, 6);
    StructurePtr s = random_structure(rng, n, 0.3);
    OperatorTables ops = powerset_operators(*s);
    const std::uint32_t all = (1U << n) - 1;
    for (std::uint32_t e = 0; e <= all; ++e) {
      REQUIRE(ops.diamond[e] == (all & ~ops.box[all & ~e]));
    }
    for (NodeId p = 0; p < n; ++p) {
      for (NodeId q = 0; q < n; ++q) REQUIRE(s->has_edge(p, q) == (((ops.diamond[1U << q] >> p) & 1U) != 0));
    }
    CharacterizationReport r = characterize_operators(*s, ops);
    REQUIRE(r.lemma_holds);
    REQUIRE(r.relation_matches);
    REQUIRE(r.regenerates);
  }
}

TEST_CASE("characterize_operators on the worked tables") {
  const TransitionStructure& s = *test::sierp()->structure;
  CharacterizationReport exact = characterize_operators(s, powerset_operators(s));
  CHECK(exact.lemma_holds);
  CHECK(exact.relation_matches);
  CHECK(exact.regenerates);

  OperatorTables box_identity = powerset_operators(s);
  for (std::uint32_t e = 0; e < box_identity.box.size(); ++e) box_identity.box[e] = e;
  CharacterizationReport r1 = characterize_operators(s, box_identity);
  CHECK_FALSE(r1.regenerates);
  CHECK_FALSE(r1.witnesses.empty());

  OperatorTables no_diamond = powerset_operators(s);
  std::fill(no_diamond.diamond.begin(), no_diamond.diamond.end(), 0U);
  CharacterizationReport r2 = characterize_operators(s, no_diamond);
  CHECK(r2.reconstructed.empty());
  CHECK_FALSE(r2.relation_matches);
}

TEST_CASE("classify_node_map on the worked maps") {
  NodeMapReport t = classify_node_map(test::tight().nodes());
  CHECK(t.is_transition_morphism);
  CHECK_FALSE(t.is_simulation);
  CHECK(t.simulation_witness.has_value());

  StructurePtr s = test::sierp()->structure;
  NodeMapReport id = classify_node_map(NodeMap{s, s, {0, 1}});
  CHECK(id.is_transition_morphism);
  CHECK(id.is_simulation);

  NodeMapReport h = classify_node_map(test::homeo().nodes());
  CHECK(h.is_transition_morphism);
  CHECK_FALSE(h.is_simulation);
}

TEST_CASE("classify_node_map agrees with the definition on small structures") {
  std::size_t simulations = 0;
  for (std::uint64_t seed = 1; seed <= 2000; ++seed) {
    Rng rng(seed);
    StructurePtr s = random_structure(rng, rng.between(0, 4), 0.35);
    StructurePtr t = random_structure(rng, rng.between(1, 4), 0.35);
    std::vector<NodeId> map(s->size());
    for (NodeId& x : map) x = static_cast<NodeId>(rng.below(t->size()));
    NodeMap m{s, t, map};
    NodeMapReport r = classify_node_map(m);
    auto [morphism, simulation] = classify_by_definition(m);
    REQUIRE(r.is_transition_morphism == morphism);
    REQUIRE(r.is_simulation == simulation);
    simulations += simulation;
  }
  CHECK(simulations > 20);
}
