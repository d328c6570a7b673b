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

#include "plotgarden/suites.hpp"

#include <exception>

#include "plotgarden/adjunction.hpp"
#include "plotgarden/oracle.hpp"

namespace pg {

namespace {

bool discrete(const FiniteSpace& s) { return s.size() < 63 && s.opens().size() == (std::size_t{1} << s.size()); }
bool indiscrete(const FiniteSpace& s) { return s.opens().size() <= 2; }

std::string vector_diff(const std::vector<std::uint32_t>& a, const std::vector<std::uint32_t>& b, const char* what) {
  if (a.size() != b.size()) return std::string(what) + " sizes differ";
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] != b[i]) {
      return std::string(what) + " differ at " + std::to_string(i) + ": " + std::to_string(a[i]) + " vs " +
             std::to_string(b[i]);
    }
  }
  return {};
}

}  // namespace

bool oracle_sized(const Garden& g) {
  return g.space->size() <= kOracleMaxPoints && g.frame().size() <= kOracleMaxElements;
}

LawList plot_suite(const PlotPtr& p) {
  LawList laws = lift_with_laws(*p).laws;
  if (!p->surjective) {
    std::erase_if(laws, [](const LawCheck& l) { return l.id == "lift.diamond_bottom"; });
  }
  append(laws, verify_idempotency(p));
  laws.push_back(oracle::compare_lens(*p->space));
  laws.push_back(oracle::compare_lift(*p));
  GardenPtr g = functor_G_object(*p);
  if (oracle_sized(*g)) append(laws, oracle::compare_all(g));
  return scoped(std::move(laws), "plot");
}

LawList garden_suite(const GardenPtr& g) {
  LawList laws = verify_idempotency(g);
  if (oracle_sized(*g)) append(laws, oracle::compare_all(g));
  return scoped(std::move(laws), "garden");
}

LawList lentile_map_suite(const PlotMap& m) {
  PlotMapReport r = classify_plot_map(m);
  LawCheck lentile("classify.lentile", "the map is a lentile plot map");
  lentile.require(r.is_plot_map && r.is_lentile,
                  r.witnesses.count("is_lentile") ? r.witnesses.at("is_lentile") : "not a plot map");
  LawCheck lemma("classify.lemma_consistent", "lentile iff the (up) and (minus) conditions both hold");
  lemma.require(r.lemma_consistent, "direct lens test disagrees with the two conditions");
  LawList laws{lentile, lemma};
  if (lentile.pass) {
    LawCheck arrow("g_arrow.morphism", "G of a lentile map is a garden morphism");
    try {
      GardenMorphism gm = functor_G_arrow(m);
      GardenMorphismReport check = check_garden_morphism(gm, "g_arrow");
      append(laws, check.laws);
    } catch (const std::exception& e) {
      arrow.refute(e.what());
      laws.push_back(arrow);
    }
    append(laws, geometric_naturality(m));
  }
  return scoped(std::move(laws), "lentile_map");
}

LawList plot_map_suite(const PlotMap& m) {
  PlotMapReport r = classify_plot_map(m);
  LawCheck lemma("classify.lemma_consistent", "lentile iff the (up) and (minus) conditions both hold");
  lemma.require(r.lemma_consistent, "direct lens test disagrees with the two conditions");
  LawCheck sim("classify.simulation_lentile", "a simulation plot map is lentile");
  sim.require(!(r.is_plot_map && r.is_simulation) || r.is_lentile, "simulation that is not lentile");
  LawList laws{lemma, sim};
  const bool flat = m.source->space->size() == m.source->size() && m.target->space->size() == m.target->size();
  auto dead_ends_kept = [&] {
    for (NodeId p = 0; p < m.source->size(); ++p) {
      if (m.source->structure->successors(p).none() && m.target->structure->successors(m.node_map[p]).any()) {
        return false;
      }
    }
    return true;
  };
  if (flat && r.is_plot_map && discrete(*m.source->space) && discrete(*m.target->space)) {
    LawCheck ds("classify.flat_discrete_minus_simulation",
                "between flat discrete plots (minus) holds iff the node map is a simulation");
    ds.require(r.minus_condition == r.is_simulation, r.minus_condition ? "(minus) without simulation"
                                                                      : "simulation without (minus)");
    laws.push_back(ds);
  }
  if (flat && r.is_plot_map && indiscrete(*m.source->space) && indiscrete(*m.target->space)) {
    LawCheck dead("classify.flat_indiscrete_dead_ends",
                  "between flat indiscrete plots (minus) holds iff dead ends go to dead ends");
    dead.require(r.minus_condition == dead_ends_kept(), r.minus_condition ? "(minus) but a dead end is not kept"
                                                                         : "dead ends kept without (minus)");
    LawCheck lent("classify.flat_indiscrete_lentile", "between flat indiscrete plots (minus) implies lentile");
    lent.require(!r.minus_condition || r.is_lentile, "(minus) without lentile");
    laws.push_back(dead);
    laws.push_back(lent);
  }
  if (discrete(*m.target->space)) {
    LawCheck disc("classify.discrete_up_minus", "over a discrete target (up) holds iff (minus) holds");
    disc.require(r.up_condition == r.minus_condition, r.up_condition ? "(up) without (minus)" : "(minus) without (up)");
    laws.push_back(disc);
  }
  return scoped(std::move(laws), "plot_map");
}

LawList garden_morphism_suite(const GardenMorphism& gm) {
  LawList laws = check_garden_morphism(gm).laws;
  append(laws, algebraic_naturality(gm));
  return scoped(std::move(laws), "garden_morphism");
}

LawCheck g_contravariance(const PlotMap& first, const PlotMap& second) {
  LawCheck law("functor.g_contravariant", "G reverses composition of lentile maps");
  try {
    GardenPtr a = functor_G_object(*first.source);
    GardenPtr b = functor_G_object(*first.target);
    GardenPtr c = functor_G_object(*second.target);
    GardenMorphism whole = functor_G_arrow(compose(second, first), c, a);
    GardenMorphism parts = compose(functor_G_arrow(first, b, a), functor_G_arrow(second, c, b));
    std::string diff = vector_diff(whole.frame_map, parts.frame_map, "frame maps");
    if (diff.empty()) diff = vector_diff(whole.point_map, parts.point_map, "point maps");
    law.require(diff.empty(), diff);
  } catch (const std::exception& e) {
    law.refute(e.what());
  }
  return law;
}

LawCheck f_contravariance(const GardenMorphism& first, const GardenMorphism& second) {
  LawCheck law("functor.f_contravariant", "F reverses composition of garden morphisms");
  try {
    Harvest a = harvest(first.source);
    Harvest b = harvest(first.target);
    Harvest c = harvest(second.target);
    PlotMap whole = functor_F_arrow(compose(second, first), c, a);
    PlotMap parts = compose(functor_F_arrow(first, b, a), functor_F_arrow(second, c, b));
    std::string diff = vector_diff(whole.node_map, parts.node_map, "node maps");
    if (diff.empty()) diff = vector_diff(whole.point_map, parts.point_map, "point maps");
    law.require(diff.empty(), diff);
  } catch (const std::exception& e) {
    law.refute(e.what());
  }
  return law;
}

}  // namespace pg
