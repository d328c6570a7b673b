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

#include "plotgarden/adjunction.hpp"

#include <algorithm>
#include <numeric>
#include <utility>

#include "plotgarden/error.hpp"

namespace pg {

namespace {

void throw_first(const LawList& laws) {
  if (const LawCheck* bad = first_failure(laws)) {
    fail(Errc::PostconditionFailure, bad->id + " (" + bad->statement + "): " + bad->witness);
  }
}

std::vector<PointId> identity_points(std::size_t n) {
  std::vector<PointId> id(n);
  std::iota(id.begin(), id.end(), PointId{0});
  return id;
}

bool is_identity(const std::vector<std::uint32_t>& map) {
  for (std::uint32_t i = 0; i < map.size(); ++i) {
    if (map[i] != i) return false;
  }
  return true;
}

}  // namespace

AlgebraicUnit algebraic_unit_with_laws(const GardenPtr& g) {
  AlgebraicUnit u{harvest(g), nullptr, {}, {UnitKind::Algebraic, {}}};
  u.furnished = functor_G_object(*u.harvest.plot);
  u.morphism = GardenMorphism{g, u.furnished, g->covering, identity_points(g->space->size())};
  u.report.laws = check_garden_morphism(u.morphism, "algebraic_unit").laws;
  return u;
}

GardenMorphism algebraic_unit(const GardenPtr& g) {
  AlgebraicUnit u = algebraic_unit_with_laws(g);
  throw_first(u.report.laws);
  return std::move(u.morphism);
}

ElemId unit_stalk(const Plot& p, NodeId n) {
  const FiniteSpace& s = *p.space;
  return s.require_open(closure(s, p.image(p.structure->successors(n))).complement(s.size()));
}

Filter unit_bloom(const Plot& p, NodeId n) {
  const FiniteSpace& s = *p.space;
  return Filter{s.require_open(saturation(s, p.image(p.structure->successors(n))))};
}

Flower unit_flower(const Plot& p, NodeId n) { return Flower{p.valuation[n], unit_stalk(p, n), unit_bloom(p, n)}; }

GeometricUnit geometric_unit_with_laws(const PlotPtr& p, const Harvest& of_G) {
  const Garden& g = *of_G.garden;
  const TransitionStructure& s = *p->structure;
  LawCheck flower("geometric_unit.flower", "each unit value is a flower");
  LawCheck steps("geometric_unit.transitions_preserved", "P -> Q gives unit(P) -> unit(Q)");
  LawCheck healthy("geometric_unit.healthy_image", "the unit values form a healthy set");
  LawCheck lands("geometric_unit.lands_in_harvest", "each unit value survives the harvest");
  LawCheck lentile("geometric_unit.lentile", "the unit is a lentile plot map");

  GeometricUnit u;
  u.report.kind = UnitKind::Geometric;
  u.map = PlotMap{p, of_G.plot, std::vector<NodeId>(s.size(), 0), identity_points(p->space->size())};
  std::vector<std::optional<std::size_t>> idx;
  for (NodeId n = 0; n < s.size(); ++n) {
    const Flower f = unit_flower(*p, n);
    u.flowers.push_back(f);
    idx.push_back(of_G.all.find(f));
    if (!idx.back()) flower.refute(s.name(n) + " gives " + flower_name(g, f));
    if (auto node = of_G.find(f)) u.map.node_map[n] = *node;
    else lands.refute(s.name(n) + " gives " + flower_name(g, f));
  }
  for (const auto& [a, b] : s.edges()) {
    if (idx[a] && idx[b] && !of_G.all.has_edge(*idx[a], *idx[b])) steps.refute(s.name(a) + " -> " + s.name(b));
  }
  std::vector<Flower> image = u.flowers;
  std::sort(image.begin(), image.end());
  image.erase(std::unique(image.begin(), image.end()), image.end());
  std::string why;
  if (!is_healthy(g, of_G.all, image, &why)) healthy.refute(why);

  if (!lands.pass) {
    lentile.refute("unit does not land in the harvest");
  } else {
    try {
      PlotMapReport r = classify_plot_map(u.map);
      if (!r.is_plot_map) lentile.refute("not a plot map");
      else if (!r.is_lentile) lentile.refute(r.witnesses["is_lentile"]);
    } catch (const Error& e) {
      lentile.refute(e.what());
    }
  }
  u.report.laws = {flower, steps, healthy, lands, lentile};
  return u;
}

PlotMap geometric_unit(const PlotPtr& p) {
  Harvest h = harvest(functor_G_object(*p));
  GeometricUnit u = geometric_unit_with_laws(p, h);
  throw_first(u.report.laws);
  return std::move(u.map);
}

LawList algebraic_naturality(const GardenMorphism& gm) {
  LawList laws;
  AlgebraicUnit at_target = algebraic_unit_with_laws(gm.target);
  AlgebraicUnit at_source = algebraic_unit_with_laws(gm.source);
  append(laws, scoped(at_target.report.laws, "target"));
  append(laws, scoped(at_source.report.laws, "source"));

  LawCheck square("naturality.algebraic_square", "unit . m = G(F m) . unit");
  HarvestArrow f_arrow = functor_F_arrow_with_laws(gm, at_target.harvest, at_source.harvest);
  append(laws, f_arrow.laws);
  if (!all_pass(f_arrow.laws)) {
    square.refute("F of the morphism failed its postconditions");
  } else {
    try {
      GardenMorphism gf = functor_G_arrow(f_arrow.map, at_source.furnished, at_target.furnished);
      GardenMorphism left = compose(at_target.morphism, gm);
      GardenMorphism right = compose(gf, at_source.morphism);
      if (left.frame_map != right.frame_map) square.refute("frame components differ");
      else if (left.point_map != right.point_map) square.refute("point components differ");
    } catch (const Error& e) {
      square.refute(e.what());
    }
  }
  laws.push_back(square);
  return laws;
}

LawList geometric_naturality(const PlotMap& m) {
  const Plot& src = *m.source;
  const Plot& tgt = *m.target;
  const TransitionStructure& s = *src.structure;
  LawCheck root("naturality.root", "tau . Phi = phi . sigma");
  LawCheck stalk("naturality.stalk", "stalk . Phi = phi_* . stalk");
  LawCheck bloom("naturality.bloom", "bloom . Phi = phi^-1 inverse image . bloom");
  LawCheck square("naturality.geometric_square", "F(G m) . unit = unit . m");

  const FrameMorphism pull = open_frame(m.points());
  const std::vector<ElemId> push = right_adjoint(pull);
  for (NodeId n = 0; n < s.size(); ++n) {
    const NodeId image = m.node_map[n];
    root.require(tgt.valuation[image] == m.point_map[src.valuation[n]], s.name(n));
    stalk.require(unit_stalk(tgt, image) == push[unit_stalk(src, n)], s.name(n));
    bloom.require(unit_bloom(tgt, image) == inverse_image(pull, unit_bloom(src, n)), s.name(n));
  }

  LawList laws;
  try {
    GardenPtr g_src = functor_G_object(src);
    GardenPtr g_tgt = functor_G_object(tgt);
    Harvest h_src = harvest(g_src);
    Harvest h_tgt = harvest(g_tgt);
    GeometricUnit u_src = geometric_unit_with_laws(m.source, h_src);
    GeometricUnit u_tgt = geometric_unit_with_laws(m.target, h_tgt);
    GardenMorphism gm = functor_G_arrow(m, g_tgt, g_src);
    HarvestArrow fg = functor_F_arrow_with_laws(gm, h_src, h_tgt);
    append(laws, scoped(u_src.report.laws, "source"));
    append(laws, scoped(u_tgt.report.laws, "target"));
    append(laws, fg.laws);
    if (!u_src.report.ok() || !u_tgt.report.ok() || !all_pass(fg.laws)) {
      square.refute("a unit or F(G m) failed its postconditions");
    } else {
      for (NodeId n = 0; n < s.size(); ++n) {
        const Flower& around = h_tgt.survivors[fg.map.node_map[u_src.map.node_map[n]]];
        square.require(around == u_tgt.flowers[m.node_map[n]], s.name(n));
      }
    }
  } catch (const Error& e) {
    square.refute(e.what());
  }
  laws.insert(laws.begin(), {root, stalk, bloom});
  laws.push_back(square);
  return laws;
}

LawList verify_idempotency(const GardenPtr& g) {
  LawList laws;
  AlgebraicUnit unit = algebraic_unit_with_laws(g);
  append(laws, unit.report.laws);
  const Garden& a = *g;
  const FrameMorphism alpha = a.covering_morphism();
  const std::vector<ElemId> alpha_star = right_adjoint(alpha);

  LawCheck stalk_fixed("idempotency.stalk_fixed", "alpha_*(alpha(a)) = a on harvested flowers");
  LawCheck bloom_fixed("idempotency.bloom_fixed", "alpha^-1(alpha[F]) = F on harvested flowers");
  for (const Flower& f : unit.harvest.survivors) {
    stalk_fixed.require(alpha_star[a.covering[f.stalk]] == f.stalk, flower_name(a, f));
    bloom_fixed.require(inverse_image(alpha, direct_image(alpha, f.bloom)) == f.bloom, flower_name(a, f));
  }
  laws.push_back(stalk_fixed);
  laws.push_back(bloom_fixed);

  Harvest rebuilt = harvest(unit.furnished);
  GeometricUnit eta = geometric_unit_with_laws(unit.harvest.plot, rebuilt);
  append(laws, eta.report.laws);
  LawCheck formula("idempotency.unit_formula", "unit on the harvest is (p,a,F) -> (p, alpha(a), alpha[F])");
  for (NodeId k = 0; k < unit.harvest.survivors.size(); ++k) {
    const Flower& f = unit.harvest.survivors[k];
    const Flower expect{f.root, a.covering[f.stalk], Filter{a.covering[f.bloom.generator]}};
    formula.require(eta.flowers[k] == expect, flower_name(a, f));
  }
  laws.push_back(formula);

  HarvestArrow back = functor_F_arrow_with_laws(unit.morphism, rebuilt, unit.harvest);
  append(laws, back.laws);
  LawCheck there("idempotency.harvest_roundtrip", "through the rebuilt harvest and back is the identity");
  LawCheck again("idempotency.rebuilt_roundtrip", "through the harvest and back to the rebuilt one is the identity");
  if (!eta.report.ok() || !all_pass(back.laws)) {
    there.refute("a transposed unit failed its postconditions");
    again.refute("a transposed unit failed its postconditions");
  } else {
    for (NodeId k = 0; k < eta.map.node_map.size(); ++k) {
      there.require(back.map.node_map[eta.map.node_map[k]] == k, unit.harvest.plot->structure->name(k));
    }
    for (NodeId k = 0; k < back.map.node_map.size(); ++k) {
      again.require(eta.map.node_map[back.map.node_map[k]] == k, rebuilt.plot->structure->name(k));
    }
  }
  laws.push_back(there);
  laws.push_back(again);
  return laws;
}

LawList verify_idempotency(const PlotPtr& p) {
  LawList laws;
  GardenPtr once = functor_G_object(*p);
  AlgebraicUnit unit = algebraic_unit_with_laws(once);
  append(laws, unit.report.laws);
  const Garden& g = *once;
  const Garden& bar = *unit.furnished;
  const FiniteFrame& frame = g.frame();
  const FiniteSpace& space = *p->space;

  LawCheck equal("idempotency.tables_equal", "G S and G(F(G S)) have the same operator tables");
  LawCheck up("idempotency.unit_inequality", "lifted operators of S are below those of the rebuilt harvest");
  LawCheck down("idempotency.transpose_inequality", "lifted operators of the rebuilt harvest are below those of S");
  for (ElemId u = 0; u < frame.size(); ++u) {
    const std::string at = space.format(space.open(u));
    equal.require(g.bed.box[u] == bar.bed.box[u] && g.bed.diamond[u] == bar.bed.diamond[u], at);
    up.require(frame.leq(g.bed.box[u], bar.bed.box[u]) && frame.leq(g.bed.diamond[u], bar.bed.diamond[u]), at);
    down.require(frame.leq(bar.bed.box[u], g.bed.box[u]) && frame.leq(bar.bed.diamond[u], g.bed.diamond[u]), at);
  }
  laws.push_back(equal);
  laws.push_back(up);
  laws.push_back(down);

  GeometricUnit eta = geometric_unit_with_laws(p, unit.harvest);
  append(laws, eta.report.laws);
  LawCheck composites("idempotency.transpose_composites", "the unit of G S and G of the plot unit are inverse");
  try {
    GardenMorphism g_eta = functor_G_arrow(eta.map, unit.furnished, once);
    append(laws, check_garden_morphism(g_eta, "transposed_unit").laws);
    GardenMorphism round = compose(g_eta, unit.morphism);
    GardenMorphism other = compose(unit.morphism, g_eta);
    composites.require(is_identity(round.frame_map) && is_identity(round.point_map), "on G S");
    composites.require(is_identity(other.frame_map) && is_identity(other.point_map), "on the rebuilt garden");
  } catch (const Error& e) {
    composites.refute(e.what());
  }
  laws.push_back(composites);
  return laws;
}

}  // namespace pg
