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

#include "plotgarden/plot.hpp"

#include <numeric>
#include <utility>

#include "plotgarden/error.hpp"

namespace pg {

NodeSet Plot::preimage(PointSet v) const {
  NodeSet out(size());
  for (NodeId n = 0; n < size(); ++n) {
    if (v.contains(valuation[n])) out.set(n);
  }
  return out;
}

PointSet Plot::image(const NodeSet& nodes) const {
  PointSet out;
  for_each_node(nodes, [&](NodeId n) { out.insert(valuation[n]); });
  return out;
}

PointSet Plot::unrooted() const {
  PointSet hit;
  for (PointId p : valuation) hit.insert(p);
  return hit.complement(space->size());
}

namespace {

Plot checked(StructurePtr structure, SpacePtr space, std::vector<PointId> valuation) {
  if (valuation.size() != structure->size()) {
    fail(Errc::ValuationNotTotal, std::to_string(structure->size()) + " nodes but " +
                                      std::to_string(valuation.size()) + " values");
  }
  for (NodeId n = 0; n < valuation.size(); ++n) {
    if (valuation[n] >= space->size()) {
      fail(Errc::ValuationNotTotal, "node '" + structure->name(n) + "' is valued outside the space");
    }
  }
  Plot p{std::move(structure), std::move(space), std::move(valuation), true};
  p.surjective = p.unrooted().empty();
  return p;
}

}  // namespace

PlotPtr validate_plot(StructurePtr structure, SpacePtr space, std::vector<PointId> valuation) {
  Plot p = checked(std::move(structure), std::move(space), std::move(valuation));
  if (!p.surjective) {
    PointId missing = p.unrooted().members().front();
    fail(Errc::ValuationNotSurjective, "no node is valued at '" + p.space->name(missing) + "'");
  }
  return std::make_shared<const Plot>(std::move(p));
}

PlotPtr assemble_plot(StructurePtr structure, SpacePtr space, std::vector<PointId> valuation) {
  return std::make_shared<const Plot>(checked(std::move(structure), std::move(space), std::move(valuation)));
}

PlotMapReport classify_plot_map(const PlotMap& m) {
  const Plot& src = *m.source;
  const Plot& tgt = *m.target;
  const TransitionStructure& sigma = *src.structure;
  const TransitionStructure& tau = *tgt.structure;
  const FiniteSpace& tspace = *tgt.space;

  if (m.point_map.size() != src.space->size()) fail(Errc::PointUnknown, "point map is not total");
  for (PointId p : m.point_map) {
    if (p >= tspace.size()) fail(Errc::PointUnknown, "point map leaves the target space");
  }
  NodeMapReport nodes = classify_node_map(m.nodes());
  for (NodeId n = 0; n < sigma.size(); ++n) {
    if (m.point_map[src.valuation[n]] != tgt.valuation[m.node_map[n]]) {
      fail(Errc::SquareViolation, "values disagree at node '" + sigma.name(n) + "'");
    }
  }

  PlotMapReport r;
  r.transition_morphism = nodes.is_transition_morphism;
  if (nodes.morphism_witness) r.witnesses["transition_morphism"] = *nodes.morphism_witness;
  r.is_simulation = nodes.is_simulation;
  if (nodes.simulation_witness) r.witnesses["is_simulation"] = *nodes.simulation_witness;
  if (auto bad = continuity_witness(*src.space, tspace, m.point_map)) {
    r.continuous = false;
    r.witnesses["continuous"] = "preimage of " + tspace.format(*bad) + " is not open";
  }
  r.is_plot_map = r.transition_morphism && r.continuous && r.square_commutes;

  auto mark = [&](bool& flag, const char* key, const std::string& why) {
    if (flag) r.witnesses[key] = why;
    flag = false;
  };

  // Verdicts depend on a target successor only through its value, so each
  // source node is checked once per distinct value.
  for (NodeId p = 0; p < sigma.size(); ++p) {
    const NodeSet& out = sigma.successors(p);
    PointSet via_target;  // tau.Phi of the successors, for the direct test
    PointSet via_source;  // phi.sigma of the successors, for the conditions
    for_each_node(out, [&](NodeId q) {
      via_target.insert(tgt.valuation[m.node_map[q]]);
      via_source.insert(m.point_map[src.valuation[q]]);
    });
    const PointSet closed = lens(tspace, via_target);

    std::vector<NodeId> first_at(tspace.size(), static_cast<NodeId>(-1));
    PointSet values;
    for_each_node(tau.successors(m.node_map[p]), [&](NodeId rn) {
      const PointId v = tgt.valuation[rn];
      if (!values.contains(v)) first_at[v] = rn;
      values.insert(v);
    });

    values.for_each([&](PointId r_val) {
      const std::string where =
          sigma.name(p) + " with " + tau.name(m.node_map[p]) + " -> " + tau.name(first_at[r_val]);
      if (!closed.contains(r_val)) mark(r.is_lentile, "is_lentile", where);
      if (!tspace.point_closure(r_val).intersects(via_source)) mark(r.up_condition, "up_condition", where);
      for (PointSet v : tspace.opens()) {
        if (v.contains(r_val) && !v.intersects(via_source)) {
          mark(r.minus_condition, "minus_condition", where + ", open " + tspace.format(v));
          break;
        }
      }
    });
  }
  r.lemma_consistent = r.is_lentile == (r.up_condition && r.minus_condition);
  return r;
}

PlotMap identity_map(const PlotPtr& p) {
  PlotMap id{p, p, std::vector<NodeId>(p->size()), std::vector<PointId>(p->space->size())};
  std::iota(id.node_map.begin(), id.node_map.end(), NodeId{0});
  std::iota(id.point_map.begin(), id.point_map.end(), PointId{0});
  return id;
}

PlotMap compose(const PlotMap& second, const PlotMap& first) {
  PlotMap out{first.source, second.target, std::vector<NodeId>(first.node_map.size()),
              std::vector<PointId>(first.point_map.size())};
  for (NodeId n = 0; n < first.node_map.size(); ++n) out.node_map[n] = second.node_map[first.node_map[n]];
  for (PointId p = 0; p < first.point_map.size(); ++p) out.point_map[p] = second.point_map[first.point_map[p]];
  return out;
}

Lift lift_with_laws(const Plot& p) {
  const FiniteSpace& space = *p.space;
  const TransitionStructure& s = *p.structure;
  const auto& opens = space.opens();
  const std::size_t k = opens.size();

  std::vector<NodeSet> pre(k), box_pre(k), dia_pre(k);
  for (ElemId i = 0; i < k; ++i) {
    pre[i] = p.preimage(opens[i]);
    box_pre[i] = s.box(pre[i]);
    dia_pre[i] = s.diamond(pre[i]);
  }

  Lift out;
  out.bed.frame = space.frame();
  out.bed.box.resize(k);
  out.bed.diamond.resize(k);
  for (ElemId i = 0; i < k; ++i) {
    PointSet b, d;
    for (ElemId j = 0; j < k; ++j) {
      if (pre[j].is_subset_of(box_pre[i])) b |= opens[j];
      if (pre[j].is_subset_of(dia_pre[i])) d |= opens[j];
    }
    out.bed.box[i] = space.require_open(b);
    out.bed.diamond[i] = space.require_open(d);
  }

  LawCheck box_def("lift.box_defining", "V <= box(U) iff sigma^-1 V <= box(sigma^-1 U)");
  LawCheck dia_def("lift.diamond_defining", "V <= diamond(U) iff sigma^-1 V <= diamond(sigma^-1 U)");
  LawCheck dia_bot("lift.diamond_bottom", "diamond(empty) = empty");
  LawCheck lax_box("lift.preimage_lax_box", "sigma^-1 box(U) <= box(sigma^-1 U)");
  LawCheck lax_dia("lift.preimage_lax_diamond", "sigma^-1 diamond(U) <= diamond(sigma^-1 U)");
  for (ElemId i = 0; i < k; ++i) {
    const PointSet b = opens[out.bed.box[i]];
    const PointSet d = opens[out.bed.diamond[i]];
    for (ElemId j = 0; j < k; ++j) {
      const std::string at = "U=" + space.format(opens[i]) + " V=" + space.format(opens[j]);
      box_def.require(opens[j].subset_of(b) == pre[j].is_subset_of(box_pre[i]), at);
      dia_def.require(opens[j].subset_of(d) == pre[j].is_subset_of(dia_pre[i]), at);
    }
    lax_box.require(pre[out.bed.box[i]].is_subset_of(box_pre[i]), "U=" + space.format(opens[i]));
    lax_dia.require(pre[out.bed.diamond[i]].is_subset_of(dia_pre[i]), "U=" + space.format(opens[i]));
  }
  dia_bot.require(out.bed.diamond[0] == 0, "diamond(empty) = " + space.format(opens[out.bed.diamond[0]]));

  out.laws = {box_def, dia_def};
  append(out.laws, bed_laws(out.bed, "lift"));
  out.laws.push_back(dia_bot);
  out.laws.push_back(lax_box);
  out.laws.push_back(lax_dia);
  return out;
}

Bed lift_operators(const Plot& p) {
  Lift lift = lift_with_laws(p);
  for (const LawCheck& law : lift.laws) {
    if (law.pass || (!p.surjective && law.id == "lift.diamond_bottom")) continue;
    fail(Errc::PostconditionFailure, law.id + " (" + law.statement + "): " + law.witness);
  }
  return std::move(lift.bed);
}

GardenPtr functor_G_object(const Plot& p) {
  Bed bed = lift_operators(p);
  std::vector<ElemId> covering(bed.frame->size());
  std::iota(covering.begin(), covering.end(), ElemId{0});
  return validate_garden(std::move(bed), p.space, std::move(covering));
}

GardenMorphism functor_G_arrow(const PlotMap& m, GardenPtr of_target, GardenPtr of_source) {
  PlotMapReport r = classify_plot_map(m);
  if (!r.is_plot_map) {
    fail(Errc::NotLentile, "not a plot map: " + (r.witnesses.empty() ? std::string() : r.witnesses.begin()->second));
  }
  if (!r.is_lentile) fail(Errc::NotLentile, r.witnesses["is_lentile"]);
  if (!of_target) of_target = functor_G_object(*m.target);
  if (!of_source) of_source = functor_G_object(*m.source);

  GardenMorphism gm{std::move(of_target), std::move(of_source), open_frame(m.points()).map, m.point_map};
  GardenMorphismReport check = check_garden_morphism(gm);
  if (!check.ok) {
    const LawCheck* bad = first_failure(check.laws);
    fail(Errc::PostconditionFailure, bad->id + ": " + bad->witness);
  }
  return gm;
}

}  // namespace pg
