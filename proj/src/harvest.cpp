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

#include "plotgarden/harvest.hpp"

#include <algorithm>
#include <deque>
#include <utility>

#include "plotgarden/error.hpp"

namespace pg {

namespace {

// Generator of {x : member(x)}, checked to generate exactly that set.
template <class Member>
Filter principal(const FiniteFrame& a, Member member, const char* what) {
  std::vector<ElemId> members;
  for (ElemId x = 0; x < a.size(); ++x) {
    if (member(x)) members.push_back(x);
  }
  if (members.empty()) fail(Errc::PostconditionFailure, std::string(what) + " is empty");
  Filter f{a.meet_all(members)};
  for (ElemId x = 0; x < a.size(); ++x) {
    if (member(x) != contains(a, f, x)) {
      fail(Errc::PostconditionFailure, std::string(what) + " is not a principal filter");
    }
  }
  return f;
}

}  // namespace

PointFilters point_filters(const Garden& g, PointId p) {
  if (p >= g.space->size()) fail(Errc::PointUnknown, "point #" + std::to_string(p) + " is not in the space");
  const FiniteFrame& a = g.frame();
  PointFilters out;
  out.nabla = principal(a, [&](ElemId x) { return g.cover(x).contains(p); }, "nabla");
  out.pbb = principal(a, [&](ElemId x) { return contains(a, out.nabla, g.bed.box[x]); }, "box pullback");
  for (ElemId x = 0; x < a.size(); ++x) {
    if (!contains(a, out.nabla, g.bed.diamond[x])) out.pdd.push_back(x);
  }
  return out;
}

std::optional<std::size_t> FlowerStructure::find(const Flower& f) const {
  auto it = std::lower_bound(flowers.begin(), flowers.end(), f);
  if (it == flowers.end() || *it != f) return std::nullopt;
  return static_cast<std::size_t>(it - flowers.begin());
}

FlowerStructure flower_structure(const Garden& g, const GardenLimits& limits) {
  const FiniteFrame& a = g.frame();
  const std::size_t n = g.space->size();
  if (a.size() > limits.max_elements || n > limits.max_points) {
    fail(Errc::SizeLimit, "garden with " + std::to_string(a.size()) + " elements over " + std::to_string(n) +
                              " points exceeds the configured limits");
  }
  FlowerStructure fs;
  for (PointId p = 0; p < n; ++p) fs.at.push_back(point_filters(g, p));

  for (PointId p = 0; p < n; ++p) {
    const std::size_t first = fs.flowers.size();
    for (ElemId stalk : fs.at[p].pdd) {
      for (ElemId c = 0; c < a.size(); ++c) {
        if (a.leq(c, fs.at[p].pbb.generator)) fs.flowers.push_back(Flower{p, stalk, Filter{c}});
      }
    }
    fs.by_root.emplace_back(first, fs.flowers.size());
  }

  fs.step_roots.reserve(fs.flowers.size());
  for (const Flower& f : fs.flowers) {
    PointSet roots;
    for (PointId q = 0; q < n; ++q) {
      const Filter nq = fs.at[q].nabla;
      if (!contains(a, nq, f.stalk) && subset(a, f.bloom, nq)) roots.insert(q);
    }
    fs.step_roots.push_back(roots);
  }
  return fs;
}

std::string flower_name(const Garden& g, const Flower& f) {
  const FiniteFrame& a = g.frame();
  return "(" + g.space->name(f.root) + "," + a.name(f.stalk) + ",^" + a.name(f.bloom.generator) + ")";
}

namespace {

// Health of one flower given the roots that still carry members.  A step to
// root q reaches some member exactly when q is live, and x in nabla(q)
// exactly when q lies in cover(x).
struct HealthTest {
  const Garden& g;
  const FlowerStructure& fs;

  // Empty string when healthy.
  std::string operator()(const Flower& f, std::size_t idx, PointSet live) const {
    const FiniteFrame& a = g.frame();
    const PointSet reach = fs.step_roots[idx] & live;
    for (ElemId x = 0; x < a.size(); ++x) {
      const PointSet in = g.cover(x);
      if (!contains(a, f.bloom, x) && (reach & in.complement(g.space->size())).empty()) {
        return "no step leaves " + a.name(x) + " outside nabla";
      }
      if (!a.leq(x, f.stalk) && !reach.intersects(in)) {
        return "no step puts " + a.name(x) + " in nabla";
      }
    }
    return {};
  }
};

}  // namespace

bool is_healthy(const Garden& g, const FlowerStructure& fs, const std::vector<Flower>& members,
                std::string* witness) {
  PointSet live;
  std::vector<std::size_t> idx;
  for (const Flower& f : members) {
    auto i = fs.find(f);
    if (!i) {
      if (witness) *witness = flower_name(g, f) + " is not a flower";
      return false;
    }
    idx.push_back(*i);
    live.insert(f.root);
  }
  HealthTest test{g, fs};
  for (std::size_t k = 0; k < members.size(); ++k) {
    std::string why = test(members[k], idx[k], live);
    if (!why.empty()) {
      if (witness) *witness = flower_name(g, members[k]) + ": " + why;
      return false;
    }
  }
  return true;
}

std::optional<NodeId> Harvest::find(const Flower& f) const {
  auto it = std::lower_bound(survivors.begin(), survivors.end(), f);
  if (it == survivors.end() || *it != f) return std::nullopt;
  return static_cast<NodeId>(it - survivors.begin());
}

Harvest harvest(const GardenPtr& g, const GardenLimits& limits) {
  Harvest h;
  h.garden = g;
  h.all = flower_structure(*g, limits);
  const FlowerStructure& fs = h.all;
  const std::size_t n = g->space->size();
  const std::size_t count = fs.flowers.size();

  // Flowers that can step to each root: when a root loses its last member
  // these are rechecked.
  std::vector<std::vector<std::size_t>> watchers(n);
  for (std::size_t i = 0; i < count; ++i) {
    fs.step_roots[i].for_each([&](PointId q) { watchers[q].push_back(i); });
  }
  std::vector<std::size_t> per_root(n, 0);
  PointSet live;
  for (PointId p = 0; p < n; ++p) {
    per_root[p] = fs.by_root[p].second - fs.by_root[p].first;
    if (per_root[p] > 0) live.insert(p);
  }

  std::vector<char> alive(count, 1), queued(count, 1);
  std::deque<std::size_t> work;
  for (std::size_t i = 0; i < count; ++i) work.push_back(i);
  HealthTest test{*g, fs};
  while (!work.empty()) {
    const std::size_t i = work.front();
    work.pop_front();
    queued[i] = 0;
    if (!alive[i] || test(fs.flowers[i], i, live).empty()) continue;
    alive[i] = 0;
    const PointId root = fs.flowers[i].root;
    if (--per_root[root] > 0) continue;
    live.erase(root);
    for (std::size_t w : watchers[root]) {
      if (alive[w] && !queued[w]) {
        queued[w] = 1;
        work.push_back(w);
      }
    }
  }

  std::vector<std::pair<std::size_t, std::size_t>> range(n, {0, 0});
  for (std::size_t i = 0; i < count; ++i) {
    if (!alive[i]) continue;
    const PointId root = fs.flowers[i].root;
    if (range[root].first == range[root].second) range[root] = {h.survivors.size(), h.survivors.size()};
    h.survivors.push_back(fs.flowers[i]);
    range[root].second = h.survivors.size();
    if (fs.flowers[i].bloom.generator == g->frame().bottom()) h.uses_improper_filter = true;
  }

  const std::size_t m = h.survivors.size();
  std::vector<std::string> names;
  std::vector<NodeSet> rows;
  std::vector<PointId> valuation;
  names.reserve(m);
  rows.reserve(m);
  valuation.reserve(m);
  for (const Flower& f : h.survivors) {
    names.push_back(flower_name(*g, f));
    NodeSet row(m);
    (fs.step_roots[*fs.find(f)] & live).for_each([&](PointId q) {
      for (std::size_t k = range[q].first; k < range[q].second; ++k) row.set(k);
    });
    rows.push_back(std::move(row));
    valuation.push_back(f.root);
  }
  h.plot = assemble_plot(structure_from_rows(std::move(names), std::move(rows)), g->space, std::move(valuation));
  h.unrooted = h.plot->unrooted();
  return h;
}

HarvestArrow functor_F_arrow_with_laws(const GardenMorphism& gm, const Harvest& of_target,
                                       const Harvest& of_source) {
  const Garden& b_garden = *gm.source;
  const FrameMorphism f = gm.frame_morphism();
  const std::vector<ElemId> f_star = right_adjoint(f);

  LawCheck flower_valued("harvest_arrow.flower_valued", "Psi sends harvested flowers to flowers");
  LawCheck edges("harvest_arrow.edge_preserving", "Psi preserves transitions");
  LawCheck healthy("harvest_arrow.healthy_image", "the image of Psi is healthy");
  LawCheck lands("harvest_arrow.lands_in_harvest", "the image of Psi lies in the harvest");
  LawCheck lentile("harvest_arrow.lentile", "Psi with phi is a lentile plot map");

  HarvestArrow out;
  out.map.source = of_target.plot;
  out.map.target = of_source.plot;
  out.map.point_map = gm.point_map;
  out.map.node_map.assign(of_target.survivors.size(), 0);

  std::vector<Flower> image;
  std::vector<std::optional<std::size_t>> as_flower;
  for (NodeId k = 0; k < of_target.survivors.size(); ++k) {
    const Flower& fl = of_target.survivors[k];
    Flower psi{gm.point_map[fl.root], f_star[fl.stalk], Filter{}};
    try {
      psi.bloom = inverse_image(f, fl.bloom);
    } catch (const Error& e) {
      flower_valued.refute(flower_name(*gm.target, fl) + ": " + e.what());
      as_flower.emplace_back();
      continue;
    }
    auto idx = of_source.all.find(psi);
    as_flower.push_back(idx);
    if (!idx) {
      flower_valued.refute(flower_name(*gm.target, fl) + " goes to " + flower_name(b_garden, psi));
      continue;
    }
    image.push_back(psi);
    if (auto node = of_source.find(psi)) {
      out.map.node_map[k] = *node;
    } else {
      lands.refute(flower_name(b_garden, psi) + " was pruned");
    }
  }

  const TransitionStructure& s = *of_target.plot->structure;
  for (NodeId p = 0; p < s.size() && edges.pass; ++p) {
    if (!as_flower[p]) continue;
    for_each_node(s.successors(p), [&](NodeId q) {
      if (edges.pass && as_flower[q] && !of_source.all.has_edge(*as_flower[p], *as_flower[q])) {
        edges.refute(s.name(p) + " -> " + s.name(q));
      }
    });
  }

  std::sort(image.begin(), image.end());
  image.erase(std::unique(image.begin(), image.end()), image.end());
  std::string why;
  if (!is_healthy(b_garden, of_source.all, image, &why)) healthy.refute(why);

  if (!flower_valued.pass || !lands.pass) {
    lentile.refute("map does not land in the harvest");
  } else {
    try {
      PlotMapReport r = classify_plot_map(out.map);
      if (!r.is_plot_map) lentile.refute("not a plot map");
      else if (!r.is_lentile) lentile.refute(r.witnesses["is_lentile"]);
    } catch (const Error& e) {
      lentile.refute(e.what());
    }
  }
  out.laws = {flower_valued, edges, healthy, lands, lentile};
  return out;
}

PlotMap functor_F_arrow(const GardenMorphism& gm, const Harvest& of_target, const Harvest& of_source) {
  HarvestArrow arrow = functor_F_arrow_with_laws(gm, of_target, of_source);
  if (const LawCheck* bad = first_failure(arrow.laws)) {
    fail(Errc::PostconditionFailure, bad->id + ": " + bad->witness);
  }
  return std::move(arrow.map);
}

}  // namespace pg
