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

#include "plotgarden/generate.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <limits>
#include <numeric>
#include <sstream>

#include "plotgarden/adjunction.hpp"
#include "plotgarden/error.hpp"
#include "plotgarden/harvest.hpp"

namespace pg {

std::uint64_t Rng::below(std::uint64_t n) {
  // Rejection keeps the draw exactly uniform.
  const std::uint64_t limit = std::numeric_limits<std::uint64_t>::max() - std::numeric_limits<std::uint64_t>::max() % n;
  std::uint64_t x;
  do {
    x = engine_();
  } while (x >= limit);
  return x % n;
}

bool Rng::chance(double p) {
  constexpr std::uint64_t kScale = std::uint64_t{1} << 53;
  return static_cast<double>(engine_() >> 11) < p * static_cast<double>(kScale);
}

namespace {

// Opens of a finite space are at most 2^points; the garden limits cap the
// frame at 32 elements.
constexpr std::size_t kMaxProfilePoints = 5;

std::vector<std::string> numbered(const std::string& prefix, std::size_t n) {
  std::vector<std::string> out;
  for (std::size_t i = 0; i < n; ++i) out.push_back(prefix + std::to_string(i));
  return out;
}

PointSet random_subset(Rng& rng, std::size_t n) {
  PointSet s;
  for (PointId p = 0; p < n; ++p) {
    if (rng.chance(0.5)) s.insert(p);
  }
  return s;
}

}  // namespace

Profile parse_profile(std::string_view text) {
  Profile p;
  std::size_t pos = 0;
  while (pos < text.size()) {
    std::size_t end = text.find(',', pos);
    if (end == std::string_view::npos) end = text.size();
    std::string_view item = text.substr(pos, end - pos);
    pos = end + 1;
    if (item.empty()) continue;
    std::size_t eq = item.find('=');
    if (eq == std::string_view::npos) fail(Errc::ValidationError, "profile item '" + std::string(item) + "' has no '='");
    std::string_view key = item.substr(0, eq);
    std::string_view value = item.substr(eq + 1);
    auto as_size = [&]() {
      std::size_t v = 0;
      auto [ptr, ec] = std::from_chars(value.data(), value.data() + value.size(), v);
      if (ec != std::errc() || ptr != value.data() + value.size()) {
        fail(Errc::ValidationError, "profile value '" + std::string(value) + "' is not a count");
      }
      return v;
    };
    auto as_double = [&]() {
      double v = 0;
      auto [ptr, ec] = std::from_chars(value.data(), value.data() + value.size(), v);
      if (ec != std::errc() || ptr != value.data() + value.size() || v < 0 || v > 1) {
        fail(Errc::ValidationError, "profile value '" + std::string(value) + "' is not a density in [0,1]");
      }
      return v;
    };
    if (key == "nodes") p.min_nodes = p.max_nodes = as_size();
    else if (key == "points") p.min_points = p.max_points = as_size();
    else if (key == "min_nodes") p.min_nodes = as_size();
    else if (key == "max_nodes") p.max_nodes = as_size();
    else if (key == "min_points") p.min_points = as_size();
    else if (key == "max_points") p.max_points = as_size();
    else if (key == "edge_density") p.edge_density = as_double();
    else if (key == "open_density") p.open_density = as_double();
    else fail(Errc::ValidationError, "unknown profile key '" + std::string(key) + "'");
  }
  if (p.min_nodes > p.max_nodes) p.min_nodes = std::min(p.min_nodes, p.max_nodes);
  if (p.min_points > p.max_points) p.min_points = std::min(p.min_points, p.max_points);
  check_profile(p);
  return p;
}

std::string format_profile(const Profile& p) {
  std::ostringstream out;
  out << "min_nodes=" << p.min_nodes << ",max_nodes=" << p.max_nodes << ",min_points=" << p.min_points
      << ",max_points=" << p.max_points << ",edge_density=" << p.edge_density
      << ",open_density=" << p.open_density;
  return out.str();
}

void check_profile(const Profile& p) {
  if (p.min_points > p.max_nodes) {
    fail(Errc::ProfileUnsatisfiable, "at least " + std::to_string(p.min_points) + " points need as many nodes, but at most " +
                                         std::to_string(p.max_nodes) + " are allowed");
  }
  if (p.max_points > kMaxProfilePoints) {
    fail(Errc::ProfileUnsatisfiable, "generated spaces are limited to " + std::to_string(kMaxProfilePoints) + " points");
  }
  if (p.min_nodes > p.max_nodes || p.min_points > p.max_points) {
    fail(Errc::ProfileUnsatisfiable, "empty size range");
  }
}

SpacePtr random_space(Rng& rng, std::size_t points, double open_density, const std::string& prefix) {
  const auto cap = static_cast<std::size_t>(std::ceil(open_density * 2.0 * static_cast<double>(points)));
  std::vector<PointSet> subbasis(rng.between(0, cap));
  for (PointSet& s : subbasis) s = random_subset(rng, points);
  return generated_space(numbered(prefix, points), subbasis);
}

PlotPtr random_plot_over(Rng& rng, const SpacePtr& space, std::size_t nodes, double edge_density,
                         const std::string& prefix) {
  const std::size_t n = space->size();
  if (nodes < n || (n == 0 && nodes > 0)) fail(Errc::ProfileUnsatisfiable, "no surjective valuation fits");
  std::vector<PointId> valuation(nodes);
  for (NodeId i = 0; i < nodes; ++i) valuation[i] = i < n ? i : static_cast<PointId>(rng.below(n));
  rng.shuffle(valuation);
  std::vector<std::pair<NodeId, NodeId>> edges;
  for (NodeId a = 0; a < nodes; ++a) {
    for (NodeId b = 0; b < nodes; ++b) {
      if (rng.chance(edge_density)) edges.emplace_back(a, b);
    }
  }
  return validate_plot(validate_structure(numbered(prefix, nodes), edges), space, std::move(valuation));
}

PlotPtr random_plot(Rng& rng, const Profile& profile) {
  const std::size_t points = rng.between(profile.min_points, profile.max_points);
  // Nothing can be valued in the empty space.
  const std::size_t nodes = points == 0 ? 0 : rng.between(std::max(points, profile.min_nodes), profile.max_nodes);
  return random_plot_over(rng, random_space(rng, points, profile.open_density), nodes, profile.edge_density);
}

PulledGarden pulled_garden(Rng& rng, const Profile& profile) {
  PulledGarden out;
  const std::size_t k = rng.between(std::max<std::size_t>(1, profile.min_points), profile.max_points);
  const std::size_t nodes = rng.between(std::max(k, profile.min_nodes), std::max(k, profile.max_nodes));
  out.plot = random_plot_over(rng, random_space(rng, k, profile.open_density, "q"), nodes, profile.edge_density, "t");
  GardenPtr furnished = functor_G_object(*out.plot);
  const FiniteSpace& upper = *out.plot->space;

  const std::size_t m = rng.between(std::max<std::size_t>(1, profile.min_points), profile.max_points);
  std::vector<PointId> psi(m);
  for (PointId& p : psi) p = static_cast<PointId>(rng.below(k));
  auto pull = [&](PointSet v) {
    PointSet s;
    for (PointId p = 0; p < m; ++p) {
      if (v.contains(psi[p])) s.insert(p);
    }
    return s;
  };
  std::vector<PointSet> opens;
  for (PointSet v : upper.opens()) opens.push_back(pull(v));
  SpacePtr base = validate_space(numbered("p", m), opens);

  std::vector<ElemId> covering;
  for (PointSet v : upper.opens()) covering.push_back(base->require_open(pull(v)));
  out.garden = validate_garden(furnished->bed, base, std::move(covering));

  std::vector<ElemId> id(furnished->frame().size());
  std::iota(id.begin(), id.end(), ElemId{0});
  out.from_plot = GardenMorphism{furnished, out.garden, std::move(id), std::move(psi)};
  return out;
}

namespace {

PlotMap build_plot_map(Rng& rng, const Profile& profile, bool keep_lentile, bool discrete_target,
                       double merge_chance) {
  const std::size_t lo = std::max<std::size_t>(1, profile.min_points);
  const std::size_t nt = rng.between(lo, profile.max_points);
  SpacePtr tspace = discrete_target ? discrete_space(numbered("q", nt)) : random_space(rng, nt, profile.open_density, "q");

  const std::size_t ns = rng.between(lo, profile.max_points);
  std::vector<PointId> phi(ns);
  for (PointId& p : phi) p = static_cast<PointId>(rng.below(nt));
  std::vector<PointSet> subbasis;
  for (PointSet v : tspace->opens()) {
    PointSet s;
    for (PointId p = 0; p < ns; ++p) {
      if (v.contains(phi[p])) s.insert(p);
    }
    subbasis.push_back(s);
  }
  for (std::size_t extra = rng.between(0, ns); extra > 0; --extra) subbasis.push_back(random_subset(rng, ns));
  SpacePtr sspace = generated_space(numbered("p", ns), subbasis);
  const std::size_t nodes = rng.between(std::max(ns, profile.min_nodes), std::max(ns, profile.max_nodes));
  PlotPtr source = random_plot_over(rng, sspace, nodes, profile.edge_density);

  std::vector<PointId> tval;
  std::vector<NodeId> node_map(source->size());
  for (NodeId p = 0; p < source->size(); ++p) {
    const PointId v = phi[source->valuation[p]];
    std::vector<NodeId> same;
    for (NodeId t = 0; t < tval.size(); ++t) {
      if (tval[t] == v) same.push_back(t);
    }
    if (!same.empty() && rng.chance(merge_chance)) {
      node_map[p] = rng.pick(same);
    } else {
      node_map[p] = static_cast<NodeId>(tval.size());
      tval.push_back(v);
    }
  }
  PointSet hit;
  for (PointId v : tval) hit.insert(v);
  hit.complement(nt).for_each([&](PointId q) { tval.push_back(q); });
  if (rng.chance(0.3)) tval.push_back(static_cast<PointId>(rng.below(nt)));

  const std::size_t m = tval.size();
  std::vector<NodeSet> rows(m, NodeSet(m));
  const TransitionStructure& s = *source->structure;
  for (const auto& [a, b] : s.edges()) rows[node_map[a]].set(node_map[b]);

  // An extra X -> R keeps the map lentile when tau(R) lies in the lens of
  // the valued successors of every node over X.
  std::vector<PointSet> lens_at(source->size());
  for (NodeId p = 0; p < source->size(); ++p) {
    PointSet valued;
    for_each_node(s.successors(p), [&](NodeId q) { valued.insert(tval[node_map[q]]); });
    lens_at[p] = lens(*tspace, valued);
  }
  const double extra = profile.edge_density / 2;
  for (NodeId x = 0; x < m; ++x) {
    for (NodeId r = 0; r < m; ++r) {
      if (rows[x].test(r) || !rng.chance(extra)) continue;
      bool safe = true;
      for (NodeId p = 0; p < source->size(); ++p) {
        if (node_map[p] == x && !lens_at[p].contains(tval[r])) safe = false;
      }
      if (safe || !keep_lentile) rows[x].set(r);
    }
  }
  StructurePtr tstruct = structure_from_rows(numbered("m", m), std::move(rows));
  PlotPtr target = validate_plot(tstruct, tspace, std::move(tval));
  return PlotMap{source, target, std::move(node_map), std::move(phi)};
}

}  // namespace

PlotMap random_flat_map(Rng& rng, const Profile& profile, FlatTopology topology) {
  const std::size_t lo = std::max<std::size_t>(1, profile.min_points);
  const std::size_t ns = rng.between(lo, profile.max_points);
  const std::size_t nt = rng.between(lo, profile.max_points);
  auto flat = [&](const std::string& prefix, std::size_t n, std::vector<NodeSet> rows) {
    SpacePtr space = topology == FlatTopology::Discrete ? discrete_space(numbered(prefix, n))
                                                        : indiscrete_space(numbered(prefix, n));
    std::vector<PointId> id(n);
    std::iota(id.begin(), id.end(), PointId{0});
    return validate_plot(structure_from_rows(numbered(prefix, n), std::move(rows)), space, std::move(id));
  };
  std::vector<NodeSet> srows(ns, NodeSet(ns));
  for (auto& row : srows) {
    for (NodeId q = 0; q < ns; ++q) {
      if (rng.chance(profile.edge_density)) row.set(q);
    }
  }
  std::vector<NodeId> node_map(ns);
  for (NodeId& t : node_map) t = static_cast<NodeId>(rng.below(nt));
  std::vector<NodeSet> trows(nt, NodeSet(nt));
  for (NodeId p = 0; p < ns; ++p) for_each_node(srows[p], [&](NodeId q) { trows[node_map[p]].set(node_map[q]); });
  for (auto& row : trows) {
    for (NodeId r = 0; r < nt; ++r) {
      if (rng.chance(profile.edge_density / 2)) row.set(r);
    }
  }
  PlotPtr source = flat("a", ns, std::move(srows));
  PlotPtr target = flat("b", nt, std::move(trows));
  std::vector<PointId> point_map(node_map.begin(), node_map.end());
  return PlotMap{source, target, std::move(node_map), std::move(point_map)};
}

PlotMap random_plot_map(Rng& rng, const Profile& profile, bool keep_lentile, bool discrete_target) {
  if (!keep_lentile) return build_plot_map(rng, profile, false, discrete_target, 0.5);
  // Merged target nodes inherit transitions from every node over them, which
  // can break the lens condition outright.  An injective node map is a
  // simulation and always lentile, so it is the last resort.
  for (int attempt = 0; attempt < 8; ++attempt) {
    PlotMap m = build_plot_map(rng, profile, true, discrete_target, 0.5);
    PlotMapReport r = classify_plot_map(m);
    if (r.is_plot_map && r.is_lentile) return m;
  }
  return build_plot_map(rng, profile, true, discrete_target, 0.0);
}

InstanceSet generate_instances(std::uint64_t seed, const Profile& profile) {
  check_profile(profile);
  Rng rng(seed);
  InstanceSet out;
  out.seed = seed;

  PlotPtr plot = random_plot(rng, profile);
  PulledGarden pulled = pulled_garden(rng, profile);
  PlotMap constructed = random_plot_map(rng, profile, true);
  out.plot_maps.push_back(random_plot_map(rng, profile, false));
  out.plot_maps.push_back(random_plot_map(rng, profile, false, true));
  out.plot_maps.push_back(random_flat_map(rng, profile, FlatTopology::Discrete));
  out.plot_maps.push_back(random_flat_map(rng, profile, FlatTopology::Indiscrete));

  out.plots = {plot, pulled.plot};
  out.gardens = {functor_G_object(*plot), pulled.garden};

  Harvest of_pulled = harvest(pulled.garden);
  Harvest of_upper = harvest(pulled.from_plot.source);
  out.lentile_maps.emplace_back("identity", identity_map(plot));
  out.lentile_maps.emplace_back("geometric_unit", geometric_unit(plot));
  out.lentile_maps.emplace_back("constructed", constructed);
  out.lentile_maps.emplace_back("harvest_arrow", functor_F_arrow(pulled.from_plot, of_pulled, of_upper));

  out.garden_morphisms.emplace_back("identity", identity_morphism(pulled.garden));
  out.garden_morphisms.emplace_back("pullback", pulled.from_plot);
  out.garden_morphisms.emplace_back("algebraic_unit", algebraic_unit(pulled.garden));
  out.garden_morphisms.emplace_back("functor_G", functor_G_arrow(constructed));
  return out;
}

}  // namespace pg
