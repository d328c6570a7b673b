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

#include "plotgarden/shrink.hpp"

#include <algorithm>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "plotgarden/error.hpp"

namespace pg {

namespace {

struct Parts {
  std::vector<std::string> nodes;
  std::vector<std::pair<NodeId, NodeId>> edges;
  std::vector<std::string> points;
  std::vector<PointSet> opens;
  std::vector<PointId> valuation;
  bool surjective = true;
};

Parts parts_of(const Plot& p) {
  return Parts{p.structure->names(), p.structure->edges(), p.space->names(), p.space->opens(), p.valuation,
               p.surjective};
}

std::optional<PlotPtr> build(const Parts& parts) {
  try {
    StructurePtr s = validate_structure(parts.nodes, parts.edges);
    SpacePtr sp = validate_space(parts.points, parts.opens);
    return parts.surjective ? validate_plot(s, sp, parts.valuation) : assemble_plot(s, sp, parts.valuation);
  } catch (const Error&) {
    return std::nullopt;
  }
}

Parts without_edge(Parts p, std::size_t e) {
  p.edges.erase(p.edges.begin() + static_cast<std::ptrdiff_t>(e));
  return p;
}

// Keeps the nodes with keep[n]; renumbers edges.
Parts restrict_nodes(const Parts& p, const std::vector<bool>& keep) {
  Parts out = p;
  out.nodes.clear();
  out.valuation.clear();
  out.edges.clear();
  std::vector<NodeId> renum(p.nodes.size(), 0);
  for (NodeId n = 0; n < p.nodes.size(); ++n) {
    if (!keep[n]) continue;
    renum[n] = static_cast<NodeId>(out.nodes.size());
    out.nodes.push_back(p.nodes[n]);
    out.valuation.push_back(p.valuation[n]);
  }
  for (const auto& [a, b] : p.edges) {
    if (keep[a] && keep[b]) out.edges.emplace_back(renum[a], renum[b]);
  }
  return out;
}

Parts without_node(const Parts& p, NodeId n) {
  std::vector<bool> keep(p.nodes.size(), true);
  keep[n] = false;
  return restrict_nodes(p, keep);
}

// Subspace on the remaining points; nodes over the dropped point go too.
Parts without_point(const Parts& p, PointId x) {
  std::vector<bool> keep(p.nodes.size());
  for (NodeId n = 0; n < p.nodes.size(); ++n) keep[n] = p.valuation[n] != x;
  Parts out = restrict_nodes(p, keep);
  auto squeeze = [x](PointSet s) {
    PointSet r;
    s.for_each([&](PointId q) {
      if (q != x) r.insert(q < x ? q : q - 1);
    });
    return r;
  };
  for (PointId& v : out.valuation) v = v < x ? v : v - 1;
  out.points.erase(out.points.begin() + x);
  std::vector<PointSet> opens;
  for (PointSet o : p.opens) {
    PointSet r = squeeze(o);
    if (std::find(opens.begin(), opens.end(), r) == opens.end()) opens.push_back(r);
  }
  out.opens = std::move(opens);
  return out;
}

Parts without_open(Parts p, std::size_t i) {
  p.opens.erase(p.opens.begin() + static_cast<std::ptrdiff_t>(i));
  return p;
}

}  // namespace

ShrinkResult shrink_plot(const PlotPtr& start, const PlotPredicate& fails, std::size_t max_tries) {
  ShrinkResult result{start, 0};
  std::size_t tries = 0;
  auto accept = [&](const Parts& candidate) {
    if (tries >= max_tries) return false;
    ++tries;
    std::optional<PlotPtr> p = build(candidate);
    if (!p) return false;
    bool still = false;
    try {
      still = fails(*p);
    } catch (const std::exception&) {
      still = false;
    }
    if (still) {
      result.plot = *p;
      ++result.steps;
    }
    return still;
  };

  bool progress = true;
  while (progress && tries < max_tries) {
    progress = false;
    Parts cur = parts_of(*result.plot);
    for (PointId x = 0; x < cur.points.size() && !progress; ++x) progress = accept(without_point(cur, x));
    for (NodeId n = 0; n < cur.nodes.size() && !progress; ++n) progress = accept(without_node(cur, n));
    for (std::size_t i = 0; i < cur.opens.size() && !progress; ++i) progress = accept(without_open(cur, i));
    for (std::size_t e = 0; e < cur.edges.size() && !progress; ++e) progress = accept(without_edge(cur, e));
  }
  return result;
}

}  // namespace pg
