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

#include "plotgarden/transition.hpp"

#include "plotgarden/error.hpp"

namespace pg {

std::optional<NodeId> TransitionStructure::find(std::string_view name) const {
  auto it = index_.find(std::string(name));
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

NodeId TransitionStructure::index(std::string_view name) const {
  auto p = find(name);
  if (!p) fail(Errc::NodeUnknown, "no node named '" + std::string(name) + "'");
  return *p;
}

std::vector<std::pair<NodeId, NodeId>> TransitionStructure::edges() const {
  std::vector<std::pair<NodeId, NodeId>> out;
  for (NodeId p = 0; p < size(); ++p) {
    for_each_node(succ_[p], [&](NodeId q) { out.emplace_back(p, q); });
  }
  return out;
}

std::size_t TransitionStructure::edge_count() const {
  std::size_t n = 0;
  for (const auto& row : succ_) n += row.count();
  return n;
}

NodeSet TransitionStructure::box(const NodeSet& e) const {
  NodeSet out(size());
  for (NodeId p = 0; p < size(); ++p) {
    if (succ_[p].is_subset_of(e)) out.set(p);
  }
  return out;
}

NodeSet TransitionStructure::diamond(const NodeSet& e) const {
  NodeSet out(size());
  for (NodeId p = 0; p < size(); ++p) {
    if (succ_[p].intersects(e)) out.set(p);
  }
  return out;
}

StructurePtr validate_structure(std::vector<std::string> nodes, const std::vector<std::pair<NodeId, NodeId>>& edges) {
  std::vector<NodeSet> rows(nodes.size(), NodeSet(nodes.size()));
  for (auto [p, q] : edges) {
    if (p >= nodes.size() || q >= nodes.size()) fail(Errc::NodeUnknown, "edge refers to a node out of range");
    rows[p].set(q);
  }
  return structure_from_rows(std::move(nodes), std::move(rows));
}

StructurePtr validate_structure(std::vector<std::string> nodes,
                                const std::vector<std::pair<std::string, std::string>>& edges) {
  std::unordered_map<std::string, NodeId> ids;
  for (NodeId i = 0; i < nodes.size(); ++i) ids.emplace(nodes[i], i);
  std::vector<std::pair<NodeId, NodeId>> pairs;
  for (const auto& [p, q] : edges) {
    auto ip = ids.find(p);
    auto iq = ids.find(q);
    if (ip == ids.end()) fail(Errc::NodeUnknown, "edge mentions unknown node '" + p + "'");
    if (iq == ids.end()) fail(Errc::NodeUnknown, "edge mentions unknown node '" + q + "'");
    pairs.emplace_back(ip->second, iq->second);
  }
  return validate_structure(std::move(nodes), pairs);
}

StructurePtr structure_from_rows(std::vector<std::string> nodes, std::vector<NodeSet> rows) {
  auto s = std::make_shared<TransitionStructure>();
  for (NodeId i = 0; i < nodes.size(); ++i) {
    if (!s->index_.emplace(nodes[i], i).second) fail(Errc::DuplicateName, "node '" + nodes[i] + "' listed twice");
  }
  if (rows.size() != nodes.size()) fail(Errc::NodeUnknown, "successor rows do not match the node count");
  for (auto& row : rows) {
    if (row.size() != nodes.size()) fail(Errc::NodeUnknown, "successor row has the wrong width");
  }
  s->names_ = std::move(nodes);
  s->succ_ = std::move(rows);
  return s;
}

OperatorTables powerset_operators(const TransitionStructure& s) {
  const std::size_t n = s.size();
  if (n > kMaxTabulatedNodes) {
    fail(Errc::SizeLimit, "operator tables are only built for up to " + std::to_string(kMaxTabulatedNodes) +
                              " nodes");
  }
  const std::uint32_t full = (std::uint32_t{1} << n) - 1;
  std::vector<std::uint32_t> succ(n, 0);
  for (NodeId p = 0; p < n; ++p) {
    for_each_node(s.successors(p), [&](NodeId q) { succ[p] |= std::uint32_t{1} << q; });
  }
  OperatorTables t;
  t.nodes = n;
  t.box.resize(std::size_t{1} << n);
  t.diamond.resize(std::size_t{1} << n);
  for (std::uint32_t e = 0; e <= full; ++e) {
    std::uint32_t b = 0;
    std::uint32_t d = 0;
    for (NodeId p = 0; p < n; ++p) {
      if ((succ[p] & ~e) == 0) b |= std::uint32_t{1} << p;
      if ((succ[p] & e) != 0) d |= std::uint32_t{1} << p;
    }
    t.box[e] = b;
    t.diamond[e] = d;
  }
  for (std::uint32_t e = 0; e <= full; ++e) {
    if (t.diamond[e] != (~t.box[~e & full] & full)) {
      fail(Errc::PostconditionFailure, "box/diamond duality broken at subset " + std::to_string(e));
    }
  }
  return t;
}

CharacterizationReport characterize_operators(const TransitionStructure& s, const OperatorTables& ops) {
  const std::size_t n = ops.nodes;
  CharacterizationReport r;
  if (n != s.size()) fail(Errc::NodeUnknown, "operator tables do not match the structure");
  const std::uint32_t full = (std::uint32_t{1} << n) - 1;
  auto note = [&](bool& flag, const std::string& why) {
    if (flag) r.witnesses.push_back(why);
    flag = false;
  };

  // Binary and nullary preservation is enough on a finite powerset.
  if (ops.box[full] != full) note(r.box_top, "box(all) != all");
  if (ops.diamond[0] != 0) note(r.diamond_bottom, "diamond({}) != {}");
  for (std::uint32_t e = 0; e <= full; ++e) {
    for (std::uint32_t f = e + 1; f <= full; ++f) {
      if (r.box_meets && ops.box[e & f] != (ops.box[e] & ops.box[f])) {
        note(r.box_meets, "box fails on intersection of " + std::to_string(e) + " and " + std::to_string(f));
      }
      if (r.diamond_joins && ops.diamond[e | f] != (ops.diamond[e] | ops.diamond[f])) {
        note(r.diamond_joins, "diamond fails on union of " + std::to_string(e) + " and " + std::to_string(f));
      }
    }
    if (r.duality && ops.diamond[e] != (~ops.box[~e & full] & full)) {
      note(r.duality, "diamond and box are not dual at " + std::to_string(e));
    }
  }
  r.lemma_holds = r.box_top && r.box_meets && r.diamond_bottom && r.diamond_joins;

  std::vector<std::uint32_t> succ(n, 0);
  for (NodeId q = 0; q < n; ++q) {
    std::uint32_t preds = ops.diamond[std::uint32_t{1} << q];
    for (NodeId p = 0; p < n; ++p) {
      if ((preds >> p) & 1U) {
        r.reconstructed.emplace_back(p, q);
        succ[p] |= std::uint32_t{1} << q;
      }
    }
  }
  for (NodeId p = 0; p < n; ++p) {
    for (NodeId q = 0; q < n; ++q) {
      bool rec = (succ[p] >> q) & 1U;
      if (r.relation_matches && rec != s.has_edge(p, q)) {
        note(r.relation_matches, "reconstructed relation differs at " + s.name(p) + " -> " + s.name(q));
      }
    }
  }
  for (std::uint32_t e = 0; e <= full && r.regenerates; ++e) {
    std::uint32_t b = 0;
    std::uint32_t d = 0;
    for (NodeId p = 0; p < n; ++p) {
      if ((succ[p] & ~e) == 0) b |= std::uint32_t{1} << p;
      if ((succ[p] & e) != 0) d |= std::uint32_t{1} << p;
    }
    if (b != ops.box[e] || d != ops.diamond[e]) {
      note(r.regenerates, "operators regenerated from the reconstructed relation differ at " + std::to_string(e));
    }
  }
  return r;
}

NodeMapReport classify_node_map(const NodeMap& phi) {
  const TransitionStructure& src = *phi.source;
  const TransitionStructure& tgt = *phi.target;
  if (phi.map.size() != src.size()) fail(Errc::NodeUnknown, "node map is not total on the source");
  for (NodeId q : phi.map) {
    if (q >= tgt.size()) fail(Errc::NodeUnknown, "node map leaves the target structure");
  }

  NodeMapReport r;
  for (NodeId p = 0; p < src.size() && r.is_transition_morphism; ++p) {
    for_each_node(src.successors(p), [&](NodeId q) {
      if (r.is_transition_morphism && !tgt.has_edge(phi(p), phi(q))) {
        r.is_transition_morphism = false;
        r.morphism_witness = src.name(p) + " -> " + src.name(q) + " but not " + tgt.name(phi(p)) + " -> " +
                             tgt.name(phi(q));
      }
    });
  }

  // Hit targets of each node's successors, compared against the target's
  // successors of its image.
  for (NodeId p = 0; p < src.size() && r.is_simulation; ++p) {
    NodeSet reached(tgt.size());
    for_each_node(src.successors(p), [&](NodeId q) { reached.set(phi(q)); });
    NodeSet missing = tgt.successors(phi(p)) - reached;
    if (missing.any()) {
      r.is_simulation = false;
      r.simulation_witness = tgt.name(phi(p)) + " -> " + tgt.name(static_cast<NodeId>(missing.find_first())) +
                             " has no matching transition out of " + src.name(p);
    }
  }
  if (!r.is_transition_morphism) {
    r.is_simulation = false;
    if (!r.simulation_witness) r.simulation_witness = "not a transition morphism";
  }
  return r;
}

}  // namespace pg
