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

#ifndef PLOTGARDEN_TRANSITION_HPP_
#define PLOTGARDEN_TRANSITION_HPP_

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <unordered_map>
#include <utility>
#include <vector>

#include "plotgarden/sets.hpp"

namespace pg {

/// A finite set of nodes with an arbitrary binary transition relation,
/// stored as one successor row per node.
class TransitionStructure {
 public:
  [[nodiscard]] std::size_t size() const { return names_.size(); }
  [[nodiscard]] const std::vector<std::string>& names() const { return names_; }
  [[nodiscard]] const std::string& name(NodeId p) const { return names_[p]; }
  [[nodiscard]] std::optional<NodeId> find(std::string_view name) const;
  /// Throws NodeUnknown.
  [[nodiscard]] NodeId index(std::string_view name) const;

  [[nodiscard]] const NodeSet& successors(NodeId p) const { return succ_[p]; }
  [[nodiscard]] bool has_edge(NodeId p, NodeId q) const { return succ_[p].test(q); }
  [[nodiscard]] std::vector<std::pair<NodeId, NodeId>> edges() const;
  [[nodiscard]] std::size_t edge_count() const;

  [[nodiscard]] NodeSet empty_set() const { return NodeSet(size()); }
  [[nodiscard]] NodeSet full_set() const { return ~NodeSet(size()); }

  /// Nodes all of whose successors lie in e.
  [[nodiscard]] NodeSet box(const NodeSet& e) const;
  /// Nodes with some successor in e.
  [[nodiscard]] NodeSet diamond(const NodeSet& e) const;

 private:
  friend std::shared_ptr<const TransitionStructure> validate_structure(
      std::vector<std::string> nodes, const std::vector<std::pair<NodeId, NodeId>>& edges);
  friend std::shared_ptr<const TransitionStructure> structure_from_rows(std::vector<std::string> nodes,
                                                                        std::vector<NodeSet> rows);

  std::vector<std::string> names_;
  std::unordered_map<std::string, NodeId> index_;
  std::vector<NodeSet> succ_;
};

using StructurePtr = std::shared_ptr<const TransitionStructure>;

/// Errors: DuplicateName, NodeUnknown.
StructurePtr validate_structure(std::vector<std::string> nodes, const std::vector<std::pair<NodeId, NodeId>>& edges);
StructurePtr validate_structure(std::vector<std::string> nodes,
                                const std::vector<std::pair<std::string, std::string>>& edges);
/// Takes ownership of prebuilt successor rows (each row sized to the node
/// count).
StructurePtr structure_from_rows(std::vector<std::string> nodes, std::vector<NodeSet> rows);

/// Operators over the full powerset, tabulated by subset bit pattern.
/// Only materialized for small structures.
inline constexpr std::size_t kMaxTabulatedNodes = 10;

struct OperatorTables {
  std::size_t nodes = 0;
  std::vector<std::uint32_t> box;
  std::vector<std::uint32_t> diamond;
};

/// Errors: SizeLimit beyond kMaxTabulatedNodes.  The duality
/// diamond(E) = box(E')' is asserted while tabulating.
OperatorTables powerset_operators(const TransitionStructure& s);

struct CharacterizationReport {
  bool box_top = true;
  bool box_meets = true;
  bool diamond_bottom = true;
  bool diamond_joins = true;
  bool duality = true;
  /// The operators preserve all intersections and unions respectively.
  bool lemma_holds = true;
  /// P -> Q iff P in diamond({Q}).
  std::vector<std::pair<NodeId, NodeId>> reconstructed;
  /// The reconstructed relation is the structure's own relation.
  bool relation_matches = true;
  /// Operators regenerated from the reconstructed relation equal the given ones.
  bool regenerates = true;
  std::vector<std::string> witnesses;
};

CharacterizationReport characterize_operators(const TransitionStructure& s, const OperatorTables& ops);

struct NodeMap {
  StructurePtr source;
  StructurePtr target;
  std::vector<NodeId> map;

  NodeId operator()(NodeId p) const { return map[p]; }
};

struct NodeMapReport {
  bool is_transition_morphism = true;
  bool is_simulation = true;
  std::optional<std::string> morphism_witness;
  std::optional<std::string> simulation_witness;
};

/// Errors: NodeUnknown when the map is not total into the target.
NodeMapReport classify_node_map(const NodeMap& phi);

}  // namespace pg

#endif  // PLOTGARDEN_TRANSITION_HPP_
