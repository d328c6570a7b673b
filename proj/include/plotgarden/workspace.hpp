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

#ifndef PLOTGARDEN_WORKSPACE_HPP_
#define PLOTGARDEN_WORKSPACE_HPP_

#include <filesystem>
#include <map>
#include <string>
#include <string_view>
#include <variant>

#include "plotgarden/garden.hpp"
#include "plotgarden/lattice.hpp"
#include "plotgarden/plot.hpp"
#include "plotgarden/topology.hpp"
#include "plotgarden/transition.hpp"

namespace pg {

inline constexpr int kWorkspaceFormat = 1;

/// Named, validated objects.  Each kind has its own namespace except plot
/// maps and garden morphisms, which share "maps".
struct Workspace {
  std::map<std::string, SpacePtr> spaces;
  std::map<std::string, StructurePtr> structures;
  std::map<std::string, PlotPtr> plots;
  std::map<std::string, FramePtr> frames;
  std::map<std::string, Bed> beds;
  std::map<std::string, GardenPtr> gardens;
  std::map<std::string, PlotMap> plot_maps;
  std::map<std::string, GardenMorphism> garden_morphisms;

  /// Register an object under `name` (suffixed if taken) along with any of
  /// its components not registered yet, which get derived names.  Returns
  /// the name used.
  std::string add(const std::string& name, const SpacePtr& s);
  std::string add(const std::string& name, const StructurePtr& s);
  std::string add(const std::string& name, const FramePtr& f);
  std::string add(const std::string& name, const Bed& b);
  std::string add(const std::string& name, const PlotPtr& p);
  std::string add(const std::string& name, const GardenPtr& g);
  std::string add(const std::string& name, const PlotMap& m);
  std::string add(const std::string& name, const GardenMorphism& m);

  [[nodiscard]] std::size_t object_count() const;
};

/// Errors: SyntaxError (malformed JSON with its line, or a schema mismatch
/// with its path), UnresolvedReference, ValidationError (a validator
/// rejected an object; the message names it and carries the original code).
Workspace parse_workspace(std::string_view text);

/// Canonical JSON: sorted keys; carrier lists (points, nodes, elements) in
/// declaration order since that fixes identifiers; subsets and relations
/// sorted.
std::string serialize_workspace(const Workspace& ws);

Workspace load_workspace(const std::filesystem::path& path);
void save_workspace(const Workspace& ws, const std::filesystem::path& path);

/// "file.ws#name".
struct ObjectRef {
  std::string file;
  std::string name;
};
/// Errors: ValidationError when there is no '#name' part.
ObjectRef parse_ref(std::string_view text);

using Object = std::variant<PlotPtr, GardenPtr, PlotMap, GardenMorphism, SpacePtr, StructurePtr, FramePtr, Bed>;

/// Looks the name up among maps, plots, gardens, beds, frames, structures
/// and spaces, in that order.  Errors: UnresolvedReference.
Object resolve(const Workspace& ws, const std::string& name);

}  // namespace pg

#endif  // PLOTGARDEN_WORKSPACE_HPP_
