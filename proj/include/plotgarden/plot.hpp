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

#ifndef PLOTGARDEN_PLOT_HPP_
#define PLOTGARDEN_PLOT_HPP_

#include <map>
#include <memory>
#include <string>
#include <vector>

#include "plotgarden/garden.hpp"
#include "plotgarden/law.hpp"
#include "plotgarden/topology.hpp"
#include "plotgarden/transition.hpp"

namespace pg {

/// A transition structure valued in a finite space.  Plots built by
/// validate_plot always have a surjective valuation; harvests may not, and
/// carry surjective = false.
struct Plot {
  StructurePtr structure;
  SpacePtr space;
  std::vector<PointId> valuation;
  bool surjective = true;

  [[nodiscard]] std::size_t size() const { return valuation.size(); }
  [[nodiscard]] NodeSet preimage(PointSet v) const;
  [[nodiscard]] PointSet image(const NodeSet& nodes) const;
  /// Points with no node over them.
  [[nodiscard]] PointSet unrooted() const;
};

using PlotPtr = std::shared_ptr<const Plot>;

/// Errors: ValuationNotTotal, ValuationNotSurjective (names a missing point).
PlotPtr validate_plot(StructurePtr structure, SpacePtr space, std::vector<PointId> valuation);

/// Same checks except surjectivity, which is recorded instead.
PlotPtr assemble_plot(StructurePtr structure, SpacePtr space, std::vector<PointId> valuation);

/// Node map Phi between the structures and continuous map phi between the
/// spaces, pointing the same way.
struct PlotMap {
  PlotPtr source;
  PlotPtr target;
  std::vector<NodeId> node_map;
  std::vector<PointId> point_map;

  [[nodiscard]] NodeMap nodes() const { return {source->structure, target->structure, node_map}; }
  [[nodiscard]] ContinuousMap points() const { return {source->space, target->space, point_map}; }
};

struct PlotMapReport {
  bool transition_morphism = true;
  bool continuous = true;
  bool square_commutes = true;
  bool is_plot_map = true;
  /// Every target transition out of an image is matched by a source
  /// successor whose value specializes to it.
  bool up_condition = true;
  /// ... and every open around the target value contains the value of some
  /// source successor.
  bool minus_condition = true;
  /// Direct lens-closure test, computed separately from the two conditions.
  bool is_lentile = true;
  bool is_simulation = true;
  /// is_lentile == (up_condition && minus_condition).
  bool lemma_consistent = true;
  std::map<std::string, std::string> witnesses;
};

/// Errors: SquareViolation naming the first node where phi.sigma and
/// tau.Phi disagree; NodeUnknown / PointUnknown for partial maps.
PlotMapReport classify_plot_map(const PlotMap& m);

PlotMap identity_map(const PlotPtr& p);
/// second after first.
PlotMap compose(const PlotMap& second, const PlotMap& first);

/// Lifted operators on the topology of a plot's space together with the
/// law checks performed on them.
struct Lift {
  Bed bed;
  LawList laws;
};

/// box(U) is the union of opens V with sigma^-1 V inside box(sigma^-1 U);
/// diamond likewise.  Checks the defining biconditionals for every pair of
/// opens, the bed laws, diamond(empty) = empty, and the two lax laws for
/// sigma^-1.  Never throws on law failure.
Lift lift_with_laws(const Plot& p);

/// lift_with_laws, throwing PostconditionFailure on any failed law.  For a
/// plot whose valuation misses points, diamond(empty) can be nonempty; that
/// law is then skipped since it rests on surjectivity.
Bed lift_operators(const Plot& p);

/// The garden of opens with the lifted bed and the identity covering.
GardenPtr functor_G_object(const Plot& p);

/// The garden morphism G(target) -> G(source) given by phi^-1 on frames and
/// phi on points.  Gardens can be passed in to share them between arrows;
/// otherwise they are built.  Errors: NotLentile.
GardenMorphism functor_G_arrow(const PlotMap& m, GardenPtr of_target = nullptr, GardenPtr of_source = nullptr);

}  // namespace pg

#endif  // PLOTGARDEN_PLOT_HPP_
