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

#ifndef PLOTGARDEN_HARVEST_HPP_
#define PLOTGARDEN_HARVEST_HPP_

#include <compare>
#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "plotgarden/garden.hpp"
#include "plotgarden/law.hpp"
#include "plotgarden/plot.hpp"

namespace pg {

/// Root point, stalk element and bloom filter.  Ordered root first, so the
/// flowers over one point are contiguous in any sorted list.
struct Flower {
  PointId root = 0;
  ElemId stalk = 0;
  Filter bloom;
  auto operator<=>(const Flower&) const = default;
};

/// The three assignments at one point of a garden:
///   nabla = {x : p in alpha(x)}
///   pbb   = {x : box x in nabla}
///   pdd   = {x : diamond x not in nabla}, a down-set listed in ascending id order.
struct PointFilters {
  Filter nabla;
  Filter pbb;
  std::vector<ElemId> pdd;
};

/// Errors: PointUnknown.
PointFilters point_filters(const Garden& g, PointId p);

/// Gardens bigger than this are rejected before flowers are enumerated.
struct GardenLimits {
  std::size_t max_elements = 32;
  std::size_t max_points = 8;
};

/// Every flower of a garden with the transition rule between them.  The
/// rule (p,a,F) -> (q,b,G) iff a not in nabla(q) and F inside nabla(q)
/// ignores the target's stalk and bloom, so each flower stores the set of
/// roots it can step to.
struct FlowerStructure {
  std::vector<PointFilters> at;
  std::vector<Flower> flowers;          // sorted
  std::vector<PointSet> step_roots;     // per flower
  /// Range [first, last) of flowers over each point.
  std::vector<std::pair<std::size_t, std::size_t>> by_root;

  [[nodiscard]] std::optional<std::size_t> find(const Flower& f) const;
  [[nodiscard]] bool is_flower(const Flower& f) const { return find(f).has_value(); }
  [[nodiscard]] bool has_edge(std::size_t from, std::size_t to) const {
    return step_roots[from].contains(flowers[to].root);
  }
};

/// Errors: SizeLimit.
FlowerStructure flower_structure(const Garden& g, const GardenLimits& limits = {});

/// Node name used for flowers in harvested plots: "(root,stalk,^generator)".
std::string flower_name(const Garden& g, const Flower& f);

/// Both health conditions, for every member, relative to members.  Members
/// that are not flowers make the set unhealthy.  The failing flower and
/// condition go to *witness when given.
bool is_healthy(const Garden& g, const FlowerStructure& fs, const std::vector<Flower>& members,
                std::string* witness = nullptr);

struct Harvest {
  GardenPtr garden;
  FlowerStructure all;
  std::vector<Flower> survivors;  // sorted; node i of plot is survivors[i]
  PlotPtr plot;
  /// Points of the base space with no surviving flower.  Nonempty means the
  /// harvested valuation is not surjective.
  PointSet unrooted;
  /// Some survivor blooms with the improper filter (generated by bottom).
  bool uses_improper_filter = false;

  [[nodiscard]] std::optional<NodeId> find(const Flower& f) const;
};

/// The largest healthy set of flowers, by worklist pruning, as a plot valued
/// by root projection over the garden's space.
Harvest harvest(const GardenPtr& g, const GardenLimits& limits = {});

/// Psi(p,a,F) = (phi(p), f_*(a), f^-1 F) on the harvest of gm.target, landing
/// in the harvest of gm.source, with its postconditions: values are flowers,
/// transitions are preserved, the image is healthy and inside the harvest,
/// and the result is a lentile plot map over phi.
struct HarvestArrow {
  PlotMap map;
  LawList laws;
};

HarvestArrow functor_F_arrow_with_laws(const GardenMorphism& gm, const Harvest& of_target, const Harvest& of_source);
/// Throws PostconditionFailure when a postcondition fails.
PlotMap functor_F_arrow(const GardenMorphism& gm, const Harvest& of_target, const Harvest& of_source);

}  // namespace pg

#endif  // PLOTGARDEN_HARVEST_HPP_
