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

#ifndef PLOTGARDEN_ORACLE_HPP_
#define PLOTGARDEN_ORACLE_HPP_

#include <cstdint>
#include <string>
#include <vector>

#include "plotgarden/garden.hpp"
#include "plotgarden/harvest.hpp"
#include "plotgarden/law.hpp"
#include "plotgarden/plot.hpp"

/// Brute-force recomputations straight from the definitions.  They share
/// no code with the optimized paths beyond the validated input objects, and
/// are only meant for small instances.
namespace pg::oracle {

/// Frames up to this size have their filters found by subset enumeration.
inline constexpr std::size_t kMaxSubsetFrame = 16;

/// Every subset that is up-closed, meet-closed and contains top, as member
/// bitmasks in ascending order.  Errors: SizeLimit.
std::vector<std::uint64_t> filters_by_subsets(const FiniteFrame& frame);

/// Points q with some e in E such that every open around e contains q,
/// intersected with points all of whose opens meet E.
PointSet lens_by_definition(const FiniteSpace& space, PointSet e);

/// Every (p, a, c) triple tested against the flower conditions through
/// explicit filter membership.  Sorted.
std::vector<Flower> flowers_by_scan(const Garden& g);

/// Both health conditions for every member, searching explicit transitions
/// to other members.
bool healthy_by_definition(const Garden& g, const std::vector<Flower>& members, std::string* witness = nullptr);

/// Largest healthy set by repeated full rescans, deleting every unhealthy
/// flower each round.  Sorted.
std::vector<Flower> harvest_by_rescan(const Garden& g);
/// Largest healthy subset of `start` (full rescans).
std::vector<Flower> healthy_core(const Garden& g, std::vector<Flower> start);

/// Largest healthy set, deleting a seeded random nonempty batch of the
/// unhealthy flowers each round.
std::vector<Flower> harvest_in_random_order(const Garden& g, std::uint64_t seed);

/// Lifted operators by taking the largest qualifying open, over explicit
/// node lists.
Bed lift_by_definition(const Plot& p);

/// Laws comparing each optimized routine with its oracle.  Ids:
/// oracle.filters, oracle.lens, oracle.flowers, oracle.harvest,
/// oracle.harvest_order, oracle.lift.
LawCheck compare_filters(const FiniteFrame& frame);
LawCheck compare_lens(const FiniteSpace& space);
LawCheck compare_flowers(const Garden& g);
LawCheck compare_harvest(const GardenPtr& g);
LawCheck compare_harvest_order(const GardenPtr& g, std::uint64_t seed);
LawCheck compare_lift(const Plot& p);

/// Every comparison that applies to a garden (its frame, space, flowers and
/// harvest) or to a plot (its space and lift, plus the garden comparisons
/// on G of it).
LawList compare_all(const GardenPtr& g);
LawList compare_all(const PlotPtr& p);

}  // namespace pg::oracle

#endif  // PLOTGARDEN_ORACLE_HPP_
