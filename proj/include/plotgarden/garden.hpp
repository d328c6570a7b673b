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

#ifndef PLOTGARDEN_GARDEN_HPP_
#define PLOTGARDEN_GARDEN_HPP_

#include <cstddef>
#include <memory>
#include <string_view>
#include <vector>

#include "plotgarden/lattice.hpp"
#include "plotgarden/law.hpp"
#include "plotgarden/topology.hpp"

namespace pg {

/// A frame furnished with a box operator and a companion diamond operator,
/// both tabulated over the frame's elements.
struct Bed {
  FramePtr frame;
  std::vector<ElemId> box;
  std::vector<ElemId> diamond;
};

/// box(top) = top, box preserves meets, diamond is monotone, and the mixed
/// law box(x) & diamond(y) <= diamond(x & y).  Law ids are prefixed.
LawList bed_laws(const Bed& bed, std::string_view prefix = "bed");

/// Errors: BedAxiomViolation naming the law and a witness.
void validate_bed(const Bed& bed);

/// A bed with a surjective frame morphism onto the topology of a base
/// space.  covering[x] indexes space->opens().
struct Garden {
  Bed bed;
  SpacePtr space;
  std::vector<ElemId> covering;

  [[nodiscard]] const FiniteFrame& frame() const { return *bed.frame; }
  [[nodiscard]] FrameMorphism covering_morphism() const { return {bed.frame, space->frame(), covering}; }
  [[nodiscard]] PointSet cover(ElemId x) const { return space->open(covering[x]); }
};

using GardenPtr = std::shared_ptr<const Garden>;

/// Errors: BedAxiomViolation, CoveringNotFrameMorphism, CoveringNotSurjective,
/// TargetElementUnknown.
GardenPtr validate_garden(Bed bed, SpacePtr space, std::vector<ElemId> covering);

/// A morphism from garden `source` (B, beta, T) to garden `target`
/// (A, alpha, S): a bed morphism f : B -> A together with a continuous map
/// phi : S -> T running the other way, such that phi^-1 . beta = alpha . f.
struct GardenMorphism {
  GardenPtr source;
  GardenPtr target;
  std::vector<ElemId> frame_map;
  std::vector<PointId> point_map;

  [[nodiscard]] FrameMorphism frame_morphism() const {
    return {source->bed.frame, target->bed.frame, frame_map};
  }
  [[nodiscard]] ContinuousMap point_morphism() const { return {target->space, source->space, point_map}; }
};

struct GardenMorphismReport {
  LawList laws;
  bool ok = true;
  /// Elements where the lax box / diamond inequalities are strict.
  std::size_t strict_box = 0;
  std::size_t strict_diamond = 0;
};

/// Frame morphism, continuity, lax box and diamond laws, and the strict
/// covering square.  The bed laws are lax, the square is strict.
GardenMorphismReport check_garden_morphism(const GardenMorphism& m, std::string_view prefix = "garden_morphism");

GardenMorphism identity_morphism(const GardenPtr& g);
/// second after first; first : C -> B, second : B -> A.
GardenMorphism compose(const GardenMorphism& second, const GardenMorphism& first);

}  // namespace pg

#endif  // PLOTGARDEN_GARDEN_HPP_
