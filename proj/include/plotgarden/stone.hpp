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

#ifndef PLOTGARDEN_STONE_HPP_
#define PLOTGARDEN_STONE_HPP_

#include <vector>

#include "plotgarden/lattice.hpp"
#include "plotgarden/plot.hpp"

namespace pg {

/// The flat plot of prime filters of a finite Boolean algebra.  Prime
/// filters are the principal filters of atoms; P -> Q iff every b with
/// box(b) in P lies in Q; the space is generated by the sets
/// {P : b in P}, which for a finite algebra is discrete.
/// Errors: NotBoolean (names an element without complement),
/// ElementUnknown (box table not total).
PlotPtr spec_boolean(const FramePtr& algebra, const std::vector<ElemId>& box);

}  // namespace pg

#endif  // PLOTGARDEN_STONE_HPP_
