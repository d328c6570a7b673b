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

#ifndef PLOTGARDEN_ADJUNCTION_HPP_
#define PLOTGARDEN_ADJUNCTION_HPP_

#include <string>
#include <vector>

#include "plotgarden/garden.hpp"
#include "plotgarden/harvest.hpp"
#include "plotgarden/law.hpp"
#include "plotgarden/plot.hpp"

namespace pg {

enum class UnitKind { Algebraic, Geometric };

struct UnitReport {
  UnitKind kind = UnitKind::Algebraic;
  LawList laws;
  [[nodiscard]] bool ok() const { return all_pass(laws); }
};

/// (identity on points, covering) : A -> G(F A).  Keeps the harvest and the
/// furnished topology it was checked against.
struct AlgebraicUnit {
  Harvest harvest;
  GardenPtr furnished;
  GardenMorphism morphism;
  UnitReport report;
};

AlgebraicUnit algebraic_unit_with_laws(const GardenPtr& g);
/// Throws PostconditionFailure if the unit is not a garden morphism.
GardenMorphism algebraic_unit(const GardenPtr& g);

/// Stalk of a node: the complement of the closure of its successors' values,
/// as an open of the plot's space.
ElemId unit_stalk(const Plot& p, NodeId n);
/// Bloom of a node: the opens whose preimage holds every successor; its
/// generator is the smallest open around the successors' values.
Filter unit_bloom(const Plot& p, NodeId n);
Flower unit_flower(const Plot& p, NodeId n);

/// P -> (sigma P, stalk P, bloom P) into the harvest of G(p), with the point
/// map the identity.  `of_G` must be the harvest of functor_G_object(p).
struct GeometricUnit {
  std::vector<Flower> flowers;
  PlotMap map;
  UnitReport report;
};

GeometricUnit geometric_unit_with_laws(const PlotPtr& p, const Harvest& of_G);
/// Builds G(p) and its harvest.  Throws PostconditionFailure on a failed law.
PlotMap geometric_unit(const PlotPtr& p);

/// The unit square for a garden morphism B -> A, composed both ways round.
LawList algebraic_naturality(const GardenMorphism& gm);

/// The three node-by-node identities for a lentile plot map S -> T
///   root:   tau . Phi = phi . sigma
///   stalk:  stalk . Phi = phi_* . stalk
///   bloom:  bloom . Phi = (inverse image of filters under phi^-1) . bloom
/// and the full square through the harvests of G S and G T.
LawList geometric_naturality(const PlotMap& m);

/// Garden: every harvested stalk and bloom is fixed by the closure
/// operators induced by the covering; the geometric unit on the harvest is
/// (p,a,F) -> (p, alpha(a), alpha[F]); with F of the algebraic unit it
/// composes to the identity both ways.
LawList verify_idempotency(const GardenPtr& g);

/// Plot: G S and G(F(G S)) carry identical operator tables on the shared
/// topology; the two inequalities between them are also reported
/// separately, along with the transposed-unit composites.
LawList verify_idempotency(const PlotPtr& p);

}  // namespace pg

#endif  // PLOTGARDEN_ADJUNCTION_HPP_
