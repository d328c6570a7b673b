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

#ifndef PLOTGARDEN_SUITES_HPP_
#define PLOTGARDEN_SUITES_HPP_

#include <string>

#include "plotgarden/garden.hpp"
#include "plotgarden/harvest.hpp"
#include "plotgarden/law.hpp"
#include "plotgarden/plot.hpp"

// Law suites shared by `verify`, `fuzz` and the acceptance runner.  Every
// law id is prefixed with the kind of object it was checked on so that ids
// are stable across instances.

namespace pg {

/// Oracles run on gardens within these bounds only.
inline constexpr std::size_t kOracleMaxPoints = 5;
inline constexpr std::size_t kOracleMaxElements = 16;

bool oracle_sized(const Garden& g);

/// Lift laws, idempotency, and the lift/lens oracles (plus garden oracles on
/// G of the plot when small enough).   Prefix "plot/".
LawList plot_suite(const PlotPtr& p);

/// Idempotency (which includes the algebraic unit) and oracles.  Prefix
/// "garden/".
LawList garden_suite(const GardenPtr& g);

/// The map must be lentile: classification, G-arrow morphism laws and
/// geometric naturality.  Prefix "lentile_map/".
LawList lentile_map_suite(const PlotMap& m);

/// Classification consistency for an arbitrary plot map; on a discrete
/// target (up) and (minus) must coincide.  Prefix "plot_map/".
LawList plot_map_suite(const PlotMap& m);

/// F-arrow postconditions and algebraic naturality.  Prefix
/// "garden_morphism/".
LawList garden_morphism_suite(const GardenMorphism& gm);

/// G(second after first) = G(first) after G(second), for composable lentile
/// maps.
LawCheck g_contravariance(const PlotMap& first, const PlotMap& second);

/// F(second after first) = F(first) after F(second), for composable garden
/// morphisms.
LawCheck f_contravariance(const GardenMorphism& first, const GardenMorphism& second);

}  // namespace pg

#endif  // PLOTGARDEN_SUITES_HPP_
