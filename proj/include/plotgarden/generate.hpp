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

#ifndef PLOTGARDEN_GENERATE_HPP_
#define PLOTGARDEN_GENERATE_HPP_

#include <cstddef>
#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "plotgarden/garden.hpp"
#include "plotgarden/plot.hpp"

namespace pg {

/// Seeded source of draws.  The engine's output sequence is fixed by the
/// standard; the bounded draws are done here rather than through the
/// library distributions, whose algorithms vary between implementations.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}
  /// Uniform in [0, n).  n must be positive.
  std::uint64_t below(std::uint64_t n);
  /// Uniform in [lo, hi].
  std::size_t between(std::size_t lo, std::size_t hi) { return lo + below(hi - lo + 1); }
  bool chance(double p);
  template <class T>
  void shuffle(std::vector<T>& v) {
    for (std::size_t i = v.size(); i > 1; --i) std::swap(v[i - 1], v[below(i)]);
  }
  template <class T>
  const T& pick(const std::vector<T>& v) { return v[below(v.size())]; }

 private:
  std::mt19937_64 engine_;
};

struct Profile {
  std::size_t min_nodes = 1;
  std::size_t max_nodes = 6;
  std::size_t min_points = 1;
  std::size_t max_points = 5;
  double edge_density = 0.35;
  double open_density = 0.5;
};

/// "max_nodes=4,max_points=3,edge_density=0.2".  Errors: ValidationError
/// for unknown keys or bad numbers, ProfileUnsatisfiable as below.
Profile parse_profile(std::string_view text);
std::string format_profile(const Profile& p);
/// Errors: ProfileUnsatisfiable when no surjective valuation fits the
/// bounds (fewer nodes than points) or a range is empty.
void check_profile(const Profile& p);

/// Topology generated by a random subbasis.  Point names are prefix + index.
SpacePtr random_space(Rng& rng, std::size_t points, double open_density, const std::string& prefix = "p");
/// Random relation over `nodes` nodes with a random surjective valuation.
PlotPtr random_plot_over(Rng& rng, const SpacePtr& space, std::size_t nodes, double edge_density,
                         const std::string& prefix = "n");
PlotPtr random_plot(Rng& rng, const Profile& profile);

/// A garden whose covering is the inverse image of a random map psi from a
/// base space S into the space of a random plot T, with S carrying the
/// topology pulled back along psi.  The bed is that of G(T), and
/// (id, psi) : G(T) -> garden is a garden morphism.
struct PulledGarden {
  PlotPtr plot;
  GardenPtr garden;
  GardenMorphism from_plot;
};
PulledGarden pulled_garden(Rng& rng, const Profile& profile);

/// A plot map built to be a transition morphism over a continuous map with a
/// commuting square.  Extra target transitions are added; with
/// keep_lentile they are restricted to ones that keep the map lentile.
PlotMap random_plot_map(Rng& rng, const Profile& profile, bool keep_lentile, bool discrete_target = false);

/// Everything produced from one seed.
enum class FlatTopology { Discrete, Indiscrete };

/// A plot map between flat plots (valuation the identity) whose spaces are
/// both discrete or both indiscrete.  The node map is random; the target
/// relation contains the image of the source relation plus random extras.
PlotMap random_flat_map(Rng& rng, const Profile& profile, FlatTopology topology);

struct InstanceSet {
  std::uint64_t seed = 0;
  std::vector<PlotPtr> plots;
  std::vector<GardenPtr> gardens;
  /// Lentile maps: identity, geometric unit, a constructed map, and the
  /// harvest arrow of a garden morphism.
  std::vector<std::pair<std::string, PlotMap>> lentile_maps;
  /// Plot maps with unrestricted extra transitions, for classification: a
  /// general one, one with a discrete target, and flat discrete and
  /// indiscrete ones.
  std::vector<PlotMap> plot_maps;
  /// Identity, pullback morphisms, algebraic unit, G of a lentile map.
  std::vector<std::pair<std::string, GardenMorphism>> garden_morphisms;
};

InstanceSet generate_instances(std::uint64_t seed, const Profile& profile);

}  // namespace pg

#endif  // PLOTGARDEN_GENERATE_HPP_
