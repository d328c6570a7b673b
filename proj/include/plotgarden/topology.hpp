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

#ifndef PLOTGARDEN_TOPOLOGY_HPP_
#define PLOTGARDEN_TOPOLOGY_HPP_

#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <unordered_map>
#include <utility>
#include <vector>

#include "plotgarden/lattice.hpp"
#include "plotgarden/sets.hpp"

namespace pg {

/// A finite topological space with its opens listed explicitly.  Opens are
/// kept sorted by bit pattern, so the empty set is open 0 and the whole
/// space is the last one.  The topology frame is built once on validation;
/// frame element i is opens()[i].
class FiniteSpace {
 public:
  [[nodiscard]] std::size_t size() const { return names_.size(); }
  [[nodiscard]] const std::vector<std::string>& names() const { return names_; }
  [[nodiscard]] const std::string& name(PointId p) const { return names_[p]; }
  [[nodiscard]] std::optional<PointId> find(std::string_view name) const;
  /// Throws PointUnknown.
  [[nodiscard]] PointId index(std::string_view name) const;

  [[nodiscard]] PointSet all() const { return PointSet::full(size()); }
  [[nodiscard]] const std::vector<PointSet>& opens() const { return opens_; }
  [[nodiscard]] PointSet open(ElemId i) const { return opens_[i]; }
  [[nodiscard]] bool is_open(PointSet s) const { return open_id(s).has_value(); }
  [[nodiscard]] std::optional<ElemId> open_id(PointSet s) const;
  /// Throws NotATopology if s is not open.
  [[nodiscard]] ElemId require_open(PointSet s) const;

  [[nodiscard]] const FramePtr& frame() const { return frame_; }

  /// Closure of a single point {q}.
  [[nodiscard]] PointSet point_closure(PointId q) const { return point_closure_[q]; }
  /// Smallest open containing p.
  [[nodiscard]] PointSet neighbourhood(PointId p) const { return neighbourhood_[p]; }

  /// "{P,Q}" rendering used for frame element names and reports.
  [[nodiscard]] std::string format(PointSet s) const;

 private:
  friend std::shared_ptr<const FiniteSpace> validate_space(std::vector<std::string> points,
                                                           std::vector<PointSet> opens);

  std::vector<std::string> names_;
  std::unordered_map<std::string, PointId> index_;
  std::vector<PointSet> opens_;
  std::vector<PointSet> point_closure_;
  std::vector<PointSet> neighbourhood_;
  FramePtr frame_;
};

using SpacePtr = std::shared_ptr<const FiniteSpace>;

/// Errors: NotATopology (names the missing union, intersection or extreme),
/// PointUnknown, DuplicateName, SizeLimit (more than 64 points).
SpacePtr validate_space(std::vector<std::string> points, std::vector<PointSet> opens);
SpacePtr validate_space(std::vector<std::string> points, const std::vector<std::vector<std::string>>& opens);

/// The topology generated by a subbasis (closed under finite unions and
/// intersections, extremes added).
SpacePtr generated_space(std::vector<std::string> points, const std::vector<PointSet>& subbasis);
SpacePtr discrete_space(std::vector<std::string> points);
SpacePtr indiscrete_space(std::vector<std::string> points);

PointSet interior(const FiniteSpace& s, PointSet e);
PointSet closure(const FiniteSpace& s, PointSet e);
/// p lies in the closure of {q}.
inline bool specializes(const FiniteSpace& s, PointId p, PointId q) { return s.point_closure(q).contains(p); }
PointSet saturation(const FiniteSpace& s, PointSet e);
PointSet lens(const FiniteSpace& s, PointSet e);

struct SpatialClosures {
  PointSet closure;
  PointSet interior;
  PointSet saturation;
  PointSet lens;
  std::vector<std::pair<PointId, PointId>> specialization_order;
};

/// Errors: PointUnknown if e mentions points outside the space.
SpatialClosures spatial_closures(const FiniteSpace& s, PointSet e);

bool is_t0(const FiniteSpace& s);

/// A continuous map between finite spaces, point by point.
struct ContinuousMap {
  SpacePtr source;
  SpacePtr target;
  std::vector<PointId> map;

  PointId operator()(PointId p) const { return map[p]; }
  [[nodiscard]] PointSet preimage(PointSet v) const;
  [[nodiscard]] PointSet image(PointSet e) const;
};

/// Errors: PointUnknown (map not total), NotContinuous (names a target open
/// whose preimage is not open).
ContinuousMap validate_continuous(SpacePtr source, SpacePtr target, std::vector<PointId> map);
/// Continuity without throwing; the failing target open, if any.
std::optional<PointSet> continuity_witness(const FiniteSpace& source, const FiniteSpace& target,
                                           const std::vector<PointId>& map);

ContinuousMap identity_map(const SpacePtr& s);
/// g after f.
ContinuousMap compose(const ContinuousMap& g, const ContinuousMap& f);

/// V -> preimage of V, as a frame morphism O(target) -> O(source).
FrameMorphism open_frame(const ContinuousMap& phi);

}  // namespace pg

#endif  // PLOTGARDEN_TOPOLOGY_HPP_
