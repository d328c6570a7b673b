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

#include "plotgarden/topology.hpp"

#include <algorithm>
#include <set>

#include "plotgarden/error.hpp"

namespace pg {

std::optional<PointId> FiniteSpace::find(std::string_view name) const {
  auto it = index_.find(std::string(name));
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

PointId FiniteSpace::index(std::string_view name) const {
  auto p = find(name);
  if (!p) fail(Errc::PointUnknown, "no point named '" + std::string(name) + "'");
  return *p;
}

std::optional<ElemId> FiniteSpace::open_id(PointSet s) const {
  auto it = std::lower_bound(opens_.begin(), opens_.end(), s);
  if (it == opens_.end() || *it != s) return std::nullopt;
  return static_cast<ElemId>(it - opens_.begin());
}

ElemId FiniteSpace::require_open(PointSet s) const {
  auto id = open_id(s);
  if (!id) fail(Errc::NotATopology, format(s) + " is not open");
  return *id;
}

std::string FiniteSpace::format(PointSet s) const {
  std::string out = "{";
  s.for_each([&](PointId p) {
    if (out.size() > 1) out += ',';
    out += p < size() ? names_[p] : "#" + std::to_string(p);
  });
  return out + "}";
}

SpacePtr validate_space(std::vector<std::string> points, std::vector<PointSet> opens) {
  if (points.size() > kMaxPoints) {
    fail(Errc::SizeLimit, "spaces are limited to " + std::to_string(kMaxPoints) + " points");
  }
  auto space = std::make_shared<FiniteSpace>();
  space->names_ = std::move(points);
  for (PointId i = 0; i < space->names_.size(); ++i) {
    if (!space->index_.emplace(space->names_[i], i).second) {
      fail(Errc::DuplicateName, "point '" + space->names_[i] + "' listed twice");
    }
  }
  const PointSet all = space->all();
  for (PointSet o : opens) {
    if (!o.subset_of(all)) fail(Errc::PointUnknown, "open mentions a point outside the space");
  }
  std::sort(opens.begin(), opens.end());
  opens.erase(std::unique(opens.begin(), opens.end()), opens.end());
  space->opens_ = std::move(opens);
  const FiniteSpace& s = *space;

  if (!s.is_open(PointSet{})) fail(Errc::NotATopology, "the empty set is not open");
  if (!s.is_open(all)) fail(Errc::NotATopology, "the whole space is not open");
  for (std::size_t i = 0; i < s.opens_.size(); ++i) {
    for (std::size_t j = i + 1; j < s.opens_.size(); ++j) {
      PointSet u = s.opens_[i];
      PointSet v = s.opens_[j];
      if (!s.is_open(u | v)) {
        fail(Errc::NotATopology, "missing union " + s.format(u) + " | " + s.format(v));
      }
      if (!s.is_open(u & v)) {
        fail(Errc::NotATopology, "missing intersection " + s.format(u) + " & " + s.format(v));
      }
    }
  }

  space->point_closure_.resize(s.size());
  space->neighbourhood_.resize(s.size());
  for (PointId p = 0; p < s.size(); ++p) {
    space->point_closure_[p] = closure(s, PointSet::single(p));
    PointSet nb = all;
    for (PointSet o : s.opens_) {
      if (o.contains(p)) nb &= o;
    }
    space->neighbourhood_[p] = nb;
  }

  std::vector<std::string> names;
  std::vector<std::uint64_t> bits;
  for (PointSet o : s.opens_) {
    names.push_back(s.format(o));
    bits.push_back(o.bits());
  }
  space->frame_ = set_family_frame(std::move(names), bits);
  return space;
}

SpacePtr validate_space(std::vector<std::string> points, const std::vector<std::vector<std::string>>& opens) {
  std::unordered_map<std::string, PointId> ids;
  for (PointId i = 0; i < points.size(); ++i) ids.emplace(points[i], i);
  std::vector<PointSet> sets;
  for (const auto& members : opens) {
    PointSet o;
    for (const auto& m : members) {
      auto it = ids.find(m);
      if (it == ids.end()) fail(Errc::PointUnknown, "open mentions unknown point '" + m + "'");
      o.insert(it->second);
    }
    sets.push_back(o);
  }
  return validate_space(std::move(points), std::move(sets));
}

SpacePtr generated_space(std::vector<std::string> points, const std::vector<PointSet>& subbasis) {
  const PointSet all = PointSet::full(points.size());
  std::set<PointSet> family{PointSet{}, all};
  family.insert(subbasis.begin(), subbasis.end());
  for (bool grew = true; grew;) {
    grew = false;
    std::vector<PointSet> cur(family.begin(), family.end());
    for (std::size_t i = 0; i < cur.size(); ++i) {
      for (std::size_t j = i + 1; j < cur.size(); ++j) {
        grew |= family.insert(cur[i] | cur[j]).second;
        grew |= family.insert(cur[i] & cur[j]).second;
      }
    }
  }
  return validate_space(std::move(points), std::vector<PointSet>(family.begin(), family.end()));
}

SpacePtr discrete_space(std::vector<std::string> points) {
  std::vector<PointSet> singles;
  for (PointId p = 0; p < points.size(); ++p) singles.push_back(PointSet::single(p));
  return generated_space(std::move(points), singles);
}

SpacePtr indiscrete_space(std::vector<std::string> points) {
  return generated_space(std::move(points), {});
}

PointSet interior(const FiniteSpace& s, PointSet e) {
  PointSet out;
  for (PointSet o : s.opens()) {
    if (o.subset_of(e)) out |= o;
  }
  return out;
}

PointSet closure(const FiniteSpace& s, PointSet e) {
  return interior(s, e.complement(s.size())).complement(s.size());
}

PointSet saturation(const FiniteSpace& s, PointSet e) {
  PointSet out;
  for (PointId q = 0; q < s.size(); ++q) {
    if (s.point_closure(q).intersects(e)) out.insert(q);
  }
  return out;
}

PointSet lens(const FiniteSpace& s, PointSet e) { return saturation(s, e) & closure(s, e); }

SpatialClosures spatial_closures(const FiniteSpace& s, PointSet e) {
  if (!e.subset_of(s.all())) fail(Errc::PointUnknown, "subset mentions a point outside the space");
  SpatialClosures out;
  out.closure = closure(s, e);
  out.interior = interior(s, e);
  out.saturation = saturation(s, e);
  out.lens = out.saturation & out.closure;
  for (PointId p = 0; p < s.size(); ++p) {
    for (PointId q = 0; q < s.size(); ++q) {
      if (specializes(s, p, q)) out.specialization_order.emplace_back(p, q);
    }
  }
  return out;
}

bool is_t0(const FiniteSpace& s) {
  for (PointId p = 0; p < s.size(); ++p) {
    for (PointId q = p + 1; q < s.size(); ++q) {
      if (s.neighbourhood(p) == s.neighbourhood(q)) return false;
    }
  }
  return true;
}

PointSet ContinuousMap::preimage(PointSet v) const {
  PointSet out;
  for (PointId p = 0; p < map.size(); ++p) {
    if (v.contains(map[p])) out.insert(p);
  }
  return out;
}

PointSet ContinuousMap::image(PointSet e) const {
  PointSet out;
  e.for_each([&](PointId p) { out.insert(map[p]); });
  return out;
}

std::optional<PointSet> continuity_witness(const FiniteSpace& source, const FiniteSpace& target,
                                           const std::vector<PointId>& map) {
  for (PointSet v : target.opens()) {
    PointSet pre;
    for (PointId p = 0; p < map.size(); ++p) {
      if (v.contains(map[p])) pre.insert(p);
    }
    if (!source.is_open(pre)) return v;
  }
  return std::nullopt;
}

ContinuousMap validate_continuous(SpacePtr source, SpacePtr target, std::vector<PointId> map) {
  if (map.size() != source->size()) fail(Errc::PointUnknown, "point map is not total on the source");
  for (PointId p : map) {
    if (p >= target->size()) fail(Errc::PointUnknown, "point map leaves the target space");
  }
  if (auto bad = continuity_witness(*source, *target, map)) {
    fail(Errc::NotContinuous, "preimage of open " + target->format(*bad) + " is not open");
  }
  return ContinuousMap{std::move(source), std::move(target), std::move(map)};
}

ContinuousMap identity_map(const SpacePtr& s) {
  ContinuousMap id{s, s, std::vector<PointId>(s->size())};
  for (PointId p = 0; p < s->size(); ++p) id.map[p] = p;
  return id;
}

ContinuousMap compose(const ContinuousMap& g, const ContinuousMap& f) {
  ContinuousMap out{f.source, g.target, std::vector<PointId>(f.map.size())};
  for (PointId p = 0; p < f.map.size(); ++p) out.map[p] = g(f(p));
  return out;
}

FrameMorphism open_frame(const ContinuousMap& phi) {
  if (auto bad = continuity_witness(*phi.source, *phi.target, phi.map)) {
    fail(Errc::NotContinuous, "preimage of open " + phi.target->format(*bad) + " is not open");
  }
  FrameMorphism f{phi.target->frame(), phi.source->frame(), {}};
  f.map.reserve(phi.target->opens().size());
  for (PointSet v : phi.target->opens()) f.map.push_back(phi.source->require_open(phi.preimage(v)));
  return f;
}

}  // namespace pg
