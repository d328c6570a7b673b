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

#include "plotgarden/lattice.hpp"

#include <algorithm>
#include <numeric>

#include "plotgarden/error.hpp"

namespace pg {

std::optional<ElemId> FiniteFrame::find(std::string_view name) const {
  auto it = index_.find(std::string(name));
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

ElemId FiniteFrame::index(std::string_view name) const {
  auto id = find(name);
  if (!id) fail(Errc::ElementUnknown, "no element named '" + std::string(name) + "'");
  return *id;
}

ElemId FiniteFrame::join_all(std::span<const ElemId> xs) const {
  ElemId acc = bottom_;
  for (ElemId x : xs) acc = join(acc, x);
  return acc;
}

ElemId FiniteFrame::meet_all(std::span<const ElemId> xs) const {
  ElemId acc = top_;
  for (ElemId x : xs) acc = meet(acc, x);
  return acc;
}

std::optional<ElemId> FiniteFrame::complement(ElemId x) const {
  for (ElemId y = 0; y < size(); ++y) {
    if (meet(x, y) == bottom_ && join(x, y) == top_) return y;
  }
  return std::nullopt;
}

std::vector<ElemId> FiniteFrame::atoms() const {
  std::vector<ElemId> out;
  for (ElemId a = 0; a < size(); ++a) {
    if (a == bottom_) continue;
    bool covers = true;
    for (ElemId c = 0; c < size() && covers; ++c) {
      if (c != a && c != bottom_ && leq(c, a)) covers = false;
    }
    if (covers) out.push_back(a);
  }
  return out;
}

FramePtr validate_frame(std::vector<std::string> elements,
                        const std::vector<std::pair<ElemId, ElemId>>& leq) {
  const std::size_t n = elements.size();
  if (n == 0) fail(Errc::NotALattice, "empty element list has no top or bottom");

  auto frame = std::make_shared<FiniteFrame>();
  frame->names_ = std::move(elements);
  for (ElemId i = 0; i < n; ++i) {
    if (!frame->index_.emplace(frame->names_[i], i).second) {
      fail(Errc::DuplicateName, "element '" + frame->names_[i] + "' listed twice");
    }
  }
  const auto& nm = frame->names_;

  frame->leq_.assign(n * n, 0);
  for (auto [a, b] : leq) {
    if (a >= n || b >= n) fail(Errc::ElementUnknown, "order pair refers to an element out of range");
    frame->leq_[a * n + b] = 1;
  }
  auto le = [&](ElemId a, ElemId b) { return frame->leq_[a * n + b] != 0; };

  for (ElemId a = 0; a < n; ++a) {
    if (!le(a, a)) fail(Errc::NotAPoset, "not reflexive at " + nm[a]);
  }
  for (ElemId a = 0; a < n; ++a) {
    for (ElemId b = a + 1; b < n; ++b) {
      if (le(a, b) && le(b, a)) fail(Errc::NotAPoset, "not antisymmetric: " + nm[a] + ", " + nm[b]);
    }
  }
  for (ElemId a = 0; a < n; ++a) {
    for (ElemId b = 0; b < n; ++b) {
      if (!le(a, b)) continue;
      for (ElemId c = 0; c < n; ++c) {
        if (le(b, c) && !le(a, c)) {
          fail(Errc::NotAPoset, "not transitive: " + nm[a] + " <= " + nm[b] + " <= " + nm[c]);
        }
      }
    }
  }

  frame->meet_.assign(n * n, 0);
  frame->join_.assign(n * n, 0);
  std::vector<ElemId> bounds;
  for (ElemId a = 0; a < n; ++a) {
    for (ElemId b = a; b < n; ++b) {
      bounds.clear();
      for (ElemId c = 0; c < n; ++c) {
        if (le(c, a) && le(c, b)) bounds.push_back(c);
      }
      auto glb = std::find_if(bounds.begin(), bounds.end(), [&](ElemId m) {
        return std::all_of(bounds.begin(), bounds.end(), [&](ElemId l) { return le(l, m); });
      });
      if (glb == bounds.end()) fail(Errc::NotALattice, "no meet for " + nm[a] + ", " + nm[b]);
      frame->meet_[a * n + b] = frame->meet_[b * n + a] = *glb;

      bounds.clear();
      for (ElemId c = 0; c < n; ++c) {
        if (le(a, c) && le(b, c)) bounds.push_back(c);
      }
      auto lub = std::find_if(bounds.begin(), bounds.end(), [&](ElemId m) {
        return std::all_of(bounds.begin(), bounds.end(), [&](ElemId u) { return le(m, u); });
      });
      if (lub == bounds.end()) fail(Errc::NotALattice, "no join for " + nm[a] + ", " + nm[b]);
      frame->join_[a * n + b] = frame->join_[b * n + a] = *lub;
    }
  }

  ElemId bot = 0;
  ElemId top = 0;
  for (ElemId a = 1; a < n; ++a) {
    bot = frame->meet_[bot * n + a];
    top = frame->join_[top * n + a];
  }
  frame->bottom_ = bot;
  frame->top_ = top;

  // Binary distributivity together with a & bottom = bottom gives the full
  // frame law on a finite lattice.
  for (ElemId a = 0; a < n; ++a) {
    for (ElemId x = 0; x < n; ++x) {
      for (ElemId y = x + 1; y < n; ++y) {
        ElemId lhs = frame->meet(a, frame->join(x, y));
        ElemId rhs = frame->join(frame->meet(a, x), frame->meet(a, y));
        if (lhs != rhs) {
          fail(Errc::FrameLawViolation,
               "a=" + nm[a] + " x=" + nm[x] + " y=" + nm[y] + ": a&(x|y)=" + nm[lhs] +
                   " but (a&x)|(a&y)=" + nm[rhs]);
        }
      }
    }
  }
  return frame;
}

FramePtr validate_frame(std::vector<std::string> elements,
                        const std::vector<std::pair<std::string, std::string>>& leq) {
  std::unordered_map<std::string, ElemId> ids;
  for (ElemId i = 0; i < elements.size(); ++i) ids.emplace(elements[i], i);
  std::vector<std::pair<ElemId, ElemId>> pairs;
  pairs.reserve(leq.size());
  for (const auto& [a, b] : leq) {
    auto ia = ids.find(a);
    auto ib = ids.find(b);
    if (ia == ids.end()) fail(Errc::ElementUnknown, "order mentions unknown element '" + a + "'");
    if (ib == ids.end()) fail(Errc::ElementUnknown, "order mentions unknown element '" + b + "'");
    pairs.emplace_back(ia->second, ib->second);
  }
  return validate_frame(std::move(elements), pairs);
}

FramePtr set_family_frame(std::vector<std::string> names, const std::vector<std::uint64_t>& sets) {
  const std::size_t n = sets.size();
  if (n == 0) fail(Errc::NotALattice, "empty family");
  auto frame = std::make_shared<FiniteFrame>();
  frame->names_ = std::move(names);
  for (ElemId i = 0; i < n; ++i) {
    if (!frame->index_.emplace(frame->names_[i], i).second) {
      fail(Errc::DuplicateName, "element '" + frame->names_[i] + "' listed twice");
    }
  }
  std::unordered_map<std::uint64_t, ElemId> id_of;
  for (ElemId i = 0; i < n; ++i) {
    if (!id_of.emplace(sets[i], i).second) fail(Errc::NotAPoset, "set listed twice in the family");
  }
  auto lookup = [&](std::uint64_t s, const char* what) {
    auto it = id_of.find(s);
    if (it == id_of.end()) fail(Errc::NotALattice, std::string("family not closed under ") + what);
    return it->second;
  };
  frame->leq_.assign(n * n, 0);
  frame->meet_.assign(n * n, 0);
  frame->join_.assign(n * n, 0);
  std::uint64_t lo = ~std::uint64_t{0};
  std::uint64_t hi = 0;
  for (ElemId a = 0; a < n; ++a) {
    lo &= sets[a];
    hi |= sets[a];
    for (ElemId b = 0; b < n; ++b) {
      frame->leq_[a * n + b] = (sets[a] & ~sets[b]) == 0 ? 1 : 0;
      frame->meet_[a * n + b] = lookup(sets[a] & sets[b], "intersection");
      frame->join_[a * n + b] = lookup(sets[a] | sets[b], "union");
    }
  }
  frame->bottom_ = lookup(lo, "intersection");
  frame->top_ = lookup(hi, "union");
  return frame;
}

std::vector<std::pair<ElemId, ElemId>> order_closure(std::size_t n,
                                                     const std::vector<std::pair<ElemId, ElemId>>& gens) {
  std::vector<unsigned char> r(n * n, 0);
  for (std::size_t i = 0; i < n; ++i) r[i * n + i] = 1;
  for (auto [a, b] : gens) r[a * n + b] = 1;
  for (std::size_t k = 0; k < n; ++k) {
    for (std::size_t i = 0; i < n; ++i) {
      if (!r[i * n + k]) continue;
      for (std::size_t j = 0; j < n; ++j) {
        if (r[k * n + j]) r[i * n + j] = 1;
      }
    }
  }
  std::vector<std::pair<ElemId, ElemId>> out;
  for (ElemId i = 0; i < n; ++i) {
    for (ElemId j = 0; j < n; ++j) {
      if (r[i * n + j]) out.emplace_back(i, j);
    }
  }
  return out;
}

FramePtr chain_frame(std::size_t n) {
  std::vector<std::string> names;
  std::vector<std::pair<ElemId, ElemId>> leq;
  for (ElemId i = 0; i < n; ++i) {
    names.push_back("c" + std::to_string(i));
    for (ElemId j = i; j < n; ++j) leq.emplace_back(i, j);
  }
  return validate_frame(std::move(names), leq);
}

FramePtr powerset_frame(std::size_t atoms) {
  const std::size_t n = std::size_t{1} << atoms;
  std::vector<std::string> names;
  for (std::size_t m = 0; m < n; ++m) {
    std::string s = "{";
    for (std::size_t i = 0; i < atoms; ++i) {
      if ((m >> i) & 1U) {
        if (s.size() > 1) s += ',';
        s += std::to_string(i + 1);
      }
    }
    names.push_back(s + "}");
  }
  std::vector<std::uint64_t> sets(n);
  std::iota(sets.begin(), sets.end(), std::uint64_t{0});
  return set_family_frame(std::move(names), sets);
}

FrameMorphismReport check_frame_morphism(const FrameMorphism& f) {
  const FiniteFrame& src = *f.source;
  const FiniteFrame& tgt = *f.target;
  if (f.map.size() != src.size()) {
    fail(Errc::TargetElementUnknown, "map is not total on the source frame");
  }
  for (ElemId x = 0; x < src.size(); ++x) {
    if (f.map[x] >= tgt.size()) {
      fail(Errc::TargetElementUnknown, "image of " + src.name(x) + " is not a target element");
    }
  }

  FrameMorphismReport r;
  auto note = [&](bool& flag, std::string what) {
    if (flag) r.violations.push_back(std::move(what));
    flag = false;
  };
  if (f(src.top()) != tgt.top()) note(r.preserves_top, "top maps to " + tgt.name(f(src.top())));
  if (f(src.bottom()) != tgt.bottom()) note(r.preserves_bottom, "bottom maps to " + tgt.name(f(src.bottom())));
  for (ElemId a = 0; a < src.size(); ++a) {
    for (ElemId b = a + 1; b < src.size(); ++b) {
      if (r.preserves_meets && f(src.meet(a, b)) != tgt.meet(f(a), f(b))) {
        note(r.preserves_meets, "meet of " + src.name(a) + ", " + src.name(b) + " not preserved");
      }
      if (r.preserves_joins && f(src.join(a, b)) != tgt.join(f(a), f(b))) {
        note(r.preserves_joins, "join of " + src.name(a) + ", " + src.name(b) + " not preserved");
      }
    }
  }
  r.is_frame_morphism = r.preserves_top && r.preserves_bottom && r.preserves_meets && r.preserves_joins;

  std::vector<bool> hit(tgt.size(), false);
  for (ElemId y : f.map) hit[y] = true;
  r.is_surjective = std::all_of(hit.begin(), hit.end(), [](bool b) { return b; });
  return r;
}

FrameMorphism identity_morphism(const FramePtr& frame) {
  FrameMorphism id{frame, frame, std::vector<ElemId>(frame->size())};
  std::iota(id.map.begin(), id.map.end(), ElemId{0});
  return id;
}

FrameMorphism compose(const FrameMorphism& g, const FrameMorphism& f) {
  FrameMorphism out{f.source, g.target, std::vector<ElemId>(f.map.size())};
  for (ElemId x = 0; x < f.map.size(); ++x) out.map[x] = g(f(x));
  return out;
}

std::vector<ElemId> right_adjoint(const FrameMorphism& f) {
  const FiniteFrame& src = *f.source;
  const FiniteFrame& tgt = *f.target;
  std::vector<ElemId> adj(tgt.size(), src.bottom());
  for (ElemId a = 0; a < tgt.size(); ++a) {
    ElemId acc = src.bottom();
    for (ElemId b = 0; b < src.size(); ++b) {
      if (tgt.leq(f(b), a)) acc = src.join(acc, b);
    }
    adj[a] = acc;
  }
  return adj;
}

std::vector<Filter> enumerate_filters(const FiniteFrame& frame) {
  std::vector<Filter> out;
  out.reserve(frame.size());
  for (ElemId x = 0; x < frame.size(); ++x) out.push_back(Filter{x});
  return out;
}

Filter inverse_image(const FrameMorphism& f, Filter on_target) {
  const FiniteFrame& src = *f.source;
  const FiniteFrame& tgt = *f.target;
  std::vector<ElemId> members;
  for (ElemId y = 0; y < src.size(); ++y) {
    if (contains(tgt, on_target, f(y))) members.push_back(y);
  }
  if (members.empty()) fail(Errc::NotAFilter, "inverse image is empty");
  Filter out{src.meet_all(members)};
  for (ElemId y = 0; y < src.size(); ++y) {
    bool member = contains(tgt, on_target, f(y));
    if (member != contains(src, out, y)) {
      fail(Errc::NotAFilter, "inverse image is not the principal filter of " + src.name(out.generator));
    }
  }
  return out;
}

Filter direct_image(const FrameMorphism& f, Filter on_source) {
  const FiniteFrame& src = *f.source;
  const FiniteFrame& tgt = *f.target;
  Filter out{f(on_source.generator)};
  std::vector<bool> up(tgt.size(), false);
  for (ElemId x = 0; x < src.size(); ++x) {
    if (!contains(src, on_source, x)) continue;
    for (ElemId z = 0; z < tgt.size(); ++z) {
      if (tgt.leq(f(x), z)) up[z] = true;
    }
  }
  for (ElemId z = 0; z < tgt.size(); ++z) {
    if (up[z] != contains(tgt, out, z)) {
      fail(Errc::NotAFilter, "direct image is not generated by " + tgt.name(out.generator));
    }
  }
  return out;
}

}  // namespace pg
