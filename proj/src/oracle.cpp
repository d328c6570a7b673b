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

#include "plotgarden/oracle.hpp"

#include <algorithm>

#include "plotgarden/error.hpp"
#include "plotgarden/generate.hpp"

namespace pg::oracle {

std::vector<std::uint64_t> filters_by_subsets(const FiniteFrame& frame) {
  const std::size_t n = frame.size();
  if (n > kMaxSubsetFrame) fail(Errc::SizeLimit, "subset enumeration is limited to 16 elements");
  std::vector<std::uint64_t> out;
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << n); ++mask) {
    auto in = [&](ElemId x) { return (mask >> x) & 1U; };
    if (!in(frame.top())) continue;
    bool ok = true;
    for (ElemId x = 0; x < n && ok; ++x) {
      if (!in(x)) continue;
      for (ElemId y = 0; y < n && ok; ++y) {
        if (frame.leq(x, y) && !in(y)) ok = false;
        if (in(y) && !in(frame.meet(x, y))) ok = false;
      }
    }
    if (ok) out.push_back(mask);
  }
  return out;
}

PointSet lens_by_definition(const FiniteSpace& space, PointSet e) {
  PointSet out;
  for (PointId q = 0; q < space.size(); ++q) {
    bool saturated = false;
    e.for_each([&](PointId x) {
      bool every = true;
      for (PointSet v : space.opens()) {
        if (v.contains(x) && !v.contains(q)) every = false;
      }
      if (every) saturated = true;
    });
    bool closed = true;
    for (PointSet v : space.opens()) {
      if (v.contains(q) && !v.intersects(e)) closed = false;
    }
    if (saturated && closed) out.insert(q);
  }
  return out;
}

namespace {

bool in_nabla(const Garden& g, PointId p, ElemId x) { return g.space->open(g.covering[x]).contains(p); }

bool is_flower(const Garden& g, const Flower& f) {
  const FiniteFrame& a = g.frame();
  if (in_nabla(g, f.root, g.bed.diamond[f.stalk])) return false;
  for (ElemId x = 0; x < a.size(); ++x) {
    if (in_nabla(g, f.root, g.bed.box[x]) && !a.leq(f.bloom.generator, x)) return false;
  }
  return true;
}

bool step(const Garden& g, const Flower& from, const Flower& to) {
  const FiniteFrame& a = g.frame();
  if (in_nabla(g, to.root, from.stalk)) return false;
  for (ElemId x = 0; x < a.size(); ++x) {
    if (a.leq(from.bloom.generator, x) && !in_nabla(g, to.root, x)) return false;
  }
  return true;
}

// Why f fails a health condition given its successors among members;
// empty when healthy.
std::string unhealthy_because(const Garden& g, const std::vector<Flower>& members,
                              const std::vector<std::size_t>& out, const Flower& f) {
  const FiniteFrame& a = g.frame();
  for (ElemId x = 0; x < a.size(); ++x) {
    if (!a.leq(f.bloom.generator, x)) {
      bool found = false;
      for (std::size_t t : out) found = found || !in_nabla(g, members[t].root, x);
      if (!found) return "no step leaves " + a.name(x) + " outside nabla";
    }
    if (!a.leq(x, f.stalk)) {
      bool found = false;
      for (std::size_t t : out) found = found || in_nabla(g, members[t].root, x);
      if (!found) return "no step puts " + a.name(x) + " in nabla";
    }
  }
  return {};
}

// Successor lists within members.
std::vector<std::vector<std::size_t>> steps_among(const Garden& g, const std::vector<Flower>& members) {
  std::vector<std::vector<std::size_t>> out(members.size());
  for (std::size_t i = 0; i < members.size(); ++i) {
    for (std::size_t j = 0; j < members.size(); ++j) {
      if (step(g, members[i], members[j])) out[i].push_back(j);
    }
  }
  return out;
}

template <class Choose>
std::vector<Flower> prune(const Garden& g, std::vector<Flower> all, Choose choose) {
  const auto succ = steps_among(g, all);
  std::vector<char> alive(all.size(), 1);
  for (;;) {
    std::vector<std::size_t> bad;
    for (std::size_t i = 0; i < all.size(); ++i) {
      if (!alive[i]) continue;
      std::vector<std::size_t> live;
      for (std::size_t t : succ[i]) {
        if (alive[t]) live.push_back(t);
      }
      if (!unhealthy_because(g, all, live, all[i]).empty()) bad.push_back(i);
    }
    if (bad.empty()) break;
    for (std::size_t i : choose(bad)) alive[i] = 0;
  }
  std::vector<Flower> out;
  for (std::size_t i = 0; i < all.size(); ++i) {
    if (alive[i]) out.push_back(all[i]);
  }
  return out;
}

}  // namespace

std::vector<Flower> flowers_by_scan(const Garden& g) {
  std::vector<Flower> out;
  const FiniteFrame& a = g.frame();
  for (PointId p = 0; p < g.space->size(); ++p) {
    for (ElemId stalk = 0; stalk < a.size(); ++stalk) {
      for (ElemId c = 0; c < a.size(); ++c) {
        Flower f{p, stalk, Filter{c}};
        if (is_flower(g, f)) out.push_back(f);
      }
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

bool healthy_by_definition(const Garden& g, const std::vector<Flower>& members, std::string* witness) {
  for (const Flower& f : members) {
    if (!is_flower(g, f)) {
      if (witness) *witness = flower_name(g, f) + " is not a flower";
      return false;
    }
  }
  const auto succ = steps_among(g, members);
  for (std::size_t i = 0; i < members.size(); ++i) {
    std::string why = unhealthy_because(g, members, succ[i], members[i]);
    if (!why.empty()) {
      if (witness) *witness = flower_name(g, members[i]) + ": " + why;
      return false;
    }
  }
  return true;
}

std::vector<Flower> harvest_by_rescan(const Garden& g) {
  return prune(g, flowers_by_scan(g), [](const std::vector<std::size_t>& bad) { return bad; });
}

std::vector<Flower> healthy_core(const Garden& g, std::vector<Flower> start) {
  return prune(g, std::move(start), [](const std::vector<std::size_t>& bad) { return bad; });
}

std::vector<Flower> harvest_in_random_order(const Garden& g, std::uint64_t seed) {
  Rng rng(seed);
  return prune(g, flowers_by_scan(g), [&](std::vector<std::size_t> bad) {
    // A random nonempty batch of the currently unhealthy flowers.
    rng.shuffle(bad);
    bad.resize(rng.between(1, bad.size()));
    return bad;
  });
}

Bed lift_by_definition(const Plot& p) {
  const FiniteSpace& space = *p.space;
  const TransitionStructure& s = *p.structure;
  const std::size_t n = s.size();
  std::vector<std::vector<NodeId>> succ(n);
  for (const auto& [a, b] : s.edges()) succ[a].push_back(b);

  Bed bed{space.frame(), std::vector<ElemId>(space.opens().size()), std::vector<ElemId>(space.opens().size())};
  for (ElemId u = 0; u < space.opens().size(); ++u) {
    const PointSet uset = space.open(u);
    std::vector<char> all_in(n), some_in(n);
    for (NodeId k = 0; k < n; ++k) {
      all_in[k] = std::all_of(succ[k].begin(), succ[k].end(), [&](NodeId q) { return uset.contains(p.valuation[q]); });
      some_in[k] = std::any_of(succ[k].begin(), succ[k].end(), [&](NodeId q) { return uset.contains(p.valuation[q]); });
    }
    auto largest = [&](const std::vector<char>& target) {
      ElemId best = 0;
      for (ElemId v = 0; v < space.opens().size(); ++v) {
        bool ok = true;
        for (NodeId k = 0; k < n; ++k) {
          if (space.open(v).contains(p.valuation[k]) && !target[k]) ok = false;
        }
        if (ok && space.open(best).subset_of(space.open(v))) best = v;
      }
      return best;
    };
    bed.box[u] = largest(all_in);
    bed.diamond[u] = largest(some_in);
  }
  return bed;
}

LawCheck compare_filters(const FiniteFrame& frame) {
  LawCheck law("oracle.filters", "principal filters are exactly the filters found by subset enumeration");
  std::vector<std::uint64_t> fast;
  for (Filter f : enumerate_filters(frame)) {
    std::uint64_t mask = 0;
    for (ElemId x = 0; x < frame.size(); ++x) {
      if (contains(frame, f, x)) mask |= std::uint64_t{1} << x;
    }
    fast.push_back(mask);
  }
  std::sort(fast.begin(), fast.end());
  std::vector<std::uint64_t> slow = filters_by_subsets(frame);
  law.require(fast == slow, std::to_string(fast.size()) + " principal vs " + std::to_string(slow.size()) + " enumerated");
  return law;
}

LawCheck compare_lens(const FiniteSpace& space) {
  LawCheck law("oracle.lens", "lens closure agrees with its definition on every subset");
  if (space.size() > 16) fail(Errc::SizeLimit, "lens comparison enumerates all subsets; at most 16 points");
  for (std::uint64_t bits = 0; bits < (std::uint64_t{1} << space.size()) && law.pass; ++bits) {
    const PointSet e(bits);
    const PointSet fast = lens(space, e);
    law.require(fast == lens_by_definition(space, e) && fast == spatial_closures(space, e).lens,
                "E=" + space.format(e));
  }
  return law;
}

LawCheck compare_flowers(const Garden& g) {
  LawCheck law("oracle.flowers", "flower enumeration agrees with the triple scan");
  const FlowerStructure fs = flower_structure(g);
  const std::vector<Flower> slow = flowers_by_scan(g);
  law.require(fs.flowers == slow, std::to_string(fs.flowers.size()) + " enumerated vs " + std::to_string(slow.size()) + " scanned");
  // Transition rule, pair by pair.
  for (std::size_t i = 0; i < slow.size() && law.pass; ++i) {
    for (std::size_t j = 0; j < slow.size() && law.pass; ++j) {
      law.require(fs.has_edge(i, j) == step(g, slow[i], slow[j]),
                  flower_name(g, slow[i]) + " -> " + flower_name(g, slow[j]));
    }
  }
  return law;
}

LawCheck compare_harvest(const GardenPtr& g) {
  LawCheck law("oracle.harvest", "worklist pruning agrees with full-rescan pruning");
  const Harvest h = harvest(g);
  const std::vector<Flower> slow = harvest_by_rescan(*g);
  law.require(h.survivors == slow,
              std::to_string(h.survivors.size()) + " by worklist vs " + std::to_string(slow.size()) + " by rescan");
  std::string why;
  if (law.pass && !healthy_by_definition(*g, slow, &why)) law.refute("rescan result is not healthy: " + why);
  // The plot's transitions are the rule restricted to survivors.
  const TransitionStructure& s = *h.plot->structure;
  for (NodeId a = 0; a < s.size() && law.pass; ++a) {
    for (NodeId b = 0; b < s.size() && law.pass; ++b) {
      law.require(s.has_edge(a, b) == step(*g, h.survivors[a], h.survivors[b]), s.name(a) + " -> " + s.name(b));
    }
  }
  return law;
}

LawCheck compare_harvest_order(const GardenPtr& g, std::uint64_t seed) {
  LawCheck law("oracle.harvest_order", "pruning in a random order reaches the same fixpoint");
  const std::vector<Flower> a = harvest_by_rescan(*g);
  const std::vector<Flower> b = harvest_in_random_order(*g, seed);
  law.require(a == b, "schedule seed " + std::to_string(seed) + " keeps " + std::to_string(b.size()) + " instead of " +
                          std::to_string(a.size()));
  return law;
}

LawCheck compare_lift(const Plot& p) {
  LawCheck law("oracle.lift", "lifted operators agree with the largest-qualifying-open definition");
  const Bed fast = lift_with_laws(p).bed;
  const Bed slow = lift_by_definition(p);
  for (ElemId u = 0; u < fast.box.size() && law.pass; ++u) {
    law.require(fast.box[u] == slow.box[u] && fast.diamond[u] == slow.diamond[u], "U=" + p.space->format(p.space->open(u)));
  }
  return law;
}

LawList compare_all(const GardenPtr& g) {
  LawList laws;
  if (g->frame().size() <= kMaxSubsetFrame) laws.push_back(compare_filters(g->frame()));
  laws.push_back(compare_lens(*g->space));
  laws.push_back(compare_flowers(*g));
  laws.push_back(compare_harvest(g));
  laws.push_back(compare_harvest_order(g, g->frame().size() * 131 + g->space->size()));
  return laws;
}

LawList compare_all(const PlotPtr& p) {
  LawList laws{compare_lift(*p)};
  append(laws, compare_all(functor_G_object(*p)));
  return laws;
}

}  // namespace pg::oracle
