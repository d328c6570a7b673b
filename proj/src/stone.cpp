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

#include "plotgarden/stone.hpp"

#include <numeric>

#include "plotgarden/error.hpp"

namespace pg {

PlotPtr spec_boolean(const FramePtr& algebra, const std::vector<ElemId>& box) {
  const FiniteFrame& b = *algebra;
  if (box.size() != b.size()) fail(Errc::ElementUnknown, "box table does not cover the algebra");
  for (ElemId x = 0; x < b.size(); ++x) {
    if (box[x] >= b.size()) fail(Errc::ElementUnknown, "box table leaves the algebra at " + b.name(x));
    if (!b.complement(x)) fail(Errc::NotBoolean, b.name(x) + " has no complement");
  }

  const std::vector<ElemId> atoms = b.atoms();
  if (atoms.size() > kMaxPoints) fail(Errc::SizeLimit, "too many atoms");
  std::vector<std::string> names;
  for (ElemId a : atoms) names.push_back("^" + b.name(a));

  std::vector<std::pair<NodeId, NodeId>> edges;
  for (NodeId p = 0; p < atoms.size(); ++p) {
    for (NodeId q = 0; q < atoms.size(); ++q) {
      bool inside = true;
      for (ElemId x = 0; x < b.size() && inside; ++x) {
        if (b.leq(atoms[p], box[x]) && !b.leq(atoms[q], x)) inside = false;
      }
      if (inside) edges.emplace_back(p, q);
    }
  }

  std::vector<PointSet> subbasis;
  for (ElemId x = 0; x < b.size(); ++x) {
    PointSet o;
    for (PointId p = 0; p < atoms.size(); ++p) {
      if (b.leq(atoms[p], x)) o.insert(p);
    }
    subbasis.push_back(o);
  }
  SpacePtr space = generated_space(names, subbasis);
  std::vector<PointId> valuation(atoms.size());
  std::iota(valuation.begin(), valuation.end(), PointId{0});
  return validate_plot(validate_structure(std::move(names), edges), std::move(space), std::move(valuation));
}

}  // namespace pg
