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

#include "plotgarden/garden.hpp"

#include <numeric>
#include <string>

#include "plotgarden/error.hpp"

namespace pg {

namespace {

std::string id(std::string_view prefix, const char* name) { return std::string(prefix) + "." + name; }

}  // namespace

LawList bed_laws(const Bed& bed, std::string_view prefix) {
  const FiniteFrame& a = *bed.frame;
  auto nm = [&](ElemId x) { return a.name(x); };
  LawCheck box_top(id(prefix, "box_top"), "box preserves top");
  LawCheck box_meets(id(prefix, "box_meets"), "box preserves binary meets");
  LawCheck dia_mono(id(prefix, "diamond_monotone"), "diamond is monotone");
  LawCheck mixed(id(prefix, "mixed"), "box(x) & diamond(y) <= diamond(x & y)");

  if (bed.box.size() != a.size() || bed.diamond.size() != a.size()) {
    fail(Errc::BedAxiomViolation, "operator tables do not cover the frame");
  }
  for (ElemId x = 0; x < a.size(); ++x) {
    if (bed.box[x] >= a.size() || bed.diamond[x] >= a.size()) {
      fail(Errc::BedAxiomViolation, "operator table leaves the frame at " + nm(x));
    }
  }

  box_top.require(bed.box[a.top()] == a.top(), "box(top) = " + nm(bed.box[a.top()]));
  for (ElemId x = 0; x < a.size(); ++x) {
    for (ElemId y = 0; y < a.size(); ++y) {
      if (box_meets.pass && x < y && bed.box[a.meet(x, y)] != a.meet(bed.box[x], bed.box[y])) {
        box_meets.refute("x=" + nm(x) + " y=" + nm(y));
      }
      if (dia_mono.pass && a.leq(x, y) && !a.leq(bed.diamond[x], bed.diamond[y])) {
        dia_mono.refute(nm(x) + " <= " + nm(y) + " but diamond does not follow");
      }
      if (mixed.pass && !a.leq(a.meet(bed.box[x], bed.diamond[y]), bed.diamond[a.meet(x, y)])) {
        mixed.refute("x=" + nm(x) + " y=" + nm(y));
      }
    }
  }
  return {box_top, box_meets, dia_mono, mixed};
}

void validate_bed(const Bed& bed) {
  LawList laws = bed_laws(bed);
  if (const LawCheck* bad = first_failure(laws)) {
    fail(Errc::BedAxiomViolation, bad->id + " (" + bad->statement + "): " + bad->witness);
  }
}

GardenPtr validate_garden(Bed bed, SpacePtr space, std::vector<ElemId> covering) {
  validate_bed(bed);
  FrameMorphism cov{bed.frame, space->frame(), covering};
  FrameMorphismReport r = check_frame_morphism(cov);
  if (!r.is_frame_morphism) fail(Errc::CoveringNotFrameMorphism, r.violations.front());
  if (!r.is_surjective) fail(Errc::CoveringNotSurjective, "some open of the base space is not covered");
  return std::make_shared<const Garden>(Garden{std::move(bed), std::move(space), std::move(covering)});
}

GardenMorphismReport check_garden_morphism(const GardenMorphism& m, std::string_view prefix) {
  const Garden& src = *m.source;
  const Garden& tgt = *m.target;
  const FiniteFrame& b = src.frame();
  const FiniteFrame& a = tgt.frame();

  GardenMorphismReport out;
  LawCheck frame(id(prefix, "frame_morphism"), "frame map is a frame morphism");
  LawCheck cont(id(prefix, "continuous"), "point map is continuous");
  LawCheck lax_box(id(prefix, "lax_box"), "f(box_B b) <= box_A f(b)");
  LawCheck lax_dia(id(prefix, "lax_diamond"), "f(diamond_B b) <= diamond_A f(b)");
  LawCheck square(id(prefix, "square"), "phi^-1 . beta = alpha . f");

  if (m.frame_map.size() != b.size() || m.point_map.size() != tgt.space->size()) {
    fail(Errc::NotAGardenMorphism, "component maps are not total");
  }
  FrameMorphismReport fr = check_frame_morphism(m.frame_morphism());
  if (!fr.is_frame_morphism) frame.refute(fr.violations.front());

  for (PointId p : m.point_map) {
    if (p >= src.space->size()) fail(Errc::NotAGardenMorphism, "point map leaves the source garden's space");
  }
  auto bad_open = continuity_witness(*tgt.space, *src.space, m.point_map);
  if (bad_open) cont.refute("preimage of " + src.space->format(*bad_open) + " is not open");

  const auto& f = m.frame_map;
  for (ElemId x = 0; x < b.size(); ++x) {
    ElemId l = f[src.bed.box[x]];
    ElemId r = tgt.bed.box[f[x]];
    if (!a.leq(l, r)) lax_box.refute("b=" + b.name(x));
    else if (l != r) ++out.strict_box;

    l = f[src.bed.diamond[x]];
    r = tgt.bed.diamond[f[x]];
    if (!a.leq(l, r)) lax_dia.refute("b=" + b.name(x));
    else if (l != r) ++out.strict_diamond;

    if (!bad_open) {
      ContinuousMap phi = m.point_morphism();
      PointSet lhs = phi.preimage(src.cover(x));
      PointSet rhs = tgt.cover(f[x]);
      if (lhs != rhs) square.refute("b=" + b.name(x) + ": " + tgt.space->format(lhs) + " vs " + tgt.space->format(rhs));
    }
  }
  if (bad_open) square.refute("point map is not continuous");

  out.laws = {frame, cont, lax_box, lax_dia, square};
  out.ok = all_pass(out.laws);
  return out;
}

GardenMorphism identity_morphism(const GardenPtr& g) {
  GardenMorphism id{g, g, std::vector<ElemId>(g->frame().size()), std::vector<PointId>(g->space->size())};
  std::iota(id.frame_map.begin(), id.frame_map.end(), ElemId{0});
  std::iota(id.point_map.begin(), id.point_map.end(), PointId{0});
  return id;
}

GardenMorphism compose(const GardenMorphism& second, const GardenMorphism& first) {
  GardenMorphism out{first.source, second.target, std::vector<ElemId>(first.frame_map.size()),
                     std::vector<PointId>(second.point_map.size())};
  for (ElemId x = 0; x < first.frame_map.size(); ++x) out.frame_map[x] = second.frame_map[first.frame_map[x]];
  for (PointId p = 0; p < second.point_map.size(); ++p) out.point_map[p] = first.point_map[second.point_map[p]];
  return out;
}

}  // namespace pg
