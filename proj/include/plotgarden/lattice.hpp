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

#ifndef PLOTGARDEN_LATTICE_HPP_
#define PLOTGARDEN_LATTICE_HPP_

#include <compare>
#include <cstddef>
#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <utility>
#include <vector>

#include "plotgarden/sets.hpp"

namespace pg {

/// A finite distributive lattice given by an explicit order relation.
/// Meets and joins are tabulated at validation time, so every lattice
/// operation afterwards is a lookup.  Instances are immutable and shared
/// through FramePtr.
class FiniteFrame {
 public:
  [[nodiscard]] std::size_t size() const { return names_.size(); }
  [[nodiscard]] const std::vector<std::string>& names() const { return names_; }
  [[nodiscard]] const std::string& name(ElemId x) const { return names_[x]; }
  [[nodiscard]] std::optional<ElemId> find(std::string_view name) const;
  /// Throws ElementUnknown.
  [[nodiscard]] ElemId index(std::string_view name) const;

  [[nodiscard]] bool leq(ElemId a, ElemId b) const { return leq_[a * size() + b] != 0; }
  [[nodiscard]] ElemId meet(ElemId a, ElemId b) const { return meet_[a * size() + b]; }
  [[nodiscard]] ElemId join(ElemId a, ElemId b) const { return join_[a * size() + b]; }
  [[nodiscard]] ElemId bottom() const { return bottom_; }
  [[nodiscard]] ElemId top() const { return top_; }

  [[nodiscard]] ElemId join_all(std::span<const ElemId> xs) const;
  [[nodiscard]] ElemId meet_all(std::span<const ElemId> xs) const;

  /// Complement of x if one exists.
  [[nodiscard]] std::optional<ElemId> complement(ElemId x) const;

  /// Atoms: elements covering bottom.
  [[nodiscard]] std::vector<ElemId> atoms() const;

 private:
  friend std::shared_ptr<const FiniteFrame> validate_frame(
      std::vector<std::string> elements, const std::vector<std::pair<ElemId, ElemId>>& leq);
  friend std::shared_ptr<const FiniteFrame> set_family_frame(std::vector<std::string> names,
                                                             const std::vector<std::uint64_t>& sets);

  std::vector<std::string> names_;
  std::unordered_map<std::string, ElemId> index_;
  std::vector<unsigned char> leq_;
  std::vector<ElemId> meet_;
  std::vector<ElemId> join_;
  ElemId bottom_ = 0;
  ElemId top_ = 0;
};

using FramePtr = std::shared_ptr<const FiniteFrame>;

/// Validates a finite frame.  `leq` must already be a partial order
/// (reflexive, antisymmetric, transitive); it is not closed here.
/// Errors: NotAPoset, NotALattice, FrameLawViolation, DuplicateName.
FramePtr validate_frame(std::vector<std::string> elements,
                        const std::vector<std::pair<ElemId, ElemId>>& leq);
FramePtr validate_frame(std::vector<std::string> elements,
                        const std::vector<std::pair<std::string, std::string>>& leq);

/// The frame of a family of sets ordered by inclusion.  The family must be
/// closed under binary union and intersection; such a family is always
/// distributive, so no frame-law scan is needed.  Errors: NotALattice.
FramePtr set_family_frame(std::vector<std::string> names, const std::vector<std::uint64_t>& sets);

/// Reflexive-transitive closure of a generating relation, for building
/// orders by their covers.
std::vector<std::pair<ElemId, ElemId>> order_closure(std::size_t n,
                                                     const std::vector<std::pair<ElemId, ElemId>>& gens);

FramePtr chain_frame(std::size_t n);
FramePtr powerset_frame(std::size_t atoms);

/// A map between frames.  Not necessarily a frame morphism; see
/// check_frame_morphism.
struct FrameMorphism {
  FramePtr source;
  FramePtr target;
  std::vector<ElemId> map;

  ElemId operator()(ElemId x) const { return map[x]; }
};

struct FrameMorphismReport {
  bool preserves_top = true;
  bool preserves_bottom = true;
  bool preserves_meets = true;
  bool preserves_joins = true;
  bool is_frame_morphism = true;
  bool is_surjective = true;
  std::vector<std::string> violations;
};

/// Errors: TargetElementUnknown when the map is not total into target.
FrameMorphismReport check_frame_morphism(const FrameMorphism& f);

FrameMorphism identity_morphism(const FramePtr& frame);
/// g after f.
FrameMorphism compose(const FrameMorphism& g, const FrameMorphism& f);

/// f_*(a) = join of every b with f(b) <= a.  The result is indexed by target
/// elements and lands in the source.
std::vector<ElemId> right_adjoint(const FrameMorphism& f);

/// A filter on a finite frame.  Every such filter is principal, so it is
/// stored by its least element; membership is x >= generator.  The frame is
/// supplied by context.
struct Filter {
  ElemId generator = 0;

  auto operator<=>(const Filter&) const = default;
};

inline bool contains(const FiniteFrame& frame, Filter f, ElemId x) { return frame.leq(f.generator, x); }
/// f is a subset of g.
inline bool subset(const FiniteFrame& frame, Filter f, Filter g) {
  return frame.leq(g.generator, f.generator);
}

/// One filter per element, including the improper filter generated by bottom.
std::vector<Filter> enumerate_filters(const FiniteFrame& frame);

/// {y : f(y) in F} for a filter F on f's target.  Errors: NotAFilter when the
/// preimage has no least element.
Filter inverse_image(const FrameMorphism& f, Filter on_target);
/// Upward closure of f[F] for a filter F on f's source.
Filter direct_image(const FrameMorphism& f, Filter on_source);

}  // namespace pg

#endif  // PLOTGARDEN_LATTICE_HPP_
