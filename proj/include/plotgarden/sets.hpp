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

#ifndef PLOTGARDEN_SETS_HPP_
#define PLOTGARDEN_SETS_HPP_

#include <bit>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <vector>

#include <boost/dynamic_bitset.hpp>

namespace pg {

using ElemId = std::uint32_t;
using PointId = std::uint32_t;
using NodeId = std::uint32_t;

/// Spaces have at most this many points; subsets are single machine words.
inline constexpr std::size_t kMaxPoints = 64;

/// A subset of the points of a finite space.
class PointSet {
 public:
  constexpr PointSet() = default;
  constexpr explicit PointSet(std::uint64_t bits) : bits_(bits) {}

  static constexpr PointSet full(std::size_t n) {
    return PointSet(n >= 64 ? ~std::uint64_t{0} : ((std::uint64_t{1} << n) - 1));
  }
  static constexpr PointSet single(PointId p) { return PointSet(std::uint64_t{1} << p); }

  [[nodiscard]] constexpr std::uint64_t bits() const { return bits_; }
  [[nodiscard]] constexpr bool empty() const { return bits_ == 0; }
  [[nodiscard]] constexpr std::size_t count() const { return std::popcount(bits_); }
  [[nodiscard]] constexpr bool contains(PointId p) const { return (bits_ >> p) & 1U; }
  [[nodiscard]] constexpr bool subset_of(PointSet o) const { return (bits_ & ~o.bits_) == 0; }
  [[nodiscard]] constexpr bool intersects(PointSet o) const { return (bits_ & o.bits_) != 0; }

  constexpr void insert(PointId p) { bits_ |= std::uint64_t{1} << p; }
  constexpr void erase(PointId p) { bits_ &= ~(std::uint64_t{1} << p); }

  /// Complement relative to the first n points.
  [[nodiscard]] constexpr PointSet complement(std::size_t n) const {
    return PointSet(~bits_ & full(n).bits_);
  }

  constexpr PointSet operator&(PointSet o) const { return PointSet(bits_ & o.bits_); }
  constexpr PointSet operator|(PointSet o) const { return PointSet(bits_ | o.bits_); }
  constexpr PointSet& operator&=(PointSet o) { bits_ &= o.bits_; return *this; }
  constexpr PointSet& operator|=(PointSet o) { bits_ |= o.bits_; return *this; }

  constexpr auto operator<=>(const PointSet&) const = default;

  template <class F>
  void for_each(F&& f) const {
    for (std::uint64_t b = bits_; b != 0; b &= b - 1) f(static_cast<PointId>(std::countr_zero(b)));
  }

  [[nodiscard]] std::vector<PointId> members() const {
    std::vector<PointId> out;
    for_each([&](PointId p) { out.push_back(p); });
    return out;
  }

 private:
  std::uint64_t bits_ = 0;
};

/// A subset of the nodes of a transition structure.  Harvested structures
/// can have thousands of nodes, so this one is dynamically sized.
using NodeSet = boost::dynamic_bitset<std::uint64_t>;

template <class F>
void for_each_node(const NodeSet& s, F&& f) {
  for (auto i = s.find_first(); i != NodeSet::npos; i = s.find_next(i)) f(static_cast<NodeId>(i));
}

}  // namespace pg

#endif  // PLOTGARDEN_SETS_HPP_
