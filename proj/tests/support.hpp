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

#ifndef PLOTGARDEN_TESTS_SUPPORT_HPP_
#define PLOTGARDEN_TESTS_SUPPORT_HPP_

#include <functional>
#include <initializer_list>
#include <optional>
#include <string>
#include <vector>

#include "plotgarden/error.hpp"
#include "plotgarden/generate.hpp"
#include "plotgarden/plot.hpp"
#include "plotgarden/workspace.hpp"

namespace pg::test {

inline std::string fixture_path(const std::string& file = "fixtures.ws") {
  return std::string(PG_FIXTURES) + "/" + file;
}

inline const Workspace& fixtures() {
  static const Workspace ws = load_workspace(fixture_path());
  return ws;
}

inline PlotPtr sierp() { return fixtures().plots.at("sierp"); }
inline PlotMap tight() { return fixtures().plot_maps.at("tight"); }
inline PlotMap homeo() { return fixtures().plot_maps.at("homeo"); }

inline SpacePtr sierpinski() { return sierp()->space; }

inline PointSet points(const FiniteSpace& s, std::initializer_list<const char*> names) {
  PointSet out;
  for (const char* n : names) out.insert(s.index(n));
  return out;
}

/// Frame element of the open with the given members.
inline ElemId open_of(const FiniteSpace& s, std::initializer_list<const char*> names) {
  return s.require_open(points(s, names));
}

/// Error code thrown by f, if any.
template <class F>
std::optional<Errc> error_of(F&& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.code();
  }
  return std::nullopt;
}

inline PlotPtr flat_plot(std::vector<std::string> nodes, const std::vector<std::pair<std::string, std::string>>& edges,
                         SpacePtr space) {
  std::vector<PointId> val(nodes.size());
  for (NodeId n = 0; n < nodes.size(); ++n) val[n] = space->index(nodes[n]);
  return validate_plot(validate_structure(std::move(nodes), edges), std::move(space), std::move(val));
}

inline void for_plots(std::size_t count, const Profile& profile, const std::function<void(std::uint64_t, const PlotPtr&)>& f) {
  for (std::uint64_t seed = 1; seed <= count; ++seed) {
    Rng rng(seed);
    f(seed, random_plot(rng, profile));
  }
}

}  // namespace pg::test

#endif  // PLOTGARDEN_TESTS_SUPPORT_HPP_
