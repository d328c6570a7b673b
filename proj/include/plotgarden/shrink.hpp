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

#ifndef PLOTGARDEN_SHRINK_HPP_
#define PLOTGARDEN_SHRINK_HPP_

#include <cstddef>
#include <functional>

#include "plotgarden/plot.hpp"

namespace pg {

using PlotPredicate = std::function<bool(const PlotPtr&)>;

struct ShrinkResult {
  PlotPtr plot;
  std::size_t steps = 0;  // accepted reductions
};

/// Greedy shrinking: repeatedly drop an edge, a node, an open or a point
/// (with the nodes over it) as long as `fails` still holds of the smaller
/// plot.  Candidates that are not valid plots are skipped.  Exceptions from
/// `fails` count as "does not fail".
ShrinkResult shrink_plot(const PlotPtr& start, const PlotPredicate& fails, std::size_t max_tries = 20000);

}  // namespace pg

#endif  // PLOTGARDEN_SHRINK_HPP_
