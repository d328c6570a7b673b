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

#ifndef PLOTGARDEN_FUZZ_HPP_
#define PLOTGARDEN_FUZZ_HPP_

#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>

#include "plotgarden/generate.hpp"
#include "plotgarden/law.hpp"
#include "plotgarden/report.hpp"
#include "plotgarden/workspace.hpp"

namespace pg {

struct FuzzOptions {
  std::uint64_t seed = 1;
  std::size_t count = 100;
  Profile profile;
  unsigned threads = 0;  // 0: hardware concurrency
};

/// Extra per-seed laws; lets tests plant failures.
using ExtraSuite = std::function<LawList(const InstanceSet&)>;

struct FuzzOutcome {
  LawReport report;
  /// Lowest failing seed and its (shrunk where possible) instances.
  std::optional<std::uint64_t> failing_seed;
  std::optional<Workspace> counterexample;
};

/// All suites on one seed's instances.  Adds observation counters to
/// `observations` (an object of integers).
LawReport fuzz_one(const InstanceSet& instances, nlohmann::json& observations, const ExtraSuite& extra = {});

/// Runs seeds seed .. seed+count-1 concurrently; the report depends only on
/// the options (not on thread count or timing).
FuzzOutcome run_fuzz(const FuzzOptions& options, const ExtraSuite& extra = {});

/// Every instance of a seed, registered under descriptive names.
Workspace instance_workspace(const InstanceSet& instances);

}  // namespace pg

#endif  // PLOTGARDEN_FUZZ_HPP_
