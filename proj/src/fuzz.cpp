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

#include "plotgarden/fuzz.hpp"

#include <algorithm>
#include <atomic>
#include <exception>
#include <mutex>
#include <string>
#include <thread>
#include <vector>

#include "plotgarden/adjunction.hpp"
#include "plotgarden/harvest.hpp"
#include "plotgarden/shrink.hpp"
#include "plotgarden/suites.hpp"

namespace pg {

using json = nlohmann::json;

namespace {

// Runs a suite, turning an escaping exception into a failed law.
template <class F>
LawList guarded(const std::string& kind, F suite) {
  try {
    return suite();
  } catch (const std::exception& e) {
    LawCheck law(kind + "/no_exception", "checking the suite raises no error");
    law.refute(e.what());
    return {law};
  }
}

void bump(json& obs, const std::string& key, std::int64_t by = 1) {
  obs[key] = obs.value(key, std::int64_t{0}) + by;
}

std::string where(std::uint64_t seed, const std::string& what) { return "seed " + std::to_string(seed) + " " + what; }

const LawCheck* failing(const LawList& laws) { return first_failure(laws); }

std::string first_failing_id(const LawList& laws) {
  const LawCheck* bad = failing(laws);
  return bad ? bad->id : std::string();
}

// Keeps failures reproducing the same law while shrinking a plot.
PlotPredicate fails_same(const std::string& id, std::function<LawList(const PlotPtr&)> suite) {
  return [id, suite](const PlotPtr& p) {
    LawList laws = suite(p);
    return std::any_of(laws.begin(), laws.end(), [&](const LawCheck& l) { return l.id == id && !l.pass; });
  };
}

Workspace counterexample_for(const InstanceSet& instances) {
  struct Candidate {
    PlotPtr plot;
    std::function<LawList(const PlotPtr&)> suite;
  };
  std::vector<Candidate> candidates;
  for (const PlotPtr& p : instances.plots) candidates.push_back({p, plot_suite});
  candidates.push_back({instances.plots.front(), [](const PlotPtr& p) {
                          return garden_suite(functor_G_object(*p));
                        }});
  for (const Candidate& c : candidates) {
    LawList laws = guarded("shrink", [&] { return c.suite(c.plot); });
    const std::string id = first_failing_id(laws);
    if (id.empty() || id.ends_with("/no_exception")) continue;
    ShrinkResult small = shrink_plot(c.plot, fails_same(id, c.suite));
    Workspace ws;
    ws.add("counterexample", small.plot);
    return ws;
  }
  // Failures elsewhere are kept unshrunk.
  return instance_workspace(instances);
}

}  // namespace

Workspace instance_workspace(const InstanceSet& instances) {
  Workspace ws;
  for (std::size_t i = 0; i < instances.plots.size(); ++i) ws.add("plot" + std::to_string(i), instances.plots[i]);
  for (std::size_t i = 0; i < instances.gardens.size(); ++i) {
    ws.add("garden" + std::to_string(i), instances.gardens[i]);
  }
  for (const auto& [name, m] : instances.lentile_maps) ws.add(name, m);
  for (std::size_t i = 0; i < instances.plot_maps.size(); ++i) {
    ws.add("plot_map" + std::to_string(i), instances.plot_maps[i]);
  }
  for (const auto& [name, m] : instances.garden_morphisms) ws.add("morphism_" + name, m);
  return ws;
}

LawReport fuzz_one(const InstanceSet& in, json& obs, const ExtraSuite& extra) {
  LawReport r;
  const std::uint64_t seed = in.seed;

  for (std::size_t i = 0; i < in.plots.size(); ++i) {
    r.record(guarded("plot", [&] { return plot_suite(in.plots[i]); }), where(seed, "plot" + std::to_string(i)));
  }
  for (std::size_t i = 0; i < in.gardens.size(); ++i) {
    const GardenPtr& g = in.gardens[i];
    r.record(guarded("garden", [&] { return garden_suite(g); }), where(seed, "garden" + std::to_string(i)));
    try {
      Harvest h = harvest(g);
      bump(obs, "harvests");
      bump(obs, "harvested_flowers", static_cast<std::int64_t>(h.survivors.size()));
      if (!h.unrooted.empty()) bump(obs, "unrooted_harvests");
      if (h.uses_improper_filter) bump(obs, "improper_blooms");
      if (oracle_sized(*g)) bump(obs, "oracle_gardens");
    } catch (const std::exception&) {
      bump(obs, "harvest_errors");
    }
  }
  for (const auto& [name, m] : in.lentile_maps) {
    r.record(guarded("lentile_map", [&] { return lentile_map_suite(m); }), where(seed, name));
  }
  for (std::size_t i = 0; i < in.plot_maps.size(); ++i) {
    const PlotMap& m = in.plot_maps[i];
    r.record(guarded("plot_map", [&] { return plot_map_suite(m); }), where(seed, "plot_map" + std::to_string(i)));
    try {
      PlotMapReport c = classify_plot_map(m);
      bump(obs, "plot_maps");
      if (c.is_lentile) bump(obs, "plot_maps_lentile");
      if (c.is_simulation) bump(obs, "plot_maps_simulation");
      if (c.up_condition && !c.minus_condition) bump(obs, "plot_maps_up_only");
      if (!c.up_condition && c.minus_condition) bump(obs, "plot_maps_minus_only");
    } catch (const std::exception&) {
      bump(obs, "classify_errors");
    }
  }
  for (const auto& [name, gm] : in.garden_morphisms) {
    r.record(guarded("garden_morphism", [&] { return garden_morphism_suite(gm); }),
             where(seed, "morphism_" + name));
  }

  // Composable pairs: a map followed by the unit at its target.
  auto find_map = [&](const std::string& name) -> const PlotMap* {
    for (const auto& [n, m] : in.lentile_maps) {
      if (n == name) return &m;
    }
    return nullptr;
  };
  auto find_gm = [&](const std::string& name) -> const GardenMorphism* {
    for (const auto& [n, m] : in.garden_morphisms) {
      if (n == name) return &m;
    }
    return nullptr;
  };
  if (const PlotMap* m = find_map("constructed")) {
    r.record(guarded("functor", [&] { return LawList{g_contravariance(*m, geometric_unit(m->target))}; }),
             where(seed, "constructed then unit"));
  }
  const PlotMap* id = find_map("identity");
  const PlotMap* eta = find_map("geometric_unit");
  if (id && eta) {
    r.record(guarded("functor", [&] { return LawList{g_contravariance(*id, *eta)}; }),
             where(seed, "identity then unit"));
  }
  const GardenMorphism* pull = find_gm("pullback");
  const GardenMorphism* unit = find_gm("algebraic_unit");
  if (pull && unit) {
    r.record(guarded("functor", [&] { return LawList{f_contravariance(*pull, *unit)}; }),
             where(seed, "pullback then unit"));
  }

  r.record(guarded("workspace", [&] {
             LawCheck rt("workspace/round_trip", "serializing, parsing and serializing again gives the same text");
             const std::string once = serialize_workspace(instance_workspace(in));
             rt.require(serialize_workspace(parse_workspace(once)) == once, "second serialization differs");
             return LawList{rt};
           }),
           where(seed, "workspace"));

  if (extra) r.record(guarded("extra", [&] { return extra(in); }), where(seed, "extra"));
  return r;
}

FuzzOutcome run_fuzz(const FuzzOptions& options, const ExtraSuite& extra) {
  check_profile(options.profile);
  const std::size_t n = options.count;
  std::vector<LawReport> per_seed(n);
  std::vector<json> per_obs(n, json::object());

  unsigned threads = options.threads ? options.threads : std::max(1u, std::thread::hardware_concurrency());
  threads = static_cast<unsigned>(std::min<std::size_t>(threads, std::max<std::size_t>(n, 1)));
  std::atomic<std::size_t> next{0};
  std::exception_ptr error;
  std::mutex error_mutex;
  auto worker = [&] {
    for (std::size_t i = next++; i < n; i = next++) {
      try {
        InstanceSet in = generate_instances(options.seed + i, options.profile);
        per_seed[i] = fuzz_one(in, per_obs[i], extra);
      } catch (...) {
        std::lock_guard lock(error_mutex);
        if (!error) error = std::current_exception();
      }
    }
  };
  std::vector<std::thread> pool;
  for (unsigned t = 0; t < threads; ++t) pool.emplace_back(worker);
  for (std::thread& t : pool) t.join();
  if (error) std::rethrow_exception(error);

  FuzzOutcome out;
  out.report.command = "fuzz";
  out.report.instance = {{"seed", options.seed}, {"count", options.count},
                         {"profile", format_profile(options.profile)}};
  json obs = json::object();
  for (std::size_t i = 0; i < n; ++i) {
    out.report.merge(per_seed[i]);
    for (const auto& [key, value] : per_obs[i].items()) bump(obs, key, value.get<std::int64_t>());
    if (!out.failing_seed && !per_seed[i].pass()) out.failing_seed = options.seed + i;
  }
  obs["seeds"] = n;
  out.report.observations = obs;
  if (out.failing_seed) {
    out.counterexample = counterexample_for(generate_instances(*out.failing_seed, options.profile));
    out.report.observations["failing_seed"] = *out.failing_seed;
  }
  return out;
}

}  // namespace pg
