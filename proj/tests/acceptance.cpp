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

// Acceptance run: one PASS/FAIL line per criterion, with its runtime limit.
// Usage: acceptance <plotgarden-binary> <fixtures.ws>

#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "plotgarden/adjunction.hpp"
#include "plotgarden/generate.hpp"
#include "plotgarden/harvest.hpp"
#include "plotgarden/oracle.hpp"
#include "plotgarden/suites.hpp"
#include "plotgarden/workspace.hpp"

using namespace pg;

namespace {

struct Verdict {
  bool pass = true;
  std::string detail;

  void require(bool ok, const std::string& what) {
    if (!ok && pass) {
      pass = false;
      detail = what;
    }
  }
  void require(const LawList& laws, const std::string& where) {
    const LawCheck* bad = first_failure(laws);
    if (bad != nullptr) require(false, where + ": " + bad->id + " " + bad->witness);
  }
};

std::string argv_binary;
Workspace fixtures;

PointSet named(const FiniteSpace& s, std::initializer_list<const char*> names) {
  PointSet out;
  for (const char* n : names) out.insert(s.index(n));
  return out;
}

Verdict fixture_reproduction() {
  Verdict v;
  PlotPtr p = fixtures.plots.at("sierp");
  const FiniteSpace& s = *p->space;

  std::set<std::pair<std::string, std::string>> order;
  for (PointId a = 0; a < s.size(); ++a) {
    for (PointId b = 0; b < s.size(); ++b) {
      if (specializes(s, a, b)) order.emplace(s.name(a), s.name(b));
    }
  }
  const std::set<std::pair<std::string, std::string>> want{{"P", "P"}, {"Q", "Q"}, {"P", "Q"}};
  v.require(order == want, "specialization order");
  for (NodeId a = 0; a < p->size(); ++a) {
    for (NodeId b = 0; b < p->size(); ++b) {
      const bool related = a == b || p->structure->has_edge(a, b);
      v.require(related == specializes(s, p->valuation[a], p->valuation[b]), "order differs from reflexive transitions");
    }
  }

  Bed bed = lift_operators(*p);
  const ElemId empty = s.require_open(PointSet{});
  const ElemId q = s.require_open(named(s, {"Q"}));
  const ElemId all = s.require_open(s.all());
  v.require(bed.box[empty] == q && bed.box[q] == all && bed.box[all] == all, "box table");
  for (ElemId x : {empty, q, all}) v.require(bed.diamond[x] == empty, "diamond table");

  GardenPtr g = functor_G_object(*p);
  Harvest h = harvest(g);
  v.require(h.all.flowers.size() == 9, "candidate flowers: " + std::to_string(h.all.flowers.size()));

  const NodeId P = p->structure->index("P");
  const NodeId Q = p->structure->index("Q");
  const Flower eta_p = unit_flower(*p, P);
  const Flower eta_q = unit_flower(*p, Q);
  v.require(eta_p == Flower{s.index("P"), empty, Filter{q}}, "eta(P)");
  v.require(eta_q == Flower{s.index("Q"), all, Filter{empty}}, "eta(Q)");

  GeometricUnit u = geometric_unit_with_laws(p, h);
  v.require(u.report.laws, "geometric unit");
  std::size_t edges = 0;
  for (const Flower& a : u.flowers) {
    for (const Flower& b : u.flowers) edges += h.all.has_edge(*h.all.find(a), *h.all.find(b));
  }
  v.require(edges == 1 && h.all.has_edge(*h.all.find(eta_p), *h.all.find(eta_q)), "unit-image edges");
  if (v.pass) v.detail = "exact";
  return v;
}

bool homeomorphic_points(const PlotMap& m) {
  const FiniteSpace& s = *m.source->space;
  const FiniteSpace& t = *m.target->space;
  if (s.size() != t.size()) return false;
  std::vector<PointId> inverse(t.size(), t.size());
  for (PointId a = 0; a < s.size(); ++a) inverse[m.point_map[a]] = a;
  for (PointId b : inverse) {
    if (b == t.size()) return false;
  }
  return !continuity_witness(s, t, m.point_map) && !continuity_witness(t, s, inverse);
}

Verdict fixture_counterexamples() {
  Verdict v;
  PlotMapReport tight = classify_plot_map(fixtures.plot_maps.at("tight"));
  v.require(tight.is_plot_map && tight.up_condition && !tight.is_simulation, "tight classification");
  const PlotMap& homeo_map = fixtures.plot_maps.at("homeo");
  PlotMapReport homeo = classify_plot_map(homeo_map);
  v.require(homeo.is_plot_map && homeomorphic_points(homeo_map) && !homeo.minus_condition, "homeo classification");
  if (v.pass) v.detail = "exact";
  return v;
}

constexpr std::size_t kPlots = 200;
constexpr std::size_t kGardens = 200;
constexpr std::size_t kMaps = 100;

std::vector<PlotPtr> plots() {
  std::vector<PlotPtr> out;
  for (std::uint64_t seed = 1; out.size() < kPlots; ++seed) {
    Rng rng(seed);
    out.push_back(random_plot(rng, Profile{}));
  }
  return out;
}

struct Generated {
  std::vector<GardenPtr> gardens;
  std::vector<PlotMap> lentile_maps;
  std::vector<GardenMorphism> garden_morphisms;
};

const Generated& generated() {
  static const Generated g = [] {
    Generated out;
    for (std::uint64_t seed = 1;
         out.gardens.size() < kGardens || out.lentile_maps.size() < kMaps || out.garden_morphisms.size() < kMaps; ++seed) {
      InstanceSet in = generate_instances(seed, Profile{});
      for (const GardenPtr& garden : in.gardens) {
        if (out.gardens.size() < kGardens) out.gardens.push_back(garden);
      }
      for (const auto& named_map : in.lentile_maps) {
        if (out.lentile_maps.size() < kMaps) out.lentile_maps.push_back(named_map.second);
      }
      for (const auto& named_morphism : in.garden_morphisms) {
        if (out.garden_morphisms.size() < kMaps) out.garden_morphisms.push_back(named_morphism.second);
      }
    }
    return out;
  }();
  return g;
}

Verdict lift_suite() {
  Verdict v;
  std::size_t i = 0;
  for (const PlotPtr& p : plots()) {
    v.require(p->size() <= 6 && p->space->size() <= 5, "profile bounds");
    v.require(lift_with_laws(*p).laws, "plot " + std::to_string(i++));
  }
  v.detail = v.pass ? std::to_string(kPlots) + " plots" : v.detail;
  return v;
}

Verdict functor_suite() {
  Verdict v;
  const Generated& gen = generated();
  for (std::size_t i = 0; i < gen.lentile_maps.size(); ++i) {
    v.require(check_garden_morphism(functor_G_arrow(gen.lentile_maps[i])).laws, "G of lentile map " + std::to_string(i));
  }
  for (std::size_t i = 0; i < gen.garden_morphisms.size(); ++i) {
    const GardenMorphism& gm = gen.garden_morphisms[i];
    v.require(functor_F_arrow_with_laws(gm, harvest(gm.target), harvest(gm.source)).laws,
              "F of garden morphism " + std::to_string(i));
  }
  if (v.pass) v.detail = std::to_string(gen.lentile_maps.size()) + " maps, " + std::to_string(gen.garden_morphisms.size()) + " morphisms";
  return v;
}

Verdict adjunction_suite() {
  Verdict v;
  std::size_t i = 0;
  for (const PlotPtr& p : plots()) v.require(verify_idempotency(p), "plot " + std::to_string(i++));
  const Generated& gen = generated();
  for (std::size_t j = 0; j < gen.gardens.size(); ++j) v.require(verify_idempotency(gen.gardens[j]), "garden " + std::to_string(j));
  for (std::size_t j = 0; j < gen.lentile_maps.size(); ++j) {
    v.require(geometric_naturality(gen.lentile_maps[j]), "lentile map " + std::to_string(j));
  }
  for (std::size_t j = 0; j < gen.garden_morphisms.size(); ++j) {
    v.require(algebraic_naturality(gen.garden_morphisms[j]), "garden morphism " + std::to_string(j));
  }
  if (v.pass) v.detail = std::to_string(kPlots) + " plots, " + std::to_string(gen.gardens.size()) + " gardens";
  return v;
}

Verdict oracle_suite() {
  Verdict v;
  std::size_t compared = 0;
  auto check = [&](const GardenPtr& g, const std::string& where) {
    if (!oracle_sized(*g)) return;
    ++compared;
    v.require(oracle::compare_all(g), where);
    v.require({oracle::compare_harvest_order(g, compared)}, where);
  };
  std::size_t i = 0;
  for (const PlotPtr& p : plots()) {
    const std::string where = "plot " + std::to_string(i++);
    if (p->space->size() <= kOracleMaxPoints) v.require({oracle::compare_lift(*p), oracle::compare_lens(*p->space)}, where);
    check(functor_G_object(*p), where);
  }
  const Generated& gen = generated();
  for (std::size_t j = 0; j < gen.gardens.size(); ++j) check(gen.gardens[j], "garden " + std::to_string(j));
  if (v.pass) v.detail = std::to_string(compared) + " oracle-sized gardens";
  return v;
}

std::string slurp(const std::filesystem::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

Verdict determinism() {
  Verdict v;
  const auto dir = std::filesystem::temp_directory_path();
  std::vector<std::string> reports;
  for (int run = 0; run < 2; ++run) {
    const auto report = dir / ("plotgarden_acceptance_" + std::to_string(run) + ".json");
    const std::string cmd = "\"" + argv_binary + "\" --report \"" + report.string() + "\" fuzz --seed 7 --count 100 > /dev/null";
    v.require(std::system(cmd.c_str()) == 0, "fuzz run " + std::to_string(run) + " did not pass");
    reports.push_back(slurp(report));
    std::filesystem::remove(report);
  }
  v.require(!reports[0].empty() && reports[0] == reports[1], "reports differ");
  if (v.pass) v.detail = std::to_string(reports[0].size()) + " bytes, identical";
  return v;
}

struct Criterion {
  const char* name;
  double limit_seconds;
  std::function<Verdict()> run;
};

}  // namespace

int main(int argc, char** argv) {
  if (argc != 3) {
    std::cerr << "usage: acceptance <plotgarden-binary> <fixtures.ws>\n";
    return 2;
  }
  argv_binary = argv[1];
  fixtures = load_workspace(argv[2]);

  const std::vector<Criterion> criteria{
      {"fixture reproduction (Sierpinski)", 1, fixture_reproduction},
      {"fixture counterexamples (tight, homeo)", 1, fixture_counterexamples},
      {"lifted operators on 200 plots", 30, lift_suite},
      {"G and F arrows on 100 maps and 100 morphisms", 120, functor_suite},
      {"idempotency and naturality on 200 plots and 200 gardens", 300, adjunction_suite},
      {"oracle agreement (<=5 points, <=16 elements)", 120, oracle_suite},
      {"fuzz --seed 7 --count 100 is byte-reproducible", 120, determinism},
  };

  int failed = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    const Criterion& c = criteria[i];
    const auto start = std::chrono::steady_clock::now();
    Verdict v;
    try {
      v = c.run();
    } catch (const std::exception& e) {
      v.pass = false;
      v.detail = std::string("exception: ") + e.what();
    }
    const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    const bool in_time = seconds < c.limit_seconds;
    if (!in_time && v.pass) v.detail = "over time limit";
    const bool ok = v.pass && in_time;
    failed += !ok;
    std::printf("%s  %zu  %-58s %8.3f s (limit %g s)  %s\n", ok ? "PASS" : "FAIL", i + 1, c.name, seconds, c.limit_seconds,
                v.detail.c_str());
  }
  std::printf("%s: %d of %zu criteria failed\n", failed == 0 ? "accepted" : "not accepted", failed, criteria.size());
  return failed == 0 ? 0 : 1;
}
