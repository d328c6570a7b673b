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

#include "plotgarden/cli.hpp"

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <optional>
#include <sstream>

#include <CLI11.hpp>

#include "plotgarden/adjunction.hpp"
#include "plotgarden/error.hpp"
#include "plotgarden/fuzz.hpp"
#include "plotgarden/harvest.hpp"
#include "plotgarden/oracle.hpp"
#include "plotgarden/report.hpp"
#include "plotgarden/suites.hpp"
#include "plotgarden/workspace.hpp"

namespace pg {

using json = nlohmann::json;

namespace {

struct Outcome {
  LawReport report;
  std::string details;  // printed above the law table
  std::optional<Workspace> counterexample;
};

struct Loaded {
  Workspace ws;
  std::string name;
  Object object;
};

Loaded load_ref(const std::string& text) {
  ObjectRef ref = parse_ref(text);
  Workspace ws = load_workspace(ref.file);
  Object obj = resolve(ws, ref.name);
  return Loaded{std::move(ws), ref.name, std::move(obj)};
}

json describe(const Loaded& l, const std::string& ref) {
  json d = {{"object", ref}};
  std::visit(
      [&](const auto& o) {
        using T = std::decay_t<decltype(o)>;
        if constexpr (std::is_same_v<T, PlotPtr>) {
          d["kind"] = "plot";
          d["nodes"] = o->size();
          d["points"] = o->space->size();
        } else if constexpr (std::is_same_v<T, GardenPtr>) {
          d["kind"] = "garden";
          d["elements"] = o->frame().size();
          d["points"] = o->space->size();
        } else if constexpr (std::is_same_v<T, PlotMap>) {
          d["kind"] = "plot_map";
          d["source_nodes"] = o.source->size();
          d["target_nodes"] = o.target->size();
        } else if constexpr (std::is_same_v<T, GardenMorphism>) {
          d["kind"] = "garden_morphism";
          d["source_elements"] = o.source->frame().size();
          d["target_elements"] = o.target->frame().size();
        } else if constexpr (std::is_same_v<T, SpacePtr>) {
          d["kind"] = "space";
        } else if constexpr (std::is_same_v<T, StructurePtr>) {
          d["kind"] = "structure";
        } else if constexpr (std::is_same_v<T, FramePtr>) {
          d["kind"] = "frame";
        } else {
          d["kind"] = "bed";
        }
      },
      l.object);
  return d;
}

Workspace just(const std::string& name, const Object& obj) {
  Workspace ws;
  std::visit([&](const auto& o) { ws.add(name, o); }, obj);
  return ws;
}

[[noreturn]] void wrong_kind(const std::string& command, const std::string& wanted) {
  fail(Errc::ValidationError, command + " needs " + wanted);
}

PlotPtr want_plot(const Loaded& l, const std::string& command) {
  if (const auto* p = std::get_if<PlotPtr>(&l.object)) return *p;
  wrong_kind(command, "a plot");
}

// A plot stands for the garden G of it.
GardenPtr want_garden(const Loaded& l, const std::string& command) {
  if (const auto* g = std::get_if<GardenPtr>(&l.object)) return *g;
  if (const auto* p = std::get_if<PlotPtr>(&l.object)) return functor_G_object(**p);
  wrong_kind(command, "a garden or a plot");
}

std::string bed_table(const Bed& bed, const char* label, const std::vector<ElemId>& table) {
  std::ostringstream out;
  std::size_t width = 0;
  for (ElemId x = 0; x < bed.frame->size(); ++x) width = std::max(width, bed.frame->name(x).size());
  for (ElemId x = 0; x < bed.frame->size(); ++x) {
    out << (x == 0 ? label : "") << std::string(x == 0 ? 0 : std::string_view(label).size(), ' ') << "  "
        << bed.frame->name(x) << std::string(width - bed.frame->name(x).size(), ' ') << " -> "
        << bed.frame->name(table[x]) << "\n";
  }
  return out.str();
}

json table_json(const Bed& bed, const std::vector<ElemId>& table) {
  json t = json::object();
  for (ElemId x = 0; x < bed.frame->size(); ++x) t[bed.frame->name(x)] = bed.frame->name(table[x]);
  return t;
}

json flower_names(const Garden& g, const std::vector<Flower>& flowers) {
  json out = json::array();
  for (const Flower& f : flowers) out.push_back(flower_name(g, f));
  return out;
}

// ---- commands --------------------------------------------------------------

Outcome cmd_validate(const std::string& file) {
  Outcome o;
  Workspace ws = load_workspace(file);
  o.report.command = "validate";
  o.report.instance = {{"file", file}};
  o.report.observations = {{"spaces", ws.spaces.size()},     {"structures", ws.structures.size()},
                           {"plots", ws.plots.size()},       {"frames", ws.frames.size()},
                           {"beds", ws.beds.size()},         {"gardens", ws.gardens.size()},
                           {"plot_maps", ws.plot_maps.size()}, {"garden_morphisms", ws.garden_morphisms.size()}};
  LawCheck rt("workspace/round_trip", "serializing, parsing and serializing again gives the same text");
  const std::string once = serialize_workspace(ws);
  rt.require(serialize_workspace(parse_workspace(once)) == once, "second serialization differs");
  o.report.record(rt);
  o.details = "valid workspace with " + std::to_string(ws.object_count()) + " objects\n";
  return o;
}

Outcome cmd_lift(const Loaded& l) {
  Outcome o;
  PlotPtr p = want_plot(l, "lift");
  Lift lift = lift_with_laws(*p);
  LawList laws = lift.laws;
  if (!p->surjective) {
    std::erase_if(laws, [](const LawCheck& c) { return c.id == "lift.diamond_bottom"; });
  }
  o.report.record(laws);
  o.report.observations = {{"box", table_json(lift.bed, lift.bed.box)},
                           {"diamond", table_json(lift.bed, lift.bed.diamond)}};
  o.details = bed_table(lift.bed, "box    ", lift.bed.box) + bed_table(lift.bed, "diamond", lift.bed.diamond);
  return o;
}

Outcome cmd_harvest(const Loaded& l) {
  Outcome o;
  GardenPtr g = want_garden(l, "harvest");
  Harvest h = harvest(g);
  std::string witness;
  LawCheck healthy("harvest.healthy", "the surviving flowers form a healthy set");
  healthy.require(is_healthy(*g, h.all, h.survivors, &witness), witness);
  o.report.record(healthy);
  json unrooted = json::array();
  h.unrooted.for_each([&](PointId p) { unrooted.push_back(g->space->name(p)); });
  o.report.observations = {{"candidate_flowers", h.all.flowers.size()},
                           {"survivors", flower_names(*g, h.survivors)},
                           {"harvest_edges", h.plot->structure->edges().size()},
                           {"unrooted", unrooted},
                           {"surjective", h.unrooted.empty()},
                           {"improper_bloom", h.uses_improper_filter}};
  std::ostringstream d;
  d << h.all.flowers.size() << " flowers, " << h.survivors.size() << " survive\n";
  for (const Flower& f : h.survivors) d << "  " << flower_name(*g, f) << "\n";
  if (!h.unrooted.empty()) d << "unrooted points: " << g->space->format(h.unrooted) << "\n";
  o.details = d.str();
  return o;
}

bool homeomorphism(const PlotMap& m) {
  const FiniteSpace& s = *m.source->space;
  const FiniteSpace& t = *m.target->space;
  if (s.size() != t.size() || s.opens().size() != t.opens().size()) return false;
  std::vector<PointId> sorted = m.point_map;
  std::sort(sorted.begin(), sorted.end());
  sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
  // A continuous bijection between finite spaces with equally many opens
  // pulls opens back injectively, hence onto.
  return sorted.size() == s.size() && !continuity_witness(s, t, m.point_map).has_value();
}

Outcome cmd_check_map(const Loaded& l) {
  Outcome o;
  std::ostringstream d;
  if (const auto* m = std::get_if<PlotMap>(&l.object)) {
    PlotMapReport r = classify_plot_map(*m);
    LawCheck lemma("classify.lemma_consistent", "lentile iff the (up) and (minus) conditions both hold");
    lemma.require(r.lemma_consistent, "direct lens test disagrees with the two conditions");
    o.report.record(lemma);
    json w = json::object();
    for (const auto& [k, v] : r.witnesses) w[k] = v;
    o.report.observations = {{"transition_morphism", r.transition_morphism},
                             {"continuous", r.continuous},
                             {"square_commutes", r.square_commutes},
                             {"is_plot_map", r.is_plot_map},
                             {"up_condition", r.up_condition},
                             {"minus_condition", r.minus_condition},
                             {"is_lentile", r.is_lentile},
                             {"is_simulation", r.is_simulation},
                             {"homeomorphism", homeomorphism(*m)},
                             {"witnesses", w}};
    auto yes = [](bool b) { return b ? "yes" : "no"; };
    d << "plot map: " << yes(r.is_plot_map) << "  (up): " << yes(r.up_condition)
      << "  (minus): " << yes(r.minus_condition) << "  lentile: " << yes(r.is_lentile)
      << "  simulation: " << yes(r.is_simulation) << "  homeomorphism: " << yes(homeomorphism(*m)) << "\n";
    for (const auto& [k, v] : r.witnesses) d << "  " << k << ": " << v << "\n";
  } else if (const auto* gm = std::get_if<GardenMorphism>(&l.object)) {
    GardenMorphismReport r = check_garden_morphism(*gm);
    o.report.record(r.laws);
    o.report.observations = {{"strict_box", r.strict_box}, {"strict_diamond", r.strict_diamond}};
    d << "garden morphism: " << (r.ok ? "yes" : "no") << "  strict box: " << (r.strict_box ? "yes" : "no")
      << "  strict diamond: " << (r.strict_diamond ? "yes" : "no") << "\n";
  } else {
    wrong_kind("check-map", "a plot map or a garden morphism");
  }
  o.details = d.str();
  return o;
}

Outcome cmd_unit(const Loaded& l, bool algebraic) {
  Outcome o;
  std::ostringstream d;
  if (algebraic) {
    GardenPtr g = want_garden(l, "unit --algebraic");
    AlgebraicUnit u = algebraic_unit_with_laws(g);
    o.report.record(u.report.laws);
    json points = json::object();
    for (PointId p = 0; p < u.morphism.point_map.size(); ++p) {
      points[u.furnished->space->name(p)] = g->space->name(u.morphism.point_map[p]);
    }
    o.report.observations = {{"kind", "algebraic"}, {"frame_map", u.morphism.frame_map}, {"point_map", points}};
    d << "unit into G(F g): " << u.harvest.survivors.size() << " harvested flowers\n";
  } else {
    PlotPtr p = want_plot(l, "unit --geometric");
    GardenPtr g = functor_G_object(*p);
    Harvest h = harvest(g);
    GeometricUnit u = geometric_unit_with_laws(p, h);
    o.report.record(u.report.laws);
    json images = json::object();
    for (NodeId n = 0; n < p->size(); ++n) {
      images[p->structure->name(n)] = flower_name(*g, u.flowers[n]);
      d << "  " << p->structure->name(n) << " -> " << flower_name(*g, u.flowers[n]) << "\n";
    }
    json edges = json::array();
    for (const auto& [a, b] : p->structure->edges()) {
      edges.push_back(json::array({flower_name(*g, u.flowers[a]), flower_name(*g, u.flowers[b])}));
    }
    o.report.observations = {{"kind", "geometric"}, {"images", images}, {"image_edges", edges}};
  }
  o.details = d.str();
  return o;
}

Outcome cmd_verify(const Loaded& l) {
  Outcome o;
  std::visit(
      [&](const auto& obj) {
        using T = std::decay_t<decltype(obj)>;
        if constexpr (std::is_same_v<T, PlotPtr>) {
          o.report.record(plot_suite(obj));
          o.report.record(garden_suite(functor_G_object(*obj)));
        } else if constexpr (std::is_same_v<T, GardenPtr>) {
          o.report.record(garden_suite(obj));
        } else if constexpr (std::is_same_v<T, PlotMap>) {
          PlotMapReport r = classify_plot_map(obj);
          o.report.record(plot_map_suite(obj));
          if (r.is_plot_map && r.is_lentile) o.report.record(lentile_map_suite(obj));
          o.report.observations["is_lentile"] = r.is_lentile;
        } else if constexpr (std::is_same_v<T, GardenMorphism>) {
          o.report.record(garden_morphism_suite(obj));
        } else {
          wrong_kind("verify", "a plot, garden, plot map or garden morphism");
        }
      },
      l.object);
  return o;
}

// Brute-force recomputation for oracle.* ids; any other id replays that law
// from the object's verify suite.
Outcome cmd_oracle(const std::string& law, const Loaded& l) {
  Outcome o;
  std::string id = law;
  if (auto slash = id.rfind('/'); slash != std::string::npos && id.compare(slash + 1, 7, "oracle.") == 0) {
    id = id.substr(slash + 1);
  }
  LawList laws;
  if (id.starts_with("oracle.")) {
    GardenPtr g;
    if (const auto* p = std::get_if<PlotPtr>(&l.object)) {
      if (id == "oracle.lift") laws.push_back(oracle::compare_lift(**p));
      g = functor_G_object(**p);
    } else if (const auto* gp = std::get_if<GardenPtr>(&l.object)) {
      g = *gp;
    } else {
      wrong_kind("oracle", "a plot or a garden");
    }
    if (id == "oracle.filters") {
      if (g->frame().size() > oracle::kMaxSubsetFrame) fail(Errc::SizeLimit, "frame too large for the subset oracle");
      laws.push_back(oracle::compare_filters(g->frame()));
    } else if (id == "oracle.lens") {
      laws.push_back(oracle::compare_lens(*g->space));
    } else if (id == "oracle.flowers") {
      laws.push_back(oracle::compare_flowers(*g));
    } else if (id == "oracle.harvest") {
      laws.push_back(oracle::compare_harvest(g));
    } else if (id == "oracle.harvest_order") {
      laws.push_back(oracle::compare_harvest_order(g, g->frame().size() * 131 + g->space->size()));
    } else if (id != "oracle.lift" || laws.empty()) {
      fail(Errc::UnknownCommand, "unknown oracle '" + law + "'");
    }
  } else {
    Outcome all = cmd_verify(l);
    for (const LawRecord& r : all.report.laws) {
      if (r.id == law) o.report.laws.push_back(r);
    }
    if (o.report.laws.empty()) fail(Errc::UnknownCommand, "law '" + law + "' is not checked on this object");
    return o;
  }
  o.report.record(laws);
  return o;
}

std::filesystem::path counterexample_path(const std::string& report_path, const std::string& fallback) {
  if (report_path.empty()) return fallback;
  std::filesystem::path p(report_path);
  p.replace_extension();
  return p.string() + ".counterexample.ws";
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Check plots, gardens and the laws relating them."};
  app.require_subcommand(1);
  app.fallthrough();
  std::string report_path;
  app.add_option("--report", report_path, "Write the JSON law report to this path");

  std::string file, ref, law;
  auto* validate = app.add_subcommand("validate", "Load and validate a workspace file");
  validate->add_option("file", file)->required();
  auto* lift = app.add_subcommand("lift", "Lifted box/diamond operators of a plot");
  lift->add_option("object", ref, "file.ws#name")->required();
  auto* harv = app.add_subcommand("harvest", "Healthy flowers of a garden (or of G of a plot)");
  harv->add_option("object", ref, "file.ws#name")->required();
  auto* check = app.add_subcommand("check-map", "Classify a plot map or check a garden morphism");
  check->add_option("object", ref, "file.ws#name")->required();
  auto* unit = app.add_subcommand("unit", "Algebraic or geometric unit");
  bool alg = false, geo = false;
  auto* alg_flag = unit->add_flag("--algebraic", alg, "Unit of a garden");
  unit->add_flag("--geometric", geo, "Unit of a plot")->excludes(alg_flag);
  unit->add_option("object", ref, "file.ws#name")->required();
  auto* verify = app.add_subcommand("verify", "Run every law applicable to an object");
  verify->add_option("object", ref, "file.ws#name")->required();
  auto* fuzz = app.add_subcommand("fuzz", "Check all laws on generated instances");
  FuzzOptions fo;
  std::string profile;
  fuzz->add_option("--seed", fo.seed, "First seed")->required();
  fuzz->add_option("--count", fo.count, "Number of seeds")->required();
  fuzz->add_option("--profile", profile, "Generator bounds, e.g. nodes=1-6,points=1-5,edge_density=0.35");
  fuzz->add_option("--threads", fo.threads, "Worker threads (0: all cores)");
  auto* orc = app.add_subcommand("oracle", "Recompute one law by brute force (or replay it)");
  orc->add_option("law", law, "law id")->required();
  orc->add_option("object", ref, "file.ws#name")->required();

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitPass : kExitInvalid;
  }

  Outcome o;
  std::string fallback = "counterexample.ws";
  try {
    if (*validate) {
      o = cmd_validate(file);
    } else if (*fuzz) {
      if (!profile.empty()) fo.profile = parse_profile(profile);
      FuzzOutcome f = run_fuzz(fo);
      o.report = std::move(f.report);
      o.counterexample = std::move(f.counterexample);
      if (f.failing_seed) fallback = "fuzz-seed" + std::to_string(*f.failing_seed) + ".counterexample.ws";
    } else {
      Loaded l = load_ref(ref);
      if (*lift) o = cmd_lift(l);
      if (*harv) o = cmd_harvest(l);
      if (*check) o = cmd_check_map(l);
      if (*unit) {
        if (!alg && !geo) fail(Errc::UnknownCommand, "unit needs --algebraic or --geometric");
        o = cmd_unit(l, alg);
      }
      if (*verify) o = cmd_verify(l);
      if (*orc) o = cmd_oracle(law, l);
      o.report.instance = describe(l, ref);
      if (!o.report.pass()) o.counterexample = just(l.name, l.object);
    }
    o.report.command = app.get_subcommands().front()->get_name();
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return e.code() == Errc::PostconditionFailure ? kExitCounterexample : kExitInvalid;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kExitInvalid;
  }

  out << o.details << format_report_table(o.report);
  if (!report_path.empty()) {
    std::ofstream f(report_path, std::ios::binary);
    if (!f) {
      err << "error: cannot write '" << report_path << "'\n";
      return kExitInvalid;
    }
    f << format_report_json(o.report);
  }
  if (!o.report.pass()) {
    if (o.counterexample) {
      const std::filesystem::path path = counterexample_path(report_path, fallback);
      save_workspace(*o.counterexample, path);
      err << "counterexample written to " << path.string() << "\n";
    }
    return kExitCounterexample;
  }
  return kExitPass;
}

}  // namespace pg
