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

#include "plotgarden/workspace.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "plotgarden/error.hpp"

namespace pg {

using json = nlohmann::json;

namespace {

template <class Map, class Same>
std::string register_as(Map& m, const std::string& name, const typename Map::mapped_type& v, Same same,
                        const Map* also_taken = nullptr) {
  for (const auto& [k, existing] : m) {
    if (same(existing, v)) return k;
  }
  auto taken = [&](const std::string& n) { return m.count(n) > 0 || (also_taken && also_taken->count(n) > 0); };
  std::string n = name;
  for (int i = 2; taken(n); ++i) n = name + "_" + std::to_string(i);
  m.emplace(n, v);
  return n;
}

template <class T>
bool same_ptr(const T& a, const T& b) {
  return a == b;
}

bool same_bed(const Bed& a, const Bed& b) { return a.frame == b.frame && a.box == b.box && a.diamond == b.diamond; }

}  // namespace

std::string Workspace::add(const std::string& name, const SpacePtr& s) {
  return register_as(spaces, name, s, same_ptr<SpacePtr>);
}

std::string Workspace::add(const std::string& name, const StructurePtr& s) {
  return register_as(structures, name, s, same_ptr<StructurePtr>);
}

std::string Workspace::add(const std::string& name, const FramePtr& f) {
  return register_as(frames, name, f, same_ptr<FramePtr>);
}

std::string Workspace::add(const std::string& name, const Bed& b) {
  add(name, b.frame);
  return register_as(beds, name, b, same_bed);
}

std::string Workspace::add(const std::string& name, const PlotPtr& p) {
  add(name, p->structure);
  add(name, p->space);
  return register_as(plots, name, p, same_ptr<PlotPtr>);
}

std::string Workspace::add(const std::string& name, const GardenPtr& g) {
  add(name, g->bed);
  add(name, g->space);
  return register_as(gardens, name, g, same_ptr<GardenPtr>);
}

std::string Workspace::add(const std::string& name, const PlotMap& m) {
  add(name + "_source", m.source);
  add(name + "_target", m.target);
  auto same = [](const PlotMap& a, const PlotMap& b) {
    return a.source == b.source && a.target == b.target && a.node_map == b.node_map && a.point_map == b.point_map;
  };
  std::string n = name;
  for (int i = 2; garden_morphisms.count(n) > 0; ++i) n = name + "_" + std::to_string(i);
  return register_as(plot_maps, n, m, same);
}

std::string Workspace::add(const std::string& name, const GardenMorphism& m) {
  add(name + "_source", m.source);
  add(name + "_target", m.target);
  auto same = [](const GardenMorphism& a, const GardenMorphism& b) {
    return a.source == b.source && a.target == b.target && a.frame_map == b.frame_map && a.point_map == b.point_map;
  };
  std::string n = name;
  for (int i = 2; plot_maps.count(n) > 0; ++i) n = name + "_" + std::to_string(i);
  return register_as(garden_morphisms, n, m, same);
}

std::size_t Workspace::object_count() const {
  return spaces.size() + structures.size() + plots.size() + frames.size() + beds.size() + gardens.size() +
         plot_maps.size() + garden_morphisms.size();
}

namespace {

// ---- parsing ---------------------------------------------------------------

const json& field(const json& obj, const char* key, const std::string& path) {
  if (!obj.is_object()) fail(Errc::SyntaxError, path + ": expected an object");
  auto it = obj.find(key);
  if (it == obj.end()) fail(Errc::SyntaxError, path + ": missing '" + key + "'");
  return *it;
}

std::string text_of(const json& v, const std::string& path) {
  if (!v.is_string()) fail(Errc::SyntaxError, path + ": expected a string");
  return v.get<std::string>();
}

std::vector<std::string> strings(const json& v, const std::string& path) {
  if (!v.is_array()) fail(Errc::SyntaxError, path + ": expected an array of strings");
  std::vector<std::string> out;
  for (std::size_t i = 0; i < v.size(); ++i) out.push_back(text_of(v[i], path + "/" + std::to_string(i)));
  return out;
}

std::vector<std::pair<std::string, std::string>> pairs(const json& v, const std::string& path) {
  if (!v.is_array()) fail(Errc::SyntaxError, path + ": expected an array of pairs");
  std::vector<std::pair<std::string, std::string>> out;
  for (std::size_t i = 0; i < v.size(); ++i) {
    const std::string at = path + "/" + std::to_string(i);
    if (!v[i].is_array() || v[i].size() != 2) fail(Errc::SyntaxError, at + ": expected a 2-element array");
    out.emplace_back(text_of(v[i][0], at + "/0"), text_of(v[i][1], at + "/1"));
  }
  return out;
}

const json& section(const json& doc, const char* key) {
  static const json kEmpty = json::object();
  auto it = doc.find(key);
  if (it == doc.end()) return kEmpty;
  if (!it->is_object()) fail(Errc::SyntaxError, std::string("/") + key + ": expected an object");
  return *it;
}

template <class Map>
const typename Map::mapped_type& lookup(const Map& m, const std::string& name, const char* kind,
                                        const std::string& path) {
  auto it = m.find(name);
  if (it == m.end()) fail(Errc::UnresolvedReference, path + ": no " + std::string(kind) + " named '" + name + "'");
  return it->second;
}

// Runs a validator, rewrapping its errors as ValidationError naming the object.
template <class F>
auto validated(const std::string& what, F f) {
  try {
    return f();
  } catch (const Error& e) {
    if (e.code() == Errc::SyntaxError || e.code() == Errc::UnresolvedReference) throw;
    fail(Errc::ValidationError, what + ": " + e.what());
  }
}

// Total map from a source carrier to a target carrier given by name pairs.
template <class Src, class Tgt>
std::vector<std::uint32_t> total_map(const std::vector<std::pair<std::string, std::string>>& entries,
                                     std::size_t n, Src src_index, Tgt tgt_index, const char* what) {
  constexpr auto kUnset = static_cast<std::uint32_t>(-1);
  std::vector<std::uint32_t> out(n, kUnset);
  for (const auto& [a, b] : entries) {
    const std::uint32_t i = src_index(a);
    const std::uint32_t j = tgt_index(b);
    if (out[i] != kUnset && out[i] != j) fail(Errc::ValidationError, std::string(what) + " maps '" + a + "' twice");
    out[i] = j;
  }
  if (std::find(out.begin(), out.end(), kUnset) != out.end()) {
    fail(Errc::ValidationError, std::string(what) + " is not total");
  }
  return out;
}

std::size_t line_of(std::string_view text, std::size_t byte) {
  byte = std::min(byte, text.size());
  return 1 + static_cast<std::size_t>(std::count(text.begin(), text.begin() + static_cast<std::ptrdiff_t>(byte), '\n'));
}

}  // namespace

Workspace parse_workspace(std::string_view text) {
  json doc;
  try {
    doc = json::parse(text.begin(), text.end());
  } catch (const json::parse_error& e) {
    fail(Errc::SyntaxError, "line " + std::to_string(line_of(text, e.byte)) + ": " + e.what());
  }
  if (!doc.is_object()) fail(Errc::SyntaxError, "line 1: top level must be an object");
  if (auto v = doc.find("format_version"); v != doc.end() && *v != kWorkspaceFormat) {
    fail(Errc::SyntaxError, "/format_version: unsupported version " + v->dump());
  }

  Workspace ws;
  for (const auto& [name, v] : section(doc, "spaces").items()) {
    const std::string path = "/spaces/" + name;
    std::vector<std::string> points = strings(field(v, "points", path), path + "/points");
    const json& ov = field(v, "opens", path);
    if (!ov.is_array()) fail(Errc::SyntaxError, path + "/opens: expected an array");
    std::vector<std::vector<std::string>> opens;
    for (std::size_t i = 0; i < ov.size(); ++i) opens.push_back(strings(ov[i], path + "/opens/" + std::to_string(i)));
    ws.spaces.emplace(name, validated("space '" + name + "'", [&] { return validate_space(points, opens); }));
  }
  for (const auto& [name, v] : section(doc, "structures").items()) {
    const std::string path = "/structures/" + name;
    auto nodes = strings(field(v, "nodes", path), path + "/nodes");
    auto edges = pairs(field(v, "edges", path), path + "/edges");
    ws.structures.emplace(name, validated("structure '" + name + "'", [&] { return validate_structure(nodes, edges); }));
  }
  for (const auto& [name, v] : section(doc, "frames").items()) {
    const std::string path = "/frames/" + name;
    auto elements = strings(field(v, "elements", path), path + "/elements");
    auto leq = pairs(field(v, "leq", path), path + "/leq");
    ws.frames.emplace(name, validated("frame '" + name + "'", [&] { return validate_frame(elements, leq); }));
  }
  for (const auto& [name, v] : section(doc, "plots").items()) {
    const std::string path = "/plots/" + name;
    const StructurePtr& s = lookup(ws.structures, text_of(field(v, "structure", path), path), "structure", path);
    const SpacePtr& sp = lookup(ws.spaces, text_of(field(v, "space", path), path), "space", path);
    auto entries = pairs(field(v, "valuation", path), path + "/valuation");
    // Harvested plots may have unrooted points; they say so explicitly.
    bool partial = false;
    if (auto it = v.find("surjective"); it != v.end()) {
      if (!it->is_boolean()) fail(Errc::SyntaxError, path + "/surjective: expected a boolean");
      partial = !it->get<bool>();
    }
    ws.plots.emplace(name, validated("plot '" + name + "'", [&] {
      auto valuation = total_map(
          entries, s->size(), [&](const std::string& n) { return s->index(n); },
          [&](const std::string& p) { return sp->index(p); }, "valuation");
      return partial ? assemble_plot(s, sp, valuation) : validate_plot(s, sp, valuation);
    }));
  }
  for (const auto& [name, v] : section(doc, "beds").items()) {
    const std::string path = "/beds/" + name;
    const FramePtr& f = lookup(ws.frames, text_of(field(v, "frame", path), path), "frame", path);
    auto box = pairs(field(v, "box", path), path + "/box");
    auto diamond = pairs(field(v, "diamond", path), path + "/diamond");
    ws.beds.emplace(name, validated("bed '" + name + "'", [&] {
      auto idx = [&](const std::string& x) { return f->index(x); };
      Bed bed{f, total_map(box, f->size(), idx, idx, "box"), total_map(diamond, f->size(), idx, idx, "diamond")};
      validate_bed(bed);
      return bed;
    }));
  }
  for (const auto& [name, v] : section(doc, "gardens").items()) {
    const std::string path = "/gardens/" + name;
    const Bed& bed = lookup(ws.beds, text_of(field(v, "bed", path), path), "bed", path);
    const SpacePtr& sp = lookup(ws.spaces, text_of(field(v, "space", path), path), "space", path);
    const json& cv = field(v, "covering", path);
    if (!cv.is_array()) fail(Errc::SyntaxError, path + "/covering: expected an array");
    std::vector<std::pair<std::string, std::vector<std::string>>> cover;
    for (std::size_t i = 0; i < cv.size(); ++i) {
      const std::string at = path + "/covering/" + std::to_string(i);
      if (!cv[i].is_array() || cv[i].size() != 2) fail(Errc::SyntaxError, at + ": expected [element, [points]]");
      cover.emplace_back(text_of(cv[i][0], at + "/0"), strings(cv[i][1], at + "/1"));
    }
    ws.gardens.emplace(name, validated("garden '" + name + "'", [&] {
      std::vector<std::pair<std::string, std::string>> entries;
      std::vector<std::string> opens;
      for (const auto& [elem, pts] : cover) {
        PointSet s;
        for (const std::string& p : pts) s.insert(sp->index(p));
        entries.emplace_back(elem, std::to_string(sp->require_open(s)));
      }
      auto covering = total_map(
          entries, bed.frame->size(), [&](const std::string& x) { return bed.frame->index(x); },
          [](const std::string& id) { return static_cast<std::uint32_t>(std::stoul(id)); }, "covering");
      return validate_garden(bed, sp, covering);
    }));
  }
  for (const auto& [name, v] : section(doc, "maps").items()) {
    const std::string path = "/maps/" + name;
    const std::string kind = text_of(field(v, "kind", path), path + "/kind");
    const std::string src = text_of(field(v, "source", path), path + "/source");
    const std::string tgt = text_of(field(v, "target", path), path + "/target");
    auto points = pairs(field(v, "points", path), path + "/points");
    if (kind == "plot_map") {
      const PlotPtr& s = lookup(ws.plots, src, "plot", path);
      const PlotPtr& t = lookup(ws.plots, tgt, "plot", path);
      auto nodes = pairs(field(v, "nodes", path), path + "/nodes");
      ws.plot_maps.emplace(name, validated("plot map '" + name + "'", [&] {
        PlotMap m{s, t,
                  total_map(
                      nodes, s->size(), [&](const std::string& n) { return s->structure->index(n); },
                      [&](const std::string& n) { return t->structure->index(n); }, "node map"),
                  total_map(
                      points, s->space->size(), [&](const std::string& p) { return s->space->index(p); },
                      [&](const std::string& p) { return t->space->index(p); }, "point map")};
        classify_plot_map(m);  // throws on a failing square
        return m;
      }));
    } else if (kind == "garden_morphism") {
      const GardenPtr& s = lookup(ws.gardens, src, "garden", path);
      const GardenPtr& t = lookup(ws.gardens, tgt, "garden", path);
      auto elements = pairs(field(v, "elements", path), path + "/elements");
      ws.garden_morphisms.emplace(name, validated("garden morphism '" + name + "'", [&] {
        GardenMorphism m{s, t,
                         total_map(
                             elements, s->frame().size(), [&](const std::string& x) { return s->frame().index(x); },
                             [&](const std::string& x) { return t->frame().index(x); }, "frame map"),
                         total_map(
                             points, t->space->size(), [&](const std::string& p) { return t->space->index(p); },
                             [&](const std::string& p) { return s->space->index(p); }, "point map")};
        GardenMorphismReport r = check_garden_morphism(m);
        if (!r.ok) {
          const LawCheck* bad = first_failure(r.laws);
          fail(Errc::NotAGardenMorphism, bad->id + ": " + bad->witness);
        }
        return m;
      }));
    } else {
      fail(Errc::SyntaxError, path + "/kind: expected 'plot_map' or 'garden_morphism'");
    }
  }
  return ws;
}

namespace {

// ---- serializing -----------------------------------------------------------

template <class Map, class Key>
std::string name_of(const Map& m, const Key& key, const char* kind) {
  for (const auto& [name, v] : m) {
    if (v == key) return name;
  }
  fail(Errc::UnresolvedReference, std::string("a ") + kind + " used by the workspace is not registered");
}

json sorted_pairs(std::vector<std::pair<std::string, std::string>> v) {
  std::sort(v.begin(), v.end());
  json out = json::array();
  for (auto& [a, b] : v) out.push_back(json::array({a, b}));
  return out;
}

json members(const FiniteSpace& s, PointSet set) {
  std::vector<std::string> names;
  set.for_each([&](PointId p) { names.push_back(s.name(p)); });
  std::sort(names.begin(), names.end());
  return names;
}

}  // namespace

std::string serialize_workspace(const Workspace& ws) {
  json doc = json::object();
  doc["format_version"] = kWorkspaceFormat;
  json& spaces = doc["spaces"] = json::object();
  for (const auto& [name, s] : ws.spaces) {
    std::vector<json> opens;
    for (PointSet o : s->opens()) opens.push_back(members(*s, o));
    std::sort(opens.begin(), opens.end());
    spaces[name] = {{"points", s->names()}, {"opens", opens}};
  }
  json& structures = doc["structures"] = json::object();
  for (const auto& [name, s] : ws.structures) {
    std::vector<std::pair<std::string, std::string>> edges;
    for (const auto& [a, b] : s->edges()) edges.emplace_back(s->name(a), s->name(b));
    structures[name] = {{"nodes", s->names()}, {"edges", sorted_pairs(edges)}};
  }
  json& frames = doc["frames"] = json::object();
  for (const auto& [name, f] : ws.frames) {
    std::vector<std::pair<std::string, std::string>> leq;
    for (ElemId a = 0; a < f->size(); ++a) {
      for (ElemId b = 0; b < f->size(); ++b) {
        if (f->leq(a, b)) leq.emplace_back(f->name(a), f->name(b));
      }
    }
    frames[name] = {{"elements", f->names()}, {"leq", sorted_pairs(leq)}};
  }
  json& plots = doc["plots"] = json::object();
  for (const auto& [name, p] : ws.plots) {
    std::vector<std::pair<std::string, std::string>> val;
    for (NodeId n = 0; n < p->size(); ++n) val.emplace_back(p->structure->name(n), p->space->name(p->valuation[n]));
    plots[name] = {{"structure", name_of(ws.structures, p->structure, "structure")},
                   {"space", name_of(ws.spaces, p->space, "space")},
                   {"valuation", sorted_pairs(val)}};
    if (!p->surjective) plots[name]["surjective"] = false;
  }
  json& beds = doc["beds"] = json::object();
  auto bed_json = [&](const Bed& b) {
    std::vector<std::pair<std::string, std::string>> box, dia;
    for (ElemId x = 0; x < b.frame->size(); ++x) {
      box.emplace_back(b.frame->name(x), b.frame->name(b.box[x]));
      dia.emplace_back(b.frame->name(x), b.frame->name(b.diamond[x]));
    }
    return json{{"frame", name_of(ws.frames, b.frame, "frame")}, {"box", sorted_pairs(box)}, {"diamond", sorted_pairs(dia)}};
  };
  for (const auto& [name, b] : ws.beds) beds[name] = bed_json(b);
  json& gardens = doc["gardens"] = json::object();
  for (const auto& [name, g] : ws.gardens) {
    std::string bed_name;
    for (const auto& [bn, b] : ws.beds) {
      if (same_bed(b, g->bed)) bed_name = bn;
    }
    if (bed_name.empty()) fail(Errc::UnresolvedReference, "garden '" + name + "' has an unregistered bed");
    std::vector<json> cover;
    for (ElemId x = 0; x < g->frame().size(); ++x) {
      cover.push_back(json::array({g->frame().name(x), members(*g->space, g->cover(x))}));
    }
    std::sort(cover.begin(), cover.end());
    gardens[name] = {{"bed", bed_name}, {"space", name_of(ws.spaces, g->space, "space")}, {"covering", cover}};
  }
  json& maps = doc["maps"] = json::object();
  for (const auto& [name, m] : ws.plot_maps) {
    std::vector<std::pair<std::string, std::string>> nodes, points;
    for (NodeId n = 0; n < m.node_map.size(); ++n) {
      nodes.emplace_back(m.source->structure->name(n), m.target->structure->name(m.node_map[n]));
    }
    for (PointId p = 0; p < m.point_map.size(); ++p) {
      points.emplace_back(m.source->space->name(p), m.target->space->name(m.point_map[p]));
    }
    maps[name] = {{"kind", "plot_map"},
                  {"source", name_of(ws.plots, m.source, "plot")},
                  {"target", name_of(ws.plots, m.target, "plot")},
                  {"nodes", sorted_pairs(nodes)},
                  {"points", sorted_pairs(points)}};
  }
  for (const auto& [name, m] : ws.garden_morphisms) {
    std::vector<std::pair<std::string, std::string>> elements, points;
    for (ElemId x = 0; x < m.frame_map.size(); ++x) {
      elements.emplace_back(m.source->frame().name(x), m.target->frame().name(m.frame_map[x]));
    }
    for (PointId p = 0; p < m.point_map.size(); ++p) {
      points.emplace_back(m.target->space->name(p), m.source->space->name(m.point_map[p]));
    }
    maps[name] = {{"kind", "garden_morphism"},
                  {"source", name_of(ws.gardens, m.source, "garden")},
                  {"target", name_of(ws.gardens, m.target, "garden")},
                  {"elements", sorted_pairs(elements)},
                  {"points", sorted_pairs(points)}};
  }
  return doc.dump(2) + "\n";
}

Workspace load_workspace(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) fail(Errc::ValidationError, "cannot read '" + path.string() + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_workspace(buf.str());
}

void save_workspace(const Workspace& ws, const std::filesystem::path& path) {
  const std::string text = serialize_workspace(ws);
  std::ofstream out(path, std::ios::binary);
  if (!out) fail(Errc::ValidationError, "cannot write '" + path.string() + "'");
  out << text;
}

ObjectRef parse_ref(std::string_view text) {
  const std::size_t hash = text.rfind('#');
  if (hash == std::string_view::npos || hash == 0 || hash + 1 == text.size()) {
    fail(Errc::ValidationError, "object reference '" + std::string(text) + "' must look like file.ws#name");
  }
  return ObjectRef{std::string(text.substr(0, hash)), std::string(text.substr(hash + 1))};
}

Object resolve(const Workspace& ws, const std::string& name) {
  if (auto it = ws.plot_maps.find(name); it != ws.plot_maps.end()) return it->second;
  if (auto it = ws.garden_morphisms.find(name); it != ws.garden_morphisms.end()) return it->second;
  if (auto it = ws.plots.find(name); it != ws.plots.end()) return it->second;
  if (auto it = ws.gardens.find(name); it != ws.gardens.end()) return it->second;
  if (auto it = ws.beds.find(name); it != ws.beds.end()) return it->second;
  if (auto it = ws.frames.find(name); it != ws.frames.end()) return it->second;
  if (auto it = ws.structures.find(name); it != ws.structures.end()) return it->second;
  if (auto it = ws.spaces.find(name); it != ws.spaces.end()) return it->second;
  fail(Errc::UnresolvedReference, "no object named '" + name + "'");
}

}  // namespace pg
