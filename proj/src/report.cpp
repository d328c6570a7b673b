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

#include "plotgarden/report.hpp"

#include <algorithm>
#include <sstream>

namespace pg {

using json = nlohmann::json;

void LawReport::record(const LawCheck& law, const std::string& where) {
  auto it = std::find_if(laws.begin(), laws.end(), [&](const LawRecord& r) { return r.id == law.id; });
  if (it == laws.end()) {
    laws.push_back(LawRecord{law.id, law.statement});
    it = laws.end() - 1;
  }
  ++it->checked;
  if (!law.pass) {
    if (it->failures == 0) {
      it->witness = law.witness;
      it->where = where;
    }
    ++it->failures;
  }
}

void LawReport::record(const LawList& list, const std::string& where) {
  for (const LawCheck& l : list) record(l, where);
}

void LawReport::merge(const LawReport& other) {
  for (const LawRecord& o : other.laws) {
    auto it = std::find_if(laws.begin(), laws.end(), [&](const LawRecord& r) { return r.id == o.id; });
    if (it == laws.end()) {
      laws.push_back(o);
      continue;
    }
    if (it->failures == 0 && o.failures > 0) {
      it->witness = o.witness;
      it->where = o.where;
    }
    it->checked += o.checked;
    it->failures += o.failures;
  }
}

bool LawReport::pass() const {
  return std::all_of(laws.begin(), laws.end(), [](const LawRecord& r) { return r.pass(); });
}

std::size_t LawReport::failure_count() const {
  std::size_t n = 0;
  for (const LawRecord& r : laws) n += r.failures;
  return n;
}

json report_json(const LawReport& r) {
  json laws = json::array();
  for (const LawRecord& l : r.laws) {
    json e = {{"id", l.id}, {"statement", l.statement}, {"pass", l.pass()}, {"checked", l.checked},
              {"failures", l.failures}};
    if (!l.pass()) {
      e["witness"] = l.witness;
      if (!l.where.empty()) e["where"] = l.where;
    }
    laws.push_back(std::move(e));
  }
  return json{{"format_version", kReportFormat},
              {"command", r.command},
              {"instance", r.instance},
              {"laws", laws},
              {"observations", r.observations},
              {"pass", r.pass()}};
}

std::string format_report_json(const LawReport& r) { return report_json(r).dump(2) + "\n"; }

std::string format_report_table(const LawReport& r) {
  std::size_t width = 4;
  for (const LawRecord& l : r.laws) width = std::max(width, l.id.size());
  std::ostringstream out;
  out << r.command << "  " << r.instance.dump() << "\n";
  for (const LawRecord& l : r.laws) {
    std::string line = "  " + std::string(l.pass() ? "pass" : "FAIL") + "  " + l.id + std::string(width - l.id.size(), ' ');
    if (l.checked != 1) line += "  " + std::to_string(l.checked - l.failures) + "/" + std::to_string(l.checked);
    if (!l.pass()) {
      line += "  " + l.witness;
      if (!l.where.empty()) line += "  [" + l.where + "]";
    }
    line.erase(line.find_last_not_of(' ') + 1);
    out << line << "\n";
  }
  for (const auto& [key, value] : r.observations.items()) {
    out << "  " << key << " = " << (value.is_string() ? value.get<std::string>() : value.dump()) << "\n";
  }
  out << (r.pass() ? "all laws pass" : std::to_string(r.failure_count()) + " law check(s) failed") << " ("
      << r.laws.size() << " laws)\n";
  return out.str();
}

}  // namespace pg
