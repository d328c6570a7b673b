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

#ifndef PLOTGARDEN_REPORT_HPP_
#define PLOTGARDEN_REPORT_HPP_

#include <cstddef>
#include <string>
#include <vector>

#include <json.hpp>

#include "plotgarden/law.hpp"

namespace pg {

inline constexpr int kReportFormat = 1;

/// One law id, possibly checked many times (fuzzing folds all checks of an
/// id into one record).
struct LawRecord {
  std::string id;
  std::string statement;
  std::size_t checked = 0;
  std::size_t failures = 0;
  std::string witness;  // of the first failure
  std::string where;    // instance of the first failure, if known

  [[nodiscard]] bool pass() const { return failures == 0; }
};

struct LawReport {
  std::string command;
  nlohmann::json instance = nlohmann::json::object();
  std::vector<LawRecord> laws;  // in order of first appearance
  nlohmann::json observations = nlohmann::json::object();

  void record(const LawCheck& law, const std::string& where = {});
  void record(const LawList& laws, const std::string& where = {});
  void merge(const LawReport& other);
  [[nodiscard]] bool pass() const;
  [[nodiscard]] std::size_t failure_count() const;
};

nlohmann::json report_json(const LawReport& r);
std::string format_report_json(const LawReport& r);
/// Fixed-width table for the terminal.
std::string format_report_table(const LawReport& r);

}  // namespace pg

#endif  // PLOTGARDEN_REPORT_HPP_
