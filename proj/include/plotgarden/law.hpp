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

#ifndef PLOTGARDEN_LAW_HPP_
#define PLOTGARDEN_LAW_HPP_

#include <algorithm>
#include <string>
#include <utility>
#include <vector>

namespace pg {

/// Outcome of checking one named statement on one instance.  Only the first
/// counterexample is kept as the witness.
struct LawCheck {
  std::string id;
  std::string statement;
  bool pass = true;
  std::string witness;

  LawCheck(std::string law_id, std::string text)
      : id(std::move(law_id)), statement(std::move(text)) {}

  void refute(const std::string& why) {
    if (pass) witness = why;
    pass = false;
  }
  void require(bool holds, const std::string& why) {
    if (!holds) refute(why);
  }
};

using LawList = std::vector<LawCheck>;

inline bool all_pass(const LawList& laws) {
  return std::all_of(laws.begin(), laws.end(), [](const LawCheck& l) { return l.pass; });
}

inline void append(LawList& into, LawList from) {
  into.insert(into.end(), std::make_move_iterator(from.begin()), std::make_move_iterator(from.end()));
}

/// Prefix every id with "scope/" so laws checked on different objects stay
/// distinguishable in one list.
inline LawList scoped(LawList laws, const std::string& scope) {
  for (LawCheck& l : laws) l.id = scope + "/" + l.id;
  return laws;
}

/// First failing law, or nullptr.
inline const LawCheck* first_failure(const LawList& laws) {
  auto it = std::find_if(laws.begin(), laws.end(), [](const LawCheck& l) { return !l.pass; });
  return it == laws.end() ? nullptr : &*it;
}

}  // namespace pg

#endif  // PLOTGARDEN_LAW_HPP_
