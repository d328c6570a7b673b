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

#ifndef PLOTGARDEN_ERROR_HPP_
#define PLOTGARDEN_ERROR_HPP_

#include <stdexcept>
#include <string>
#include <string_view>

namespace pg {

/// Every failure the library reports carries one of these codes; the CLI
/// maps them onto exit statuses.
enum class Errc {
  NotAPoset,
  NotALattice,
  FrameLawViolation,
  TargetElementUnknown,
  ElementUnknown,
  NotAFilter,
  NotATopology,
  PointUnknown,
  NotContinuous,
  NodeUnknown,
  DuplicateName,
  ValuationNotTotal,
  ValuationNotSurjective,
  SquareViolation,
  NotLentile,
  BedAxiomViolation,
  CoveringNotFrameMorphism,
  CoveringNotSurjective,
  NotAGardenMorphism,
  SizeLimit,
  PostconditionFailure,
  SyntaxError,
  UnresolvedReference,
  ValidationError,
  ProfileUnsatisfiable,
  NotBoolean,
  UnknownCommand,
};

std::string_view to_string(Errc code);

class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& what) : std::runtime_error(what), code_(code) {}

  [[nodiscard]] Errc code() const noexcept { return code_; }

 private:
  Errc code_;
};

[[noreturn]] void fail(Errc code, const std::string& what);

}  // namespace pg

#endif  // PLOTGARDEN_ERROR_HPP_
