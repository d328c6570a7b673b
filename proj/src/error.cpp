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

#include "plotgarden/error.hpp"

namespace pg {

std::string_view to_string(Errc code) {
  switch (code) {
    case Errc::NotAPoset: return "NotAPoset";
    case Errc::NotALattice: return "NotALattice";
    case Errc::FrameLawViolation: return "FrameLawViolation";
    case Errc::TargetElementUnknown: return "TargetElementUnknown";
    case Errc::ElementUnknown: return "ElementUnknown";
    case Errc::NotAFilter: return "NotAFilter";
    case Errc::NotATopology: return "NotATopology";
    case Errc::PointUnknown: return "PointUnknown";
    case Errc::NotContinuous: return "NotContinuous";
    case Errc::NodeUnknown: return "NodeUnknown";
    case Errc::DuplicateName: return "DuplicateName";
    case Errc::ValuationNotTotal: return "ValuationNotTotal";
    case Errc::ValuationNotSurjective: return "ValuationNotSurjective";
    case Errc::SquareViolation: return "SquareViolation";
    case Errc::NotLentile: return "NotLentile";
    case Errc::BedAxiomViolation: return "BedAxiomViolation";
    case Errc::CoveringNotFrameMorphism: return "CoveringNotFrameMorphism";
    case Errc::CoveringNotSurjective: return "CoveringNotSurjective";
    case Errc::NotAGardenMorphism: return "NotAGardenMorphism";
    case Errc::SizeLimit: return "SizeLimit";
    case Errc::PostconditionFailure: return "PostconditionFailure";
    case Errc::SyntaxError: return "SyntaxError";
    case Errc::UnresolvedReference: return "UnresolvedReference";
    case Errc::ValidationError: return "ValidationError";
    case Errc::ProfileUnsatisfiable: return "ProfileUnsatisfiable";
    case Errc::NotBoolean: return "NotBoolean";
    case Errc::UnknownCommand: return "UnknownCommand";
  }
  return "Unknown";
}

void fail(Errc code, const std::string& what) {
  throw Error(code, std::string(to_string(code)) + ": " + what);
}

}  // namespace pg
