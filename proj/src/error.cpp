// Copyright 2026 The qoc Authors
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

#include "qoc/error.hpp"

namespace qoc {

std::string_view errc_name(Errc code) {
  switch (code) {
    case Errc::NonScalarOutput: return "NonScalarOutput";
    case Errc::NonSquare: return "NonSquare";
    case Errc::NonFinite: return "NonFinite";
    case Errc::ShapeMismatch: return "ShapeMismatch";
    case Errc::InvalidGrid: return "InvalidGrid";
    case Errc::NcTooLarge: return "NcTooLarge";
    case Errc::NonHermitianSpectrum: return "NonHermitianSpectrum";
    case Errc::InvalidConfig: return "InvalidConfig";
    case Errc::InvalidLevels: return "InvalidLevels";
    case Errc::MissingDriveFrequency: return "MissingDriveFrequency";
    case Errc::AmbiguousAssignment: return "AmbiguousAssignment";
    case Errc::LengthMismatch: return "LengthMismatch";
    case Errc::NonFiniteGradient: return "NonFiniteGradient";
    case Errc::NonFiniteCost: return "NonFiniteCost";
    case Errc::SpeedLimitViolated: return "SpeedLimitViolated";
    case Errc::UnknownScenario: return "UnknownScenario";
    case Errc::UnknownMethod: return "UnknownMethod";
    case Errc::MissingField: return "MissingField";
    case Errc::TypeMismatch: return "TypeMismatch";
    case Errc::Io: return "Io";
  }
  return "Unknown";
}

}  // namespace qoc
