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

#pragma once

#include <numbers>

// Internal unit system: time in ns, Hamiltonians in rad/ns (angular GHz).
// Pulse amplitudes are carried in MHz (the physical drive is 2*pi*value MHz).
namespace qoc::units {

inline constexpr double kTwoPi = 2.0 * std::numbers::pi;

// 2*pi * 1 GHz expressed in rad/ns.
inline constexpr double kGHz = kTwoPi;

// 2*pi * 1 MHz expressed in rad/ns; converts pulse amplitudes to Hamiltonian units.
inline constexpr double kMHz = kTwoPi * 1e-3;

}  // namespace qoc::units
