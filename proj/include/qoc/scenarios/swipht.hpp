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

#include "qoc/pulse/pulse.hpp"

// Analytic CNOT seed pulse. chi(t) = A t^4 (T - t)^4 / T^8 + pi/4 and
// Omega = chi'' / (2 r) - r cot(2 chi), r = sqrt(delta^2 / 4 - chi'^2).
// delta and Omega are in rad/ns, t and T in ns.
namespace qoc::scenarios {

double swipht_chi(double t, double a, double gate_time);
double swipht_chi_dot(double t, double a, double gate_time);
double swipht_chi_ddot(double t, double a, double gate_time);

// Throws SpeedLimitViolated when delta^2/4 - chi'(t)^2 <= 0.
double swipht_pulse(double t, double a, double gate_time, double delta);

// Sampled on the slice grid and converted to MHz pulse units.
pulse::PwcSequence swipht_sequence(double a, double gate_time, double delta, int slices);

// max over u in [0, 1/2] of u^3 (1-u)^3 (1-2u).
double swipht_shape_max();
// Smallest T with max_t |chi'| < |delta| / 2, i.e. T = 8 A shape_max / |delta|.
double speed_limit_T_min(double a, double delta);

}  // namespace qoc::scenarios
