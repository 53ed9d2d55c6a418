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

#include <span>
#include <vector>

#include "qoc/ad/tape.hpp"

namespace qoc::constraint {

struct AmplitudeWindowConfig {
  double lower = -30.0;
  double upper = 30.0;
  double g_amp = 0.5;
  double g_edge = 100.0;
  double edge_width = 2.0;  // ns
  double gate_time = 50.0;  // ns

  // Defaults for a gate of length T: edge width T/25.
  static AmplitudeWindowConfig for_gate(double lower, double upper, double gate_time);
  // Throws InvalidConfig unless lower < upper, 0 < edge_width < T/2, g_edge > 0, g_amp > 0.
  void validate() const;
};

double sigmoid_down(double x, double g);
double sigmoid_up(double x, double g);

// Bounded squash onto (lower, upper).
double squash(double omega, const AmplitudeWindowConfig& cfg);
// Inverse of squash; targets are clipped to a hair inside the open interval.
double unsquash(double value, const AmplitudeWindowConfig& cfg);
// Rising and falling edge envelope at time t.
double edge_window(double t, const AmplitudeWindowConfig& cfg);

double amplitude_window(double omega, double t, const AmplitudeWindowConfig& cfg);
std::vector<double> amplitude_window(std::span<const double> omega, std::span<const double> times,
                                     const AmplitudeWindowConfig& cfg);
// Tape version on an n x 1 real sequence sampled at the given times.
ad::Var amplitude_window(ad::Var omega, std::span<const double> times, const AmplitudeWindowConfig& cfg);

}  // namespace qoc::constraint
