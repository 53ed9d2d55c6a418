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

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "qoc/scenarios/scenario.hpp"

namespace qoc::scenarios {

// The scenario with one axis value applied (harmonic count, gate time in ns
// or coupling in MHz). Sweep fields of the result are cleared.
Scenario at_axis_value(const Scenario& base, SweepAxis axis, double value);

struct SweepPoint {
  double value = 0.0;
  std::optional<ScenarioResult> result;  // empty when the point failed
  std::string error;

  bool ok() const { return result.has_value(); }
  double best_infidelity() const { return ok() ? result->result.best_infidelity : 1.0; }
};

// Called once per finished point, possibly from a worker thread but never
// concurrently.
using PointCallback = std::function<void(std::size_t index, const SweepPoint&)>;

// Runs every value independently on a pool of `workers` threads (0 = one per
// hardware thread). A failing point is recorded and does not stop the others.
std::vector<SweepPoint> run_sweep(const Scenario& base, SweepAxis axis, const std::vector<double>& values,
                                  unsigned workers = 1, const PointCallback& on_point = {});

std::vector<SweepPoint> run_nc_sweep(const Scenario& base, const std::vector<int>& nc_values, unsigned workers = 1);
std::vector<SweepPoint> run_time_sweep(const Scenario& base, const std::vector<double>& gate_times,
                                       unsigned workers = 1);

// Smallest swept value whose best fidelity exceeds the threshold.
std::optional<double> first_above(const std::vector<SweepPoint>& points, double fidelity);

}  // namespace qoc::scenarios
