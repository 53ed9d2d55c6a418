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

#include <cmath>
#include <numbers>

#include "qoc/quantum/problem.hpp"
#include "qoc/quantum/targets.hpp"
#include "qoc/units.hpp"

namespace qoc::test {

// Model 1 with a single drive resonant with ~|00> -> ~|01>, target I (x) X.
inline quantum::Problem x2_problem(int levels, int slices, double gate_time, int harmonics = 5,
                                   double bound = 30.0) {
  quantum::DeviceModel m = quantum::build_model1(5.270, 4.670, -220, -220, 25.4, levels);
  const quantum::Subspace sub =
      quantum::dressed_subspace(quantum::static_hamiltonian(m, true), quantum::computational_labels(m));
  m.drives = {{1, sub.qubit_frequency(1)}};
  quantum::ControlTask task;
  task.target = quantum::kron(ad::CMat(ad::CMat::Identity(2, 2)), quantum::pauli_x());
  task.gate_time = gate_time;
  task.slices = slices;
  task.harmonics = harmonics;
  task.window = constraint::AmplitudeWindowConfig::for_gate(-bound, bound, gate_time);
  return quantum::Problem(m, task);
}

// Constant pulse of area pi/2 (rad) over the gate.
inline pulse::PwcSequence flat_seed(int slices, double gate_time) {
  const double a = std::numbers::pi / 2 / (units::kMHz * gate_time);
  return {std::vector<double>(static_cast<std::size_t>(slices), a), gate_time / slices};
}

}  // namespace qoc::test
