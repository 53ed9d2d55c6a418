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

#include <optional>
#include <string>
#include <vector>

#include "qoc/ad/value.hpp"

// Truncated-oscillator device descriptions. All stored frequencies and
// strengths are angular, in rad/ns. Builders take the cyclic values quoted
// in datasheets (GHz for frequencies, MHz for anharmonicity and coupling).
namespace qoc::quantum {

using ad::CMat;
using ad::cplx;
using ad::RVec;

enum class CouplingForm { Exchange, FullQuadrature };

struct Mode {
  std::string name;
  int levels = 2;
  double frequency = 0.0;      // rad/ns
  double anharmonicity = 0.0;  // rad/ns
};

struct Coupling {
  int a = 0;
  int b = 1;
  double strength = 0.0;  // rad/ns
  CouplingForm form = CouplingForm::Exchange;
};

struct Drive {
  int mode = 0;
  std::optional<double> frequency;  // rad/ns
};

struct DeviceModel {
  std::vector<Mode> modes;
  std::vector<Coupling> couplings;
  std::vector<Drive> drives;
  std::vector<int> qubits;  // mode indices labelling |q0 q1>, in that order

  int dimension() const;
  std::vector<int> levels() const;
  // Flat index of the bare product state with the given occupation per mode.
  int index(const std::vector<int>& occupation) const;
  // Bare index of |s0 s1> on the qubit modes with every other mode in its ground state.
  int label_index(int s0, int s1) const;
};

DeviceModel build_model1(double w1_ghz, double w2_ghz, double alpha1_mhz, double alpha2_mhz, double g12_mhz,
                         int levels);
DeviceModel build_model2(double w1_ghz, double w2_ghz, double wc_ghz, double alpha1_mhz, double alpha2_mhz,
                         double gc1_mhz, double gc2_mhz, int qubit_levels, int cavity_levels);

// Annihilation operator of one mode embedded in the full product space.
CMat annihilation(const DeviceModel& m, int mode);
// Number operator of one mode, embedded.
CMat number(const DeviceModel& m, int mode);

// Static Hamiltonian (rad/ns). With rwa, full-quadrature couplings keep only
// their excitation-conserving part.
CMat static_hamiltonian(const DeviceModel& m, bool rwa);

// Bare occupation of a mode for every basis index.
std::vector<int> occupations(const DeviceModel& m, int mode);

}  // namespace qoc::quantum
