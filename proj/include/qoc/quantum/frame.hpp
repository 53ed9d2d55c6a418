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

#include <vector>

#include "qoc/quantum/model.hpp"

namespace qoc::quantum {

// H_j(t) = cos(rate t) * in_phase + sin(rate t) * quadrature, per unit pulse
// amplitude in rad/ns.
struct DriveTerm {
  CMat in_phase;
  CMat quadrature;
  double rate = 0.0;
};

// rate * e^{i beat t} * op + h.c.
struct OscillatingTerm {
  CMat op;
  cplx rate = 0.0;
  double beat = 0.0;
};

struct FrameHamiltonian {
  CMat static_part;
  std::vector<DriveTerm> drives;
  std::vector<OscillatingTerm> oscillating;
  RVec frame_frequencies;  // per mode, rad/ns
  std::vector<int> drive_modes;

  int dimension() const { return static_cast<int>(static_part.rows()); }
  // Instantaneous Hamiltonian for drive amplitudes given in rad/ns.
  CMat at(double t, const std::vector<double>& amplitudes) const;
  // exp(i sum_j nu_j n_j t), the diagonal of the frame rotation at time t.
  ad::CVec rotation(const DeviceModel& m, double t) const;
};

// Multi-mode rotating frame. A driven mode rotates at its drive frequency;
// undriven modes share the first drive's frequency. Couplings are reduced to
// exchange form and pick up beat factors between frames. Throws
// MissingDriveFrequency if a drive has no frequency or none are given.
FrameHamiltonian rotating_frame(const DeviceModel& m);

// No rotation and no RWA; drives carry their carrier explicitly.
FrameHamiltonian lab_frame(const DeviceModel& m);

}  // namespace qoc::quantum
