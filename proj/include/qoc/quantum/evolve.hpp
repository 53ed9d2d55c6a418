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
#include "qoc/pulse/pulse.hpp"
#include "qoc/quantum/frame.hpp"

namespace qoc::quantum {

// Generators G_b = -i (dt / substeps) H_b stored as D x (D*B) block stacks,
// B = slices * substeps: G_b = base_b + sum_j Omega_j[b / substeps] * coeffs[j]_b
// with Omega in pulse units. Oscillating factors are averaged over each block.
struct SliceGenerators {
  Eigen::Index dimension = 0;
  Eigen::Index slices = 0;
  Eigen::Index substeps = 1;
  double dt = 0.0;  // pulse slice width

  Eigen::Index blocks() const { return slices * substeps; }
  CMat base;
  std::vector<CMat> coeffs;
};

// amplitude_scale converts pulse values to rad/ns (units::kMHz for MHz pulses).
SliceGenerators discretize(const FrameHamiltonian& frame, int slices, double gate_time, double amplitude_scale,
                           int substeps = 1);

// U_T = U_{N-1} ... U_0 on the tape. One n x 1 real pulse per drive.
ad::Var evolve(const SliceGenerators& gen, std::span<const ad::Var> pulses);
// Plain evaluation, optionally keeping U_k ... U_0 after every pulse slice.
CMat evolve(const SliceGenerators& gen, const std::vector<pulse::PwcSequence>& pulses,
            std::vector<CMat>* partials = nullptr);

// Average of e^{i w t} over [t0, t0 + dt].
cplx slice_average_phase(double w, double t0, double dt);

}  // namespace qoc::quantum
