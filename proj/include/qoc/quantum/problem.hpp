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
#include <span>
#include <vector>

#include "qoc/ad/tape.hpp"
#include "qoc/constraint/amplitude.hpp"
#include "qoc/pulse/pulse.hpp"
#include "qoc/quantum/evolve.hpp"
#include "qoc/quantum/frame.hpp"
#include "qoc/quantum/subspace.hpp"

namespace qoc::quantum {

enum class TargetFamily { Fixed, Cnot };
enum class FrameKind { Rotating, Lab };
// Readout frame of the computational states: each qubit at its mean dressed
// transition frequency, each qubit at its transition out of ~|00> (the frame
// of a drive resonant with it), or every dressed state at its own energy.
enum class ReadoutFrame { MeanDressed, Transition, Dressed };

struct ControlTask {
  CMat target = CMat::Identity(4, 4);
  TargetFamily family = TargetFamily::Fixed;
  double gate_time = 50.0;  // ns
  int slices = 148;
  int harmonics = 5;
  int substeps = 1;  // propagation steps per pulse slice
  constraint::AmplitudeWindowConfig window;
  FrameKind frame = FrameKind::Rotating;
  ReadoutFrame readout = ReadoutFrame::MeanDressed;

  double dt() const { return gate_time / slices; }
  // Throws InvalidGrid / NcTooLarge / InvalidConfig.
  void validate() const;
};

// A compiled control problem: frame, dressed subspace, slice generators and
// readout, shared by every optimization method.
//
// The gate is read out as M = target^dag * Phi * B^dag * R(T)^dag * U * B,
// where R is the simulation frame rotation and Phi rotates each qubit at its
// ReadoutFrame reference frequency.
class Problem {
 public:
  Problem(DeviceModel model, ControlTask task);

  const DeviceModel& model() const { return model_; }
  const ControlTask& task() const { return task_; }
  const FrameHamiltonian& frame() const { return frame_; }
  const Subspace& subspace() const { return subspace_; }
  const SliceGenerators& generators() const { return generators_; }
  const std::vector<double>& times() const { return times_; }
  int drive_count() const { return static_cast<int>(frame_.drives.size()); }
  int slices() const { return task_.slices; }

  CMat readout(const CMat& u) const { return left_ * u * right_; }
  // The two factors of readout(u) = left * u * right.
  const CMat& readout_left() const { return left_; }
  const CMat& readout_right() const { return right_; }
  ad::Var readout(ad::Var u) const;

  CMat target(const RVec& theta) const;
  ad::Var target(ad::Var theta) const;

  // Infidelity of post-node pulses (pulse units). theta is required for the
  // CNOT family and ignored otherwise.
  ad::Var infidelity(std::span<const ad::Var> pulses, std::optional<ad::Var> theta) const;
  double infidelity(const std::vector<pulse::PwcSequence>& pulses, const RVec& theta = RVec()) const;
  // Infidelity of a fixed projected gate as a function of the angles only.
  ad::Var infidelity_of_readout(const CMat& projected, ad::Var theta) const;

  CMat propagate(const std::vector<pulse::PwcSequence>& pulses, std::vector<CMat>* partials = nullptr) const;

  // Populations of the dressed states after every slice, one row per slice
  // boundary (including t = 0) and 16 columns ordered (initial, final).
  ad::RMat populations(const std::vector<pulse::PwcSequence>& pulses) const;

 private:
  DeviceModel model_;
  ControlTask task_;
  FrameHamiltonian frame_;
  Subspace subspace_;
  SliceGenerators generators_;
  std::vector<double> times_;
  CMat left_;
  CMat right_;
};

}  // namespace qoc::quantum
