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

#include "qoc/quantum/problem.hpp"

#include <cmath>
#include <string>

#include "qoc/ad/ops.hpp"
#include "qoc/constraint/spectral.hpp"
#include "qoc/error.hpp"
#include "qoc/quantum/fidelity.hpp"
#include "qoc/quantum/targets.hpp"
#include "qoc/units.hpp"

namespace qoc::quantum {

void ControlTask::validate() const {
  if (!(gate_time > 0.0)) throw Error(Errc::InvalidGrid, "gate time must be positive");
  constraint::check_harmonics(slices, harmonics);
  if (substeps < 1) throw Error(Errc::InvalidGrid, "need at least one substep per slice");
  window.validate();
  if (std::abs(window.gate_time - gate_time) > 1e-12 * gate_time) {
    throw Error(Errc::InvalidConfig, "amplitude window gate time differs from the task's");
  }
  if (target.rows() != 4 || target.cols() != 4) throw Error(Errc::ShapeMismatch, "target must be 4x4");
  if (!(target * target.adjoint()).isApprox(CMat::Identity(4, 4), 1e-10)) {
    throw Error(Errc::InvalidConfig, "target is not unitary");
  }
}

Problem::Problem(DeviceModel model, ControlTask task) : model_(std::move(model)), task_(std::move(task)) {
  task_.validate();
  frame_ = task_.frame == FrameKind::Rotating ? rotating_frame(model_) : lab_frame(model_);
  subspace_ = dressed_subspace(static_hamiltonian(model_, true), computational_labels(model_));
  generators_ = discretize(frame_, task_.slices, task_.gate_time, units::kMHz, task_.substeps);
  times_ = pulse::slice_times(task_.slices, task_.dt());

  const double t = task_.gate_time;
  const double w0 = subspace_.mean_qubit_frequency(0);
  const double w1 = subspace_.mean_qubit_frequency(1);
  double eps[4] = {0.0, w1, w0, w0 + w1};
  if (task_.readout == ReadoutFrame::Dressed) {
    for (int k = 1; k < 4; ++k) eps[k] = subspace_.energies[k] - subspace_.energies[0];
  } else if (task_.readout == ReadoutFrame::Transition) {
    eps[1] = subspace_.qubit_frequency(1);
    eps[2] = subspace_.qubit_frequency(0);
    eps[3] = eps[1] + eps[2];
  }
  ad::CVec phi(4);
  for (int s = 0; s < 4; ++s) phi[s] = std::polar(1.0, eps[s] * t);
  const ad::CVec r = frame_.rotation(model_, t);
  left_ = phi.asDiagonal() * subspace_.basis.adjoint() * r.conjugate().asDiagonal();
  right_ = subspace_.basis;
}

ad::Var Problem::readout(ad::Var u) const { return ad::matmul_const(ad::matmul_const(left_, u), right_); }

CMat Problem::target(const RVec& theta) const {
  return task_.family == TargetFamily::Cnot ? cnot_target(theta) : task_.target;
}

ad::Var Problem::target(ad::Var theta) const {
  if (task_.family == TargetFamily::Cnot) return cnot_target(theta);
  return theta.tape().constant(ad::Value(task_.target));
}

ad::Var Problem::infidelity(std::span<const ad::Var> pulses, std::optional<ad::Var> theta) const {
  const ad::Var u = evolve(generators_, pulses);
  const ad::Var projected = readout(u);
  if (task_.family == TargetFamily::Cnot) {
    if (!theta) throw Error(Errc::InvalidConfig, "CNOT family needs the rotation angles");
    return infidelity_from_matrix(ad::matmul(ad::adjoint(cnot_target(*theta)), projected));
  }
  return infidelity_from_matrix(ad::matmul_const(CMat(task_.target.adjoint()), projected));
}

ad::Var Problem::infidelity_of_readout(const CMat& projected, ad::Var theta) const {
  return infidelity_from_matrix(ad::matmul_const(ad::adjoint(target(theta)), projected));
}

double Problem::infidelity(const std::vector<pulse::PwcSequence>& pulses, const RVec& theta) const {
  return 1.0 - fidelity_from_matrix(target(theta).adjoint() * readout(propagate(pulses)));
}

CMat Problem::propagate(const std::vector<pulse::PwcSequence>& pulses, std::vector<CMat>* partials) const {
  return evolve(generators_, pulses, partials);
}

ad::RMat Problem::populations(const std::vector<pulse::PwcSequence>& pulses) const {
  std::vector<CMat> partials;
  propagate(pulses, &partials);
  const CMat& b = subspace_.basis;
  ad::RMat out(static_cast<Eigen::Index>(partials.size()) + 1, 16);
  out.row(0).setZero();
  for (int s = 0; s < 4; ++s) out(0, 5 * s) = 1.0;
  for (std::size_t k = 0; k < partials.size(); ++k) {
    const CMat m = b.adjoint() * partials[k] * b;
    for (int i = 0; i < 4; ++i) {
      for (int f = 0; f < 4; ++f) out(static_cast<Eigen::Index>(k) + 1, 4 * i + f) = std::norm(m(f, i));
    }
  }
  return out;
}

}  // namespace qoc::quantum
