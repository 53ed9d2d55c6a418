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

#include "qoc/quantum/evolve.hpp"

#include <cmath>
#include <string>

#include "qoc/ad/ops.hpp"
#include "qoc/error.hpp"
#include "qoc/kernels/expm.hpp"

namespace qoc::quantum {

cplx slice_average_phase(double w, double t0, double dt) {
  const double x = w * dt;
  const cplx start = std::polar(1.0, w * t0);
  if (std::abs(x) < 1e-8) return start * cplx(1.0, 0.5 * x);
  return start * (std::polar(1.0, x) - 1.0) / cplx(0.0, x);
}

SliceGenerators discretize(const FrameHamiltonian& frame, int slices, double gate_time, double amplitude_scale,
                           int substeps) {
  if (slices < 1 || !(gate_time > 0.0)) throw Error(Errc::InvalidGrid, "need positive slice count and gate time");
  if (substeps < 1) throw Error(Errc::InvalidGrid, "need at least one substep per slice");
  const Eigen::Index d = frame.dimension();
  SliceGenerators g;
  g.dimension = d;
  g.slices = slices;
  g.substeps = substeps;
  g.dt = gate_time / slices;
  const Eigen::Index blocks = g.blocks();
  const double h_dt = g.dt / substeps;
  const cplx minus_i_dt(0.0, -h_dt);
  g.base.resize(d, d * blocks);
  g.coeffs.assign(frame.drives.size(), CMat(d, d * blocks));
  for (Eigen::Index k = 0; k < blocks; ++k) {
    const double t0 = static_cast<double>(k) * h_dt;
    CMat h = frame.static_part;
    for (const OscillatingTerm& o : frame.oscillating) {
      const cplx c = o.rate * slice_average_phase(o.beat, t0, h_dt);
      h += c * o.op + std::conj(c) * o.op.adjoint();
    }
    g.base.middleCols(k * d, d) = minus_i_dt * h;
    for (std::size_t j = 0; j < frame.drives.size(); ++j) {
      const DriveTerm& drive = frame.drives[j];
      const cplx a = slice_average_phase(drive.rate, t0, h_dt);
      g.coeffs[j].middleCols(k * d, d) =
          (minus_i_dt * amplitude_scale) * (a.real() * drive.in_phase + a.imag() * drive.quadrature);
    }
  }
  return g;
}

ad::Var evolve(const SliceGenerators& gen, std::span<const ad::Var> pulses) {
  if (pulses.size() != gen.coeffs.size()) {
    throw Error(Errc::LengthMismatch, "expected " + std::to_string(gen.coeffs.size()) + " pulses, got " +
                                          std::to_string(pulses.size()));
  }
  if (gen.substeps == 1) return ad::ordered_product(ad::matexp_batch(ad::affine_blocks(gen.base, gen.coeffs, pulses)));
  ad::RMat repeat = ad::RMat::Zero(gen.blocks(), gen.slices);
  for (Eigen::Index b = 0; b < gen.blocks(); ++b) repeat(b, b / gen.substeps) = 1.0;
  std::vector<ad::Var> fine;
  for (const ad::Var& p : pulses) fine.push_back(ad::matvec_const(repeat, p));
  return ad::ordered_product(ad::matexp_batch(ad::affine_blocks(gen.base, gen.coeffs, fine)));
}

CMat evolve(const SliceGenerators& gen, const std::vector<pulse::PwcSequence>& pulses, std::vector<CMat>* partials) {
  if (pulses.size() != gen.coeffs.size()) throw Error(Errc::LengthMismatch, "one pulse per drive required");
  for (const pulse::PwcSequence& p : pulses) {
    if (p.size() != gen.slices) {
      throw Error(Errc::LengthMismatch, "pulse has " + std::to_string(p.size()) + " slices, expected " +
                                            std::to_string(gen.slices));
    }
  }
  const Eigen::Index d = gen.dimension;
  CMat stack = gen.base;
  for (std::size_t j = 0; j < pulses.size(); ++j) {
    for (Eigen::Index k = 0; k < gen.blocks(); ++k) {
      stack.middleCols(k * d, d) +=
          pulses[j].values[static_cast<std::size_t>(k / gen.substeps)] * gen.coeffs[j].middleCols(k * d, d);
    }
  }
  CMat blocks;
  kernels::expm_batch_forward_omp(stack, blocks, nullptr);
  CMat u = CMat::Identity(d, d);
  CMat next(d, d);
  if (partials) partials->clear();
  for (Eigen::Index k = 0; k < gen.blocks(); ++k) {
    next.noalias() = blocks.middleCols(k * d, d) * u;
    u.swap(next);
    if (partials && (k + 1) % gen.substeps == 0) partials->push_back(u);
  }
  return u;
}

}  // namespace qoc::quantum
