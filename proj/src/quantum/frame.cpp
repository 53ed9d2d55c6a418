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

#include "qoc/quantum/frame.hpp"

#include <cmath>
#include <string>

#include "qoc/error.hpp"

namespace qoc::quantum {

namespace {

void require_frequencies(const DeviceModel& m) {
  if (m.drives.empty()) throw Error(Errc::MissingDriveFrequency, "model has no drives");
  for (std::size_t j = 0; j < m.drives.size(); ++j) {
    if (!m.drives[j].frequency) {
      throw Error(Errc::MissingDriveFrequency, "drive " + std::to_string(j) + " has no frequency");
    }
    for (std::size_t i = 0; i < j; ++i) {
      if (m.drives[i].mode == m.drives[j].mode) {
        throw Error(Errc::InvalidConfig, "two drives on mode " + std::to_string(m.drives[j].mode));
      }
    }
  }
}

DriveTerm drive_term(const DeviceModel& m, int mode, double rate) {
  const CMat a = annihilation(m, mode);
  const cplx i(0.0, 1.0);
  return {a.adjoint() + a, i * (a.adjoint() - a), rate};
}

}  // namespace

CMat FrameHamiltonian::at(double t, const std::vector<double>& amplitudes) const {
  if (amplitudes.size() != drives.size()) throw Error(Errc::LengthMismatch, "one amplitude per drive");
  CMat h = static_part;
  for (std::size_t j = 0; j < drives.size(); ++j) {
    const DriveTerm& d = drives[j];
    h += amplitudes[j] * (std::cos(d.rate * t) * d.in_phase + std::sin(d.rate * t) * d.quadrature);
  }
  for (const OscillatingTerm& o : oscillating) {
    const cplx c = o.rate * std::polar(1.0, o.beat * t);
    h += c * o.op + std::conj(c) * o.op.adjoint();
  }
  return h;
}

ad::CVec FrameHamiltonian::rotation(const DeviceModel& m, double t) const {
  ad::CVec phase = ad::CVec::Zero(m.dimension());
  for (int j = 0; j < static_cast<int>(m.modes.size()); ++j) {
    const std::vector<int> occ = occupations(m, j);
    for (std::size_t i = 0; i < occ.size(); ++i) phase[static_cast<Eigen::Index>(i)] += frame_frequencies[j] * occ[i] * t;
  }
  ad::CVec r(phase.size());
  for (Eigen::Index i = 0; i < phase.size(); ++i) r[i] = std::polar(1.0, phase[i].real());
  return r;
}

FrameHamiltonian rotating_frame(const DeviceModel& m) {
  require_frequencies(m);
  const auto modes = static_cast<int>(m.modes.size());
  FrameHamiltonian f;
  f.frame_frequencies = RVec::Constant(modes, *m.drives.front().frequency);
  for (const Drive& d : m.drives) f.frame_frequencies[d.mode] = *d.frequency;

  f.static_part = CMat::Zero(m.dimension(), m.dimension());
  for (int j = 0; j < modes; ++j) {
    const Mode& mode = m.modes[static_cast<std::size_t>(j)];
    const CMat a = annihilation(m, j);
    const CMat ad = a.adjoint();
    f.static_part += (mode.frequency - f.frame_frequencies[j]) * (ad * a) + 0.5 * mode.anharmonicity * (ad * ad * a * a);
  }
  for (const Coupling& c : m.couplings) {
    // g a^dag b picks up e^{i(nu_a - nu_b) t} in the rotating frame.
    const CMat op = annihilation(m, c.a).adjoint() * annihilation(m, c.b);
    const double beat = f.frame_frequencies[c.a] - f.frame_frequencies[c.b];
    if (beat == 0.0) {
      f.static_part += c.strength * (op + op.adjoint());
    } else {
      f.oscillating.push_back({op, c.strength, beat});
    }
  }
  for (const Drive& d : m.drives) {
    f.drives.push_back(drive_term(m, d.mode, f.frame_frequencies[d.mode] - *d.frequency));
    f.drive_modes.push_back(d.mode);
  }
  return f;
}

FrameHamiltonian lab_frame(const DeviceModel& m) {
  require_frequencies(m);
  FrameHamiltonian f;
  f.frame_frequencies = RVec::Zero(static_cast<Eigen::Index>(m.modes.size()));
  f.static_part = static_hamiltonian(m, false);
  for (const Drive& d : m.drives) {
    f.drives.push_back(drive_term(m, d.mode, -*d.frequency));
    f.drive_modes.push_back(d.mode);
  }
  return f;
}

}  // namespace qoc::quantum
