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

#include "qoc/quantum/model.hpp"

#include <cmath>
#include <string>

#include "qoc/error.hpp"
#include "qoc/units.hpp"

namespace qoc::quantum {

namespace {

CMat ladder(int levels) {
  CMat a = CMat::Zero(levels, levels);
  for (int n = 1; n < levels; ++n) a(n - 1, n) = std::sqrt(static_cast<double>(n));
  return a;
}

CMat embed(const DeviceModel& m, int mode, const CMat& local) {
  CMat out = CMat::Identity(1, 1);
  for (int j = 0; j < static_cast<int>(m.modes.size()); ++j) {
    const int l = m.modes[static_cast<std::size_t>(j)].levels;
    const CMat factor = j == mode ? local : CMat(CMat::Identity(l, l));
    CMat next(out.rows() * l, out.cols() * l);
    for (Eigen::Index r = 0; r < out.rows(); ++r) {
      for (Eigen::Index c = 0; c < out.cols(); ++c) next.block(r * l, c * l, l, l) = out(r, c) * factor;
    }
    out.swap(next);
  }
  return out;
}

void check_levels(int levels, const std::string& what) {
  if (levels < 2) throw Error(Errc::InvalidLevels, what + " needs at least 2 levels, got " + std::to_string(levels));
}

}  // namespace

int DeviceModel::dimension() const {
  int d = 1;
  for (const Mode& mode : modes) d *= mode.levels;
  return d;
}

std::vector<int> DeviceModel::levels() const {
  std::vector<int> l;
  for (const Mode& mode : modes) l.push_back(mode.levels);
  return l;
}

int DeviceModel::index(const std::vector<int>& occupation) const {
  int idx = 0;
  for (std::size_t j = 0; j < modes.size(); ++j) idx = idx * modes[j].levels + occupation[j];
  return idx;
}

int DeviceModel::label_index(int s0, int s1) const {
  std::vector<int> occ(modes.size(), 0);
  occ[static_cast<std::size_t>(qubits.at(0))] = s0;
  occ[static_cast<std::size_t>(qubits.at(1))] = s1;
  return index(occ);
}

DeviceModel build_model1(double w1_ghz, double w2_ghz, double alpha1_mhz, double alpha2_mhz, double g12_mhz,
                         int levels) {
  check_levels(levels, "transmon");
  DeviceModel m;
  m.modes = {{"q1", levels, w1_ghz * units::kGHz, alpha1_mhz * units::kMHz},
             {"q2", levels, w2_ghz * units::kGHz, alpha2_mhz * units::kMHz}};
  m.couplings = {{0, 1, g12_mhz * units::kMHz, CouplingForm::FullQuadrature}};
  m.qubits = {0, 1};
  return m;
}

DeviceModel build_model2(double w1_ghz, double w2_ghz, double wc_ghz, double alpha1_mhz, double alpha2_mhz,
                         double gc1_mhz, double gc2_mhz, int qubit_levels, int cavity_levels) {
  check_levels(qubit_levels, "transmon");
  check_levels(cavity_levels, "cavity");
  DeviceModel m;
  m.modes = {{"q1", qubit_levels, w1_ghz * units::kGHz, alpha1_mhz * units::kMHz},
             {"q2", qubit_levels, w2_ghz * units::kGHz, alpha2_mhz * units::kMHz},
             {"cavity", cavity_levels, wc_ghz * units::kGHz, 0.0}};
  m.couplings = {{2, 0, gc1_mhz * units::kMHz, CouplingForm::Exchange},
                 {2, 1, gc2_mhz * units::kMHz, CouplingForm::Exchange}};
  m.qubits = {0, 1};
  return m;
}

CMat annihilation(const DeviceModel& m, int mode) {
  return embed(m, mode, ladder(m.modes.at(static_cast<std::size_t>(mode)).levels));
}

CMat number(const DeviceModel& m, int mode) {
  const CMat a = ladder(m.modes.at(static_cast<std::size_t>(mode)).levels);
  return embed(m, mode, a.adjoint() * a);
}

std::vector<int> occupations(const DeviceModel& m, int mode) {
  const CMat n = number(m, mode);
  std::vector<int> occ(static_cast<std::size_t>(n.rows()));
  for (Eigen::Index i = 0; i < n.rows(); ++i) occ[static_cast<std::size_t>(i)] = static_cast<int>(std::lround(n(i, i).real()));
  return occ;
}

CMat static_hamiltonian(const DeviceModel& m, bool rwa) {
  const int d = m.dimension();
  CMat h = CMat::Zero(d, d);
  for (int j = 0; j < static_cast<int>(m.modes.size()); ++j) {
    const Mode& mode = m.modes[static_cast<std::size_t>(j)];
    const CMat a = annihilation(m, j);
    const CMat ad = a.adjoint();
    h += mode.frequency * (ad * a) + 0.5 * mode.anharmonicity * (ad * ad * a * a);
  }
  for (const Coupling& c : m.couplings) {
    const CMat a = annihilation(m, c.a);
    const CMat b = annihilation(m, c.b);
    const CMat exchange = a.adjoint() * b + a * b.adjoint();
    if (c.form == CouplingForm::Exchange || rwa) {
      h += c.strength * exchange;
    } else {
      h += c.strength * ((a + a.adjoint()) * (b + b.adjoint()));
    }
  }
  return h;
}

}  // namespace qoc::quantum
