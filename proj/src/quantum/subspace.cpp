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

#include "qoc/quantum/subspace.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include <Eigen/Eigenvalues>

#include "qoc/error.hpp"

namespace qoc::quantum {

double Subspace::qubit_frequency(int qubit) const {
  return qubit == 0 ? energies[2] - energies[0] : energies[1] - energies[0];
}

double Subspace::mean_qubit_frequency(int qubit) const { return qubit_frequency(qubit) + 0.5 * zz(); }

std::vector<int> computational_labels(const DeviceModel& m) {
  return {m.label_index(0, 0), m.label_index(0, 1), m.label_index(1, 0), m.label_index(1, 1)};
}

Subspace dressed_subspace(const CMat& h0, const std::vector<int>& labels) {
  if (h0.rows() != h0.cols()) throw Error(Errc::NonSquare, "dressed subspace of a non-square matrix");
  const Eigen::SelfAdjointEigenSolver<CMat> solver(h0);
  const CMat& vecs = solver.eigenvectors();
  const RVec& vals = solver.eigenvalues();  // ascending

  struct Candidate {
    double overlap;
    Eigen::Index vector;
    std::size_t label;
  };
  std::vector<Candidate> candidates;
  for (std::size_t l = 0; l < labels.size(); ++l) {
    for (Eigen::Index v = 0; v < vecs.cols(); ++v) candidates.push_back({std::norm(vecs(labels[l], v)), v, l});
  }
  std::stable_sort(candidates.begin(), candidates.end(), [](const Candidate& a, const Candidate& b) {
    if (a.overlap != b.overlap) return a.overlap > b.overlap;
    return a.vector < b.vector;
  });

  std::vector<Eigen::Index> chosen(labels.size(), -1);
  std::vector<double> overlap(labels.size(), 0.0);
  std::vector<bool> used(static_cast<std::size_t>(vecs.cols()), false);
  for (const Candidate& c : candidates) {
    if (chosen[c.label] >= 0 || used[static_cast<std::size_t>(c.vector)]) continue;
    chosen[c.label] = c.vector;
    overlap[c.label] = c.overlap;
    used[static_cast<std::size_t>(c.vector)] = true;
  }

  Subspace sub;
  sub.labels = labels;
  sub.basis.resize(h0.rows(), static_cast<Eigen::Index>(labels.size()));
  sub.energies.resize(static_cast<Eigen::Index>(labels.size()));
  for (std::size_t l = 0; l < labels.size(); ++l) {
    if (chosen[l] < 0 || overlap[l] < kMinimumOverlap) {
      throw Error(Errc::AmbiguousAssignment, "bare state " + std::to_string(labels[l]) +
                                                 " has best dressed overlap " + std::to_string(overlap[l]));
    }
    ad::CVec v = vecs.col(chosen[l]);
    const cplx bare = v[labels[l]];
    v *= std::abs(bare) / bare;
    sub.basis.col(static_cast<Eigen::Index>(l)) = v;
    sub.energies[static_cast<Eigen::Index>(l)] = vals[chosen[l]];
    if (l < sub.overlaps.size()) sub.overlaps[l] = overlap[l];
  }
  return sub;
}

}  // namespace qoc::quantum
