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

#include <array>
#include <vector>

#include "qoc/quantum/model.hpp"

namespace qoc::quantum {

inline constexpr double kMinimumOverlap = 0.5;

struct Subspace {
  CMat basis;                  // D x 4, columns are the dressed ~|00>, ~|01>, ~|10>, ~|11>
  RVec energies;               // eigenvalues of the dressed vectors, rad/ns
  std::array<double, 4> overlaps{};  // |<bare label | dressed>|^2
  std::vector<int> labels;     // bare indices

  CMat projector() const { return basis * basis.adjoint(); }
  // Dressed transition frequencies ~00 -> ~10 and ~00 -> ~01 (first, second qubit).
  double qubit_frequency(int qubit) const;
  // Mean of a qubit's two dressed transition frequencies (other qubit in 0 or 1).
  double mean_qubit_frequency(int qubit) const;
  // ZZ shift E11 - E10 - E01 + E00.
  double zz() const { return energies[3] - energies[2] - energies[1] + energies[0]; }
};

// Eigendecomposes h0 and assigns to each bare label the eigenvector of
// largest overlap, greedily by descending overlap with ties broken by lower
// eigenvalue. Each vector's phase makes its bare component real and positive.
// Throws AmbiguousAssignment when a best overlap falls below 0.5.
Subspace dressed_subspace(const CMat& h0, const std::vector<int>& labels);

// Bare indices of |00>, |01>, |10>, |11> on the model's qubit modes.
std::vector<int> computational_labels(const DeviceModel& m);

}  // namespace qoc::quantum
