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

#include "qoc/ad/tape.hpp"
#include "qoc/quantum/model.hpp"

namespace qoc::quantum {

CMat pauli_x();
CMat pauli_y();
CMat pauli_z();
CMat kron(const CMat& a, const CMat& b);
// Standard CNOT on |00>, |01>, |10>, |11>, control = first qubit.
CMat cnot();

// exp(-i theta sigma / 2) for axis 0 = x, 1 = y, 2 = z.
CMat rotation(int axis, double theta);

// Angles theta = (q1x, q1y, q1z, q2x, q2y, q2z).
// U = CNOT * (R_1 kron R_2) with R_i = Rx(theta_ix) Ry(theta_iy) Rz(theta_iz).
CMat cnot_target(const RVec& theta);
ad::Var cnot_target(ad::Var theta);

}  // namespace qoc::quantum
