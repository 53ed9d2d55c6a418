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
#include "qoc/quantum/subspace.hpp"

namespace qoc::quantum {

// f = (Tr(M M^dag) + |Tr M|^2) / (d (d + 1)) with d = M.rows().
double fidelity_from_matrix(const CMat& m);

// M = target^dag (B^dag U B) on the dressed subspace.
double avg_gate_fidelity(const CMat& u, const CMat& target, const Subspace& sub);
double infidelity(const CMat& u, const CMat& target, const Subspace& sub);

// Tape versions on an already projected d x d matrix.
ad::Var fidelity_from_matrix(ad::Var m);
ad::Var infidelity_from_matrix(ad::Var m);

}  // namespace qoc::quantum
