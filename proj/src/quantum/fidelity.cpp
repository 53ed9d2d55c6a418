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

#include "qoc/quantum/fidelity.hpp"

#include "qoc/ad/ops.hpp"

namespace qoc::quantum {

double fidelity_from_matrix(const CMat& m) {
  const double d = static_cast<double>(m.rows());
  return (m.cwiseAbs2().sum() + std::norm(m.trace())) / (d * (d + 1.0));
}

double avg_gate_fidelity(const CMat& u, const CMat& target, const Subspace& sub) {
  return fidelity_from_matrix(target.adjoint() * (sub.basis.adjoint() * u * sub.basis));
}

double infidelity(const CMat& u, const CMat& target, const Subspace& sub) {
  return 1.0 - avg_gate_fidelity(u, target, sub);
}

ad::Var fidelity_from_matrix(ad::Var m) {
  const double d = static_cast<double>(m.value().rows());
  const ad::Var total = ad::sum(ad::abs2(m)) + ad::sum(ad::abs2(ad::trace(m)));
  return ad::scale(total, 1.0 / (d * (d + 1.0)));
}

ad::Var infidelity_from_matrix(ad::Var m) { return ad::shift(ad::neg(fidelity_from_matrix(m)), 1.0); }

}  // namespace qoc::quantum
