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

#include "qoc/quantum/targets.hpp"

#include <cmath>

#include "qoc/ad/ops.hpp"
#include "qoc/error.hpp"

namespace qoc::quantum {

namespace {

const cplx kI(0.0, 1.0);

CMat axis_matrix(int axis) {
  switch (axis) {
    case 0: return pauli_x();
    case 1: return pauli_y();
    default: return pauli_z();
  }
}

ad::Var rotation(ad::Var theta, Eigen::Index index, int axis) {
  const ad::Var half = ad::scale(ad::element(theta, index), 0.5);
  const CMat minus_i_sigma = -kI * axis_matrix(axis);
  return ad::scale_const(ad::cos(half), CMat::Identity(2, 2)) + ad::scale_const(ad::sin(half), minus_i_sigma);
}

}  // namespace

CMat pauli_x() {
  CMat m(2, 2);
  m << 0, 1, 1, 0;
  return m;
}

CMat pauli_y() {
  CMat m(2, 2);
  m << 0, -kI, kI, 0;
  return m;
}

CMat pauli_z() {
  CMat m(2, 2);
  m << 1, 0, 0, -1;
  return m;
}

CMat kron(const CMat& a, const CMat& b) {
  CMat out(a.rows() * b.rows(), a.cols() * b.cols());
  for (Eigen::Index i = 0; i < a.rows(); ++i) {
    for (Eigen::Index j = 0; j < a.cols(); ++j) out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
  }
  return out;
}

CMat cnot() {
  CMat m = CMat::Zero(4, 4);
  m(0, 0) = 1;
  m(1, 1) = 1;
  m(2, 3) = 1;
  m(3, 2) = 1;
  return m;
}

CMat rotation(int axis, double theta) {
  return std::cos(theta / 2) * CMat::Identity(2, 2) - kI * std::sin(theta / 2) * axis_matrix(axis);
}

CMat cnot_target(const RVec& theta) {
  if (theta.size() != 6) throw Error(Errc::LengthMismatch, "CNOT family takes 6 angles");
  CMat r[2];
  for (int q = 0; q < 2; ++q) {
    r[q] = rotation(0, theta[3 * q]) * rotation(1, theta[3 * q + 1]) * rotation(2, theta[3 * q + 2]);
  }
  return cnot() * kron(r[0], r[1]);
}

ad::Var cnot_target(ad::Var theta) {
  if (theta.value().rows() != 6 || theta.value().cols() != 1) {
    throw Error(Errc::LengthMismatch, "CNOT family takes 6 angles");
  }
  ad::Var r[2];
  for (int q = 0; q < 2; ++q) {
    r[q] = ad::matmul(ad::matmul(rotation(theta, 3 * q, 0), rotation(theta, 3 * q + 1, 1)),
                      rotation(theta, 3 * q + 2, 2));
  }
  return ad::matmul_const(cnot(), ad::kron(r[0], r[1]));
}

}  // namespace qoc::quantum
