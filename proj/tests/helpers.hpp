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

#include <complex>
#include <random>

#include <Eigen/Dense>
#include <unsupported/Eigen/MatrixFunctions>

#include "qoc/ad/value.hpp"

namespace qoc::test {

using ad::CMat;
using ad::RMat;
using ad::RVec;
using ad::cplx;

inline RVec random_vector(std::mt19937_64& rng, Eigen::Index n, double lo = -1.0, double hi = 1.0) {
  std::uniform_real_distribution<double> u(lo, hi);
  RVec v(n);
  for (Eigen::Index i = 0; i < n; ++i) v[i] = u(rng);
  return v;
}

inline CMat random_complex(std::mt19937_64& rng, Eigen::Index r, Eigen::Index c, double scale = 1.0) {
  std::normal_distribution<double> n(0.0, scale);
  CMat m(r, c);
  for (Eigen::Index i = 0; i < r; ++i) {
    for (Eigen::Index j = 0; j < c; ++j) m(i, j) = {n(rng), n(rng)};
  }
  return m;
}

inline CMat random_hermitian(std::mt19937_64& rng, Eigen::Index d, double scale = 1.0) {
  const CMat a = random_complex(rng, d, d, scale);
  return (a + a.adjoint()) / 2.0;
}

// Haar-ish unitary from the QR factor of a Gaussian matrix.
inline CMat random_unitary(std::mt19937_64& rng, Eigen::Index d) {
  Eigen::HouseholderQR<CMat> qr(random_complex(rng, d, d));
  return qr.householderQ() * CMat::Identity(d, d);
}

// exp(-i H t) from the eigendecomposition of a Hermitian H.
inline CMat expm_hermitian(const CMat& h, double t) {
  Eigen::SelfAdjointEigenSolver<CMat> es(h);
  const Eigen::VectorXcd phases = (es.eigenvalues().cast<cplx>() * cplx(0.0, -t)).array().exp();
  return es.eigenvectors() * phases.asDiagonal() * es.eigenvectors().adjoint();
}

inline double max_abs(const CMat& m) { return m.cwiseAbs().maxCoeff(); }
inline double max_abs(const RMat& m) { return m.cwiseAbs().maxCoeff(); }

}  // namespace qoc::test
