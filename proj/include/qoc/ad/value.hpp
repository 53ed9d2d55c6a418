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
#include <cstdint>
#include <vector>

#include <Eigen/Dense>

namespace qoc::ad {

using cplx = std::complex<double>;
using RMat = Eigen::MatrixXd;
using CMat = Eigen::MatrixXcd;
using RVec = Eigen::VectorXd;
using CVec = Eigen::VectorXcd;

enum class DType : std::uint8_t { Real, Complex };

/// Dense payload of a tape node: a real or complex matrix. Scalars are 1x1 and
/// sequences are n x 1.
///
/// Gradients of complex values use the real-composite convention
/// G = dL/dRe(z) + i dL/dIm(z), so a complex leaf is equivalent to two
/// independent real leaves.
class Value {
 public:
  Value() = default;
  explicit Value(RMat m) : dtype_(DType::Real), real_(std::move(m)) {}
  explicit Value(CMat m) : dtype_(DType::Complex), complex_(std::move(m)) {}

  static Value scalar(double x);
  static Value vector(const std::vector<double>& xs);
  static Value zeros(DType dtype, Eigen::Index rows, Eigen::Index cols);

  DType dtype() const noexcept { return dtype_; }
  bool is_real() const noexcept { return dtype_ == DType::Real; }
  bool is_complex() const noexcept { return dtype_ == DType::Complex; }
  bool empty() const noexcept { return rows() == 0 && cols() == 0; }
  Eigen::Index rows() const noexcept;
  Eigen::Index cols() const noexcept;
  Eigen::Index size() const noexcept { return rows() * cols(); }
  bool is_scalar() const noexcept { return rows() == 1 && cols() == 1; }

  const RMat& real() const;
  RMat& real();
  const CMat& complex() const;
  CMat& complex();

  // Value of a real 1x1 node.
  double item() const;
  bool all_finite() const;
  bool same_shape(const Value& other) const noexcept;

  void add_inplace(const Value& other);
  Value zeros_like() const { return zeros(dtype_, rows(), cols()); }

 private:
  DType dtype_ = DType::Real;
  RMat real_;
  CMat complex_;
};

}  // namespace qoc::ad
