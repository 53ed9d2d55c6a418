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

#include "qoc/ad/value.hpp"

#include "qoc/error.hpp"

namespace qoc::ad {

Value Value::scalar(double x) {
  RMat m(1, 1);
  m(0, 0) = x;
  return Value(std::move(m));
}

Value Value::vector(const std::vector<double>& xs) {
  RMat m(static_cast<Eigen::Index>(xs.size()), 1);
  for (std::size_t i = 0; i < xs.size(); ++i) m(static_cast<Eigen::Index>(i), 0) = xs[i];
  return Value(std::move(m));
}

Value Value::zeros(DType dtype, Eigen::Index rows, Eigen::Index cols) {
  if (dtype == DType::Real) return Value(RMat(RMat::Zero(rows, cols)));
  return Value(CMat(CMat::Zero(rows, cols)));
}

Eigen::Index Value::rows() const noexcept {
  return dtype_ == DType::Real ? real_.rows() : complex_.rows();
}

Eigen::Index Value::cols() const noexcept {
  return dtype_ == DType::Real ? real_.cols() : complex_.cols();
}

const RMat& Value::real() const {
  if (dtype_ != DType::Real) throw Error(Errc::ShapeMismatch, "expected a real value");
  return real_;
}

RMat& Value::real() {
  if (dtype_ != DType::Real) throw Error(Errc::ShapeMismatch, "expected a real value");
  return real_;
}

const CMat& Value::complex() const {
  if (dtype_ != DType::Complex) throw Error(Errc::ShapeMismatch, "expected a complex value");
  return complex_;
}

CMat& Value::complex() {
  if (dtype_ != DType::Complex) throw Error(Errc::ShapeMismatch, "expected a complex value");
  return complex_;
}

double Value::item() const {
  if (!is_real() || !is_scalar()) throw Error(Errc::NonScalarOutput, "value is not a real scalar");
  return real_(0, 0);
}

bool Value::all_finite() const {
  return is_real() ? real_.allFinite() : complex_.allFinite();
}

bool Value::same_shape(const Value& other) const noexcept {
  return dtype_ == other.dtype_ && rows() == other.rows() && cols() == other.cols();
}

void Value::add_inplace(const Value& other) {
  if (!same_shape(other)) throw Error(Errc::ShapeMismatch, "gradient accumulation shape mismatch");
  if (is_real()) {
    real_ += other.real_;
  } else {
    complex_ += other.complex_;
  }
}

}  // namespace qoc::ad
