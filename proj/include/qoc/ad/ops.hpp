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

#include <span>
#include <vector>

#include "qoc/ad/tape.hpp"

// Differentiable primitives. Every function records one node on the tape of its
// first operand. Real ops are elementwise unless stated; a real 1x1 operand
// broadcasts against any real shape.
namespace qoc::ad {

// Arithmetic (add/sub accept real+real or complex+complex).
Var add(Var a, Var b);
Var sub(Var a, Var b);
Var mul(Var a, Var b);  // real, elementwise
Var neg(Var a);
Var scale(Var a, double c);
Var shift(Var a, double c);  // real a + c
Var mul_const(Var a, const RMat& c);  // real, elementwise with a constant of equal shape

Var sigmoid(Var a);
Var exp(Var a);
Var sin(Var a);
Var cos(Var a);
Var square(Var a);
Var clamp(Var a, double lo, double hi);  // zero gradient outside (lo, hi)

Var sum(Var a);  // real or |.|-free reduction to a 1x1 of the same dtype
Var element(Var a, Eigen::Index i);  // i-th entry of a real vector, as a scalar
Var matvec_const(const RMat& m, Var x);  // real m * x

// Complex matrices.
Var to_complex(Var a);
Var real_part(Var z);
Var imag_part(Var z);
Var matmul(Var a, Var b);
Var matmul_const(const CMat& left, Var b);
Var matmul_const(Var a, const CMat& right);
Var adjoint(Var a);
Var trace(Var a);
Var abs2(Var z);  // |z|^2 elementwise, real result
Var scale_by(Var s, Var m);  // real scalar s times complex m
Var scale_const(Var s, const CMat& m);  // real scalar s times constant complex m
Var kron(Var a, Var b);

// e^M for a square complex M (scaling and squaring, differentiable adjoint).
Var matexp(Var m);

// Block-stacked matrices: a D x (D*K) value holds K square blocks side by side.
Var stack(std::span<const Var> blocks);
Var block(Var stacked, Eigen::Index k);
// Block k of the result is base_k + sum_j x_j[k] * coeff_j,k, with x_j real
// vectors of length K and base/coeff constant D x (D*K) stacks.
Var affine_blocks(const CMat& base, const std::vector<CMat>& coeffs, std::span<const Var> xs);
Var matexp_batch(Var stacked);  // e^{block} for every block (OpenMP kernel)
Var ordered_product(Var stacked);  // block_{K-1} * ... * block_1 * block_0

// Spectral ops on sequences (n x 1).
Var dft(Var real_seq);  // complex spectrum, negative exponent
Var idft_real(Var spectrum);  // real part of the inverse; checks Hermitian symmetry
Var keep_harmonics(Var spectrum, int nc);  // zero bins outside {0..nc} U {N-nc..N-1}

inline Var operator+(Var a, Var b) { return add(a, b); }
inline Var operator-(Var a, Var b) { return sub(a, b); }
inline Var operator-(Var a) { return neg(a); }
inline Var operator*(Var a, Var b) { return mul(a, b); }
inline Var operator*(Var a, double c) { return scale(a, c); }
inline Var operator*(double c, Var a) { return scale(a, c); }
inline Var operator+(Var a, double c) { return shift(a, c); }
inline Var operator+(double c, Var a) { return shift(a, c); }

// Tolerance on Hermitian symmetry for idft_real, relative to max(1, max|X|).
inline constexpr double kHermitianTolerance = 1e-9;

}  // namespace qoc::ad
