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

#include <vector>

#include "qoc/ad/value.hpp"

// Matrix exponential by scaling and squaring of a truncated Taylor series,
// with the exact reverse-mode adjoint of that same composition.
//
// The batched entry points act on a D x (D*K) horizontal stack of K square
// blocks. Each has a serial reference and an OpenMP variant; both run the same
// per-block code, so their results are bitwise identical.
namespace qoc::kernels {

using ad::CMat;

// Scaled norm threshold for the Taylor series and the truncation target for
// its remainder bound.
inline constexpr double kExpmTheta = 0.25;
inline constexpr double kExpmTailTolerance = 1e-18;
inline constexpr int kExpmMaxDegree = 40;

struct ExpmCache {
  int squarings = 0;
  CMat scaled;                 // X = M / 2^s
  std::vector<CMat> horner;    // Y_1..Y_m of Y_j = I + X Y_{j+1} / j, Y_m = I + X / m
  std::vector<CMat> squares;   // E_0..E_{s-1}, E_{i+1} = E_i^2
};

int expm_squarings(double norm1);
int expm_degree(double scaled_norm1);

void expm_forward(const CMat& m, CMat& out, ExpmCache* cache);
// grad_in = adjoint of the recorded composition applied to grad_out.
void expm_backward(const ExpmCache& cache, const CMat& grad_out, CMat& grad_in);

void expm_batch_forward_serial(const CMat& stacked, CMat& out, std::vector<ExpmCache>* caches);
void expm_batch_forward_omp(const CMat& stacked, CMat& out, std::vector<ExpmCache>* caches);
void expm_batch_backward_serial(const std::vector<ExpmCache>& caches, const CMat& grad_out,
                                CMat& grad_in);
void expm_batch_backward_omp(const std::vector<ExpmCache>& caches, const CMat& grad_out,
                             CMat& grad_in);

}  // namespace qoc::kernels
