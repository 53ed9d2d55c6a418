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
#include <span>
#include <vector>

#include "qoc/ad/ops.hpp"

// DFT with negative-exponent forward / positive-exponent inverse, and the
// band-limiting projection that keeps bins {0..nc} U {N-nc..N-1}.
namespace qoc::constraint {

using cplx = std::complex<double>;

inline constexpr double kHermitianTolerance = ad::kHermitianTolerance;

// Largest admissible harmonic cutoff, Int((N-1)/2).
int max_harmonics(int n);
// Throws NcTooLarge (or InvalidGrid for n < 2) when nc is out of range.
void check_harmonics(int n, int nc);

std::vector<cplx> dft(std::span<const double> s);
// Real inverse; throws NonHermitianSpectrum when X[N-m] != conj(X[m]).
std::vector<double> idft(std::span<const cplx> spectrum);

std::vector<double> band_limit(std::span<const double> s, int nc);
ad::Var band_limit(ad::Var s, int nc);

// Dense N x N projector matrix, for tests and analysis.
ad::RMat band_limit_matrix(int n, int nc);

// Frequency of bin m in GHz for a sequence of n slices over gate_time ns.
double bin_frequency(int m, int n, double gate_time);

}  // namespace qoc::constraint
