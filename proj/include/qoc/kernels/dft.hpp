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

// Direct O(N^2) discrete Fourier transforms. Twiddles are indexed by
// (m*k mod N) so every bin uses exactly-reduced angles. Serial reference and
// OpenMP variants parallelize over output bins and agree bitwise.
namespace qoc::kernels {

using cplx = std::complex<double>;

// X[m] = sum_k x[k] exp(-2 pi i m k / N)
void dft_serial(std::span<const cplx> x, std::span<cplx> out);
void dft_omp(std::span<const cplx> x, std::span<cplx> out);

// x[k] = (1/N) sum_m X[m] exp(+2 pi i m k / N)
void idft_serial(std::span<const cplx> spectrum, std::span<cplx> out);
void idft_omp(std::span<const cplx> spectrum, std::span<cplx> out);

std::vector<cplx> twiddles(std::size_t n, int sign);

}  // namespace qoc::kernels
