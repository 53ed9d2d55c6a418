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

#include "qoc/kernels/dft.hpp"

#include <cmath>
#include <numbers>

#include "qoc/error.hpp"

namespace qoc::kernels {

std::vector<cplx> twiddles(std::size_t n, int sign) {
  std::vector<cplx> w(n);
  for (std::size_t j = 0; j < n; ++j) {
    const double angle = sign * 2.0 * std::numbers::pi * static_cast<double>(j) / static_cast<double>(n);
    w[j] = {std::cos(angle), std::sin(angle)};
  }
  return w;
}

namespace {

template <bool Parallel>
void transform(std::span<const cplx> x, std::span<cplx> out, int sign, double scale) {
  const std::size_t n = x.size();
  if (out.size() != n) throw Error(Errc::LengthMismatch, "dft output length differs from input");
  if (n == 0) return;
  const std::vector<cplx> w = twiddles(n, sign);
  const auto count = static_cast<long>(n);
#pragma omp parallel for schedule(static) if (Parallel)
  for (long m = 0; m < count; ++m) {
    cplx acc = 0.0;
    std::size_t idx = 0;
    const auto step = static_cast<std::size_t>(m);
    for (std::size_t k = 0; k < n; ++k) {
      acc += x[k] * w[idx];
      idx += step;
      if (idx >= n) idx -= n;
    }
    out[static_cast<std::size_t>(m)] = acc * scale;
  }
}

}  // namespace

void dft_serial(std::span<const cplx> x, std::span<cplx> out) { transform<false>(x, out, -1, 1.0); }

void dft_omp(std::span<const cplx> x, std::span<cplx> out) { transform<true>(x, out, -1, 1.0); }

void idft_serial(std::span<const cplx> spectrum, std::span<cplx> out) {
  transform<false>(spectrum, out, +1, 1.0 / static_cast<double>(spectrum.size()));
}

void idft_omp(std::span<const cplx> spectrum, std::span<cplx> out) {
  transform<true>(spectrum, out, +1, 1.0 / static_cast<double>(spectrum.size()));
}

}  // namespace qoc::kernels
