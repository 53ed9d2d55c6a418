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

#include "qoc/constraint/spectral.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "qoc/ad/ops.hpp"
#include "qoc/error.hpp"
#include "qoc/kernels/dft.hpp"

namespace qoc::constraint {

int max_harmonics(int n) { return (n - 1) / 2; }

void check_harmonics(int n, int nc) {
  if (n < 2) throw Error(Errc::InvalidGrid, "need at least 2 samples, got " + std::to_string(n));
  if (nc < 0 || nc > max_harmonics(n)) {
    throw Error(Errc::NcTooLarge, "N_c = " + std::to_string(nc) + " outside [0, " +
                                      std::to_string(max_harmonics(n)) + "] for N = " + std::to_string(n));
  }
}

std::vector<cplx> dft(std::span<const double> s) {
  std::vector<cplx> x(s.begin(), s.end());
  std::vector<cplx> out(s.size());
  kernels::dft_omp(x, out);
  return out;
}

std::vector<double> idft(std::span<const cplx> spectrum) {
  const std::size_t n = spectrum.size();
  double peak = 1.0;
  for (const cplx& v : spectrum) peak = std::max(peak, std::abs(v));
  double asym = n ? std::abs(spectrum[0].imag()) : 0.0;
  for (std::size_t m = 1; m < n; ++m) asym = std::max(asym, std::abs(spectrum[m] - std::conj(spectrum[n - m])));
  if (asym > kHermitianTolerance * peak) {
    throw Error(Errc::NonHermitianSpectrum, "conjugate-symmetry deviation " + std::to_string(asym));
  }
  std::vector<cplx> s(n);
  kernels::idft_omp(spectrum, s);
  std::vector<double> out(n);
  std::transform(s.begin(), s.end(), out.begin(), [](const cplx& v) { return v.real(); });
  return out;
}

std::vector<double> band_limit(std::span<const double> s, int nc) {
  const int n = static_cast<int>(s.size());
  check_harmonics(n, nc);
  std::vector<cplx> x = dft(s);
  for (int m = nc + 1; m < n - nc; ++m) x[static_cast<std::size_t>(m)] = 0.0;
  return idft(x);
}

ad::Var band_limit(ad::Var s, int nc) {
  check_harmonics(static_cast<int>(s.value().rows()), nc);
  return ad::idft_real(ad::keep_harmonics(ad::dft(s), nc));
}

ad::RMat band_limit_matrix(int n, int nc) {
  ad::RMat p(n, n);
  std::vector<double> e(static_cast<std::size_t>(n), 0.0);
  for (int j = 0; j < n; ++j) {
    e[static_cast<std::size_t>(j)] = 1.0;
    const std::vector<double> col = band_limit(e, nc);
    for (int i = 0; i < n; ++i) p(i, j) = col[static_cast<std::size_t>(i)];
    e[static_cast<std::size_t>(j)] = 0.0;
  }
  return p;
}

double bin_frequency(int m, int n, double gate_time) {
  const int signed_m = m <= n / 2 ? m : m - n;
  return signed_m / gate_time;
}

}  // namespace qoc::constraint
