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

// Serial reference vs OpenMP for the batched matrix exponential and the DFT.

#include <complex>
#include <random>
#include <vector>

#include <benchmark/benchmark.h>

#include "qoc/kernels/dft.hpp"
#include "qoc/kernels/expm.hpp"

namespace {

using qoc::kernels::CMat;
using cplx = std::complex<double>;

// Stack of -i H dt blocks for random Hermitian H, d x (d * slices).
CMat generator_stack(int d, int slices) {
  std::mt19937_64 rng(1);
  std::normal_distribution<double> n(0.0, 1.0);
  CMat out(d, static_cast<Eigen::Index>(d) * slices);
  for (int b = 0; b < slices; ++b) {
    CMat a(d, d);
    for (int i = 0; i < d; ++i) {
      for (int j = 0; j < d; ++j) a(i, j) = {n(rng), n(rng)};
    }
    out.middleCols(static_cast<Eigen::Index>(b) * d, d) = cplx(0, -0.3) * (a + a.adjoint());
  }
  return out;
}

template <void (*Forward)(const CMat&, CMat&, std::vector<qoc::kernels::ExpmCache>*)>
void BM_ExpmForward(benchmark::State& state) {
  const CMat stack = generator_stack(static_cast<int>(state.range(0)), static_cast<int>(state.range(1)));
  CMat out;
  std::vector<qoc::kernels::ExpmCache> caches;
  for (auto _ : state) {
    Forward(stack, out, &caches);
    benchmark::DoNotOptimize(out.data());
  }
  state.SetItemsProcessed(state.iterations() * state.range(1));
}

template <void (*Backward)(const std::vector<qoc::kernels::ExpmCache>&, const CMat&, CMat&)>
void BM_ExpmBackward(benchmark::State& state) {
  const CMat stack = generator_stack(static_cast<int>(state.range(0)), static_cast<int>(state.range(1)));
  CMat out;
  std::vector<qoc::kernels::ExpmCache> caches;
  qoc::kernels::expm_batch_forward_serial(stack, out, &caches);
  CMat grad;
  for (auto _ : state) {
    Backward(caches, out, grad);
    benchmark::DoNotOptimize(grad.data());
  }
  state.SetItemsProcessed(state.iterations() * state.range(1));
}

template <void (*Transform)(std::span<const cplx>, std::span<cplx>)>
void BM_Dft(benchmark::State& state) {
  std::mt19937_64 rng(2);
  std::normal_distribution<double> n(0.0, 1.0);
  std::vector<cplx> x(static_cast<std::size_t>(state.range(0)));
  for (auto& v : x) v = {n(rng), 0.0};
  std::vector<cplx> out(x.size());
  for (auto _ : state) {
    Transform(x, out);
    benchmark::DoNotOptimize(out.data());
  }
  state.SetItemsProcessed(state.iterations() * state.range(0));
}

void expm_args(benchmark::internal::Benchmark* b) {
  for (int d : {4, 16, 27}) b->Args({d, 148});
}

}  // namespace

BENCHMARK(BM_ExpmForward<qoc::kernels::expm_batch_forward_serial>)->Name("expm_forward/serial")->Apply(expm_args);
BENCHMARK(BM_ExpmForward<qoc::kernels::expm_batch_forward_omp>)->Name("expm_forward/omp")->Apply(expm_args);
BENCHMARK(BM_ExpmBackward<qoc::kernels::expm_batch_backward_serial>)->Name("expm_backward/serial")->Apply(expm_args);
BENCHMARK(BM_ExpmBackward<qoc::kernels::expm_batch_backward_omp>)->Name("expm_backward/omp")->Apply(expm_args);
BENCHMARK(BM_Dft<qoc::kernels::dft_serial>)->Name("dft/serial")->Arg(148)->Arg(512);
BENCHMARK(BM_Dft<qoc::kernels::dft_omp>)->Name("dft/omp")->Arg(148)->Arg(512);
BENCHMARK(BM_Dft<qoc::kernels::idft_serial>)->Name("idft/serial")->Arg(148)->Arg(512);
BENCHMARK(BM_Dft<qoc::kernels::idft_omp>)->Name("idft/omp")->Arg(148)->Arg(512);

BENCHMARK_MAIN();
