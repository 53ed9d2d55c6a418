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

#include "qoc/kernels/expm.hpp"

#include <cmath>

#include "qoc/error.hpp"

namespace qoc::kernels {

namespace {

void check_square_finite(const CMat& m) {
  if (m.rows() != m.cols()) throw Error(Errc::NonSquare, "matexp of a non-square matrix");
  if (!m.allFinite()) throw Error(Errc::NonFinite, "matexp input has non-finite entries");
}

void check_stack(const CMat& stacked) {
  const auto d = stacked.rows();
  if (d == 0 || stacked.cols() % d != 0) {
    throw Error(Errc::NonSquare, "stacked matexp input is not a row of square blocks");
  }
}

}  // namespace

int expm_squarings(double norm1) {
  if (!(norm1 > kExpmTheta)) return 0;
  return static_cast<int>(std::ceil(std::log2(norm1 / kExpmTheta)));
}

int expm_degree(double x) {
  if (x == 0.0) return 0;
  // term = x^(m+1)/(m+1)!, tail <= term / (1 - x/(m+2)).
  double term = x;
  for (int m = 1; m <= kExpmMaxDegree; ++m) {
    term *= x / (m + 1);
    const double ratio = x / (m + 2);
    if (ratio < 1.0 && term / (1.0 - ratio) < kExpmTailTolerance) return m;
  }
  return kExpmMaxDegree;
}

void expm_forward(const CMat& m, CMat& out, ExpmCache* cache) {
  check_square_finite(m);
  const auto n = m.rows();
  const int s = expm_squarings(m.cwiseAbs().colwise().sum().maxCoeff());
  const CMat x = m / std::ldexp(1.0, s);
  const int degree = expm_degree(x.cwiseAbs().colwise().sum().maxCoeff());
  const CMat eye = CMat::Identity(n, n);

  std::vector<CMat> horner;
  CMat y = eye;
  if (degree > 0) {
    horner.resize(static_cast<std::size_t>(degree));
    y = eye + x / static_cast<double>(degree);
    horner[static_cast<std::size_t>(degree - 1)] = y;
    CMat tmp(n, n);
    for (int j = degree - 1; j >= 1; --j) {
      tmp.noalias() = x * y;
      y = eye + tmp / static_cast<double>(j);
      horner[static_cast<std::size_t>(j - 1)] = y;
    }
  }

  std::vector<CMat> squares;
  if (cache) squares.reserve(static_cast<std::size_t>(s));
  CMat sq(n, n);
  for (int i = 0; i < s; ++i) {
    if (cache) squares.push_back(y);
    sq.noalias() = y * y;
    y.swap(sq);
  }
  out = std::move(y);

  if (cache) {
    cache->squarings = s;
    cache->scaled = x;
    cache->horner = std::move(horner);
    cache->squares = std::move(squares);
  }
}

void expm_backward(const ExpmCache& cache, const CMat& grad_out, CMat& grad_in) {
  const auto n = grad_out.rows();
  CMat g = grad_out;
  CMat tmp(n, n);
  for (int i = cache.squarings - 1; i >= 0; --i) {
    const CMat& e = cache.squares[static_cast<std::size_t>(i)];
    tmp.noalias() = g * e.adjoint();
    tmp.noalias() += e.adjoint() * g;
    g.swap(tmp);
  }

  // g now holds the adjoint of Y_1.
  const int degree = static_cast<int>(cache.horner.size());
  const CMat& x = cache.scaled;
  CMat gx = CMat::Zero(n, n);
  for (int j = 1; j < degree; ++j) {
    const CMat& next = cache.horner[static_cast<std::size_t>(j)];
    const double inv = 1.0 / j;
    gx.noalias() += inv * (g * next.adjoint());
    tmp.noalias() = inv * (x.adjoint() * g);
    g.swap(tmp);
  }
  if (degree > 0) gx += g / static_cast<double>(degree);
  grad_in = gx / std::ldexp(1.0, cache.squarings);
}

namespace {

template <bool Parallel>
void batch_forward(const CMat& stacked, CMat& out, std::vector<ExpmCache>* caches) {
  check_stack(stacked);
  const auto d = stacked.rows();
  const auto k = stacked.cols() / d;
  out.resize(d, stacked.cols());
  if (caches) caches->assign(static_cast<std::size_t>(k), ExpmCache{});
  bool bad = false;
#pragma omp parallel for schedule(static) if (Parallel) reduction(|| : bad)
  for (Eigen::Index b = 0; b < k; ++b) {
    if (!stacked.middleCols(b * d, d).allFinite()) {
      bad = true;
      continue;
    }
    CMat block;
    expm_forward(stacked.middleCols(b * d, d), block,
                 caches ? &(*caches)[static_cast<std::size_t>(b)] : nullptr);
    out.middleCols(b * d, d) = block;
  }
  if (bad) throw Error(Errc::NonFinite, "matexp input has non-finite entries");
}

template <bool Parallel>
void batch_backward(const std::vector<ExpmCache>& caches, const CMat& grad_out, CMat& grad_in) {
  const auto d = grad_out.rows();
  const auto k = static_cast<Eigen::Index>(caches.size());
  if (grad_out.cols() != d * k) throw Error(Errc::ShapeMismatch, "matexp gradient has wrong shape");
  grad_in.resize(d, grad_out.cols());
#pragma omp parallel for schedule(static) if (Parallel)
  for (Eigen::Index b = 0; b < k; ++b) {
    CMat g;
    expm_backward(caches[static_cast<std::size_t>(b)], grad_out.middleCols(b * d, d), g);
    grad_in.middleCols(b * d, d) = g;
  }
}

}  // namespace

void expm_batch_forward_serial(const CMat& stacked, CMat& out, std::vector<ExpmCache>* caches) {
  batch_forward<false>(stacked, out, caches);
}

void expm_batch_forward_omp(const CMat& stacked, CMat& out, std::vector<ExpmCache>* caches) {
  batch_forward<true>(stacked, out, caches);
}

void expm_batch_backward_serial(const std::vector<ExpmCache>& caches, const CMat& grad_out,
                                CMat& grad_in) {
  batch_backward<false>(caches, grad_out, grad_in);
}

void expm_batch_backward_omp(const std::vector<ExpmCache>& caches, const CMat& grad_out,
                             CMat& grad_in) {
  batch_backward<true>(caches, grad_out, grad_in);
}

}  // namespace qoc::kernels
