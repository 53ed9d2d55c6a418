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

#include <cmath>
#include <random>

#include "doctest.h"
#include "fixtures.hpp"
#include "helpers.hpp"
#include "qoc/baselines/baselines.hpp"
#include "qoc/constraint/spectral.hpp"

using namespace qoc;
using namespace qoc::baselines;
using optimize::OptimizerKind;

namespace {

double out_of_band(const std::vector<double>& values, int nc) {
  const auto x = constraint::dft(values);
  const int n = static_cast<int>(values.size());
  double peak = 0;
  double leak = 0;
  for (int m = 0; m < n; ++m) {
    peak = std::max(peak, std::abs(x[m]));
    if (m > nc && m < n - nc) leak = std::max(leak, std::abs(x[m]));
  }
  return leak / peak;
}

RunOptions short_run(int iterations) {
  RunOptions opt;
  opt.optimizer = {OptimizerKind::Adam, 2.0};
  opt.stop.max_iterations = iterations;
  return opt;
}

}  // namespace

TEST_SUITE("baselines") {
  TEST_CASE("grape pulses respect the bounds and zero endpoints exactly") {
    const auto problem = test::x2_problem(3, 60, 30.0, 5, 10.0);
    const auto r = run_grape_like(problem, {test::flat_seed(60, 30.0)}, short_run(30));
    CHECK(r.method == "grape");
    for (const RVec& p : r.parameters) {
      CHECK(p.maxCoeff() <= 10.0);
      CHECK(p.minCoeff() >= -10.0);
    }
    const auto& v = r.pulses[0].values;
    CHECK(v.front() == 0.0);
    CHECK(v.back() == 0.0);
    for (double x : v) {
      CHECK(x <= 10.0);
      CHECK(x >= -10.0);
    }
    CHECK(r.best_infidelity < r.trace.front());
    CHECK(out_of_band(v, 5) > 1e-3);
  }

  TEST_CASE("grape projection") {
    const auto problem = test::x2_problem(2, 8, 10.0, 3, 5.0);
    const GrapeParametrization g(problem);
    RVec p = (RVec(8) << 3, 9, -9, 1, 2, -6, 4, 4).finished();
    g.project(p);
    CHECK(p == (RVec(8) << 0, 5, -5, 1, 2, -5, 4, 0).finished());
    const GrapeParametrization free(problem, false);
    RVec q = RVec::Constant(8, 9.0);
    free.project(q);
    CHECK(q == RVec::Constant(8, 9.0));
  }

  TEST_CASE("crab basis") {
    const CrabBasis grid = crab_basis(4, false, 0);
    CHECK(grid.frequencies == std::vector<double>{1, 2, 3, 4});
    const CrabBasis a = crab_basis(4, true, 99);
    const CrabBasis b = crab_basis(4, true, 99);
    CHECK(a.frequencies == b.frequencies);
    for (int n = 0; n < 4; ++n) CHECK(std::abs(a.frequencies[n] - (n + 1)) <= 0.5);
    CHECK(a.frequencies != crab_basis(4, true, 100).frequencies);
  }

  TEST_CASE("unconstrained crab on the harmonic grid spans the band-limited set") {
    const int n = 48;
    const int nc = 5;
    const auto problem = test::x2_problem(2, n, 24.0, nc);
    const CrabParametrization crab(problem, crab_basis(nc, false, 0), false);
    CHECK(crab.synthesis().rows() == n);
    CHECK(crab.synthesis().cols() == 2 * nc + 1);
    std::mt19937_64 rng(17);
    for (int trial = 0; trial < 5; ++trial) {
      const RVec c = test::random_vector(rng, 2 * nc + 1, -5, 5);
      const RVec w = crab.synthesis() * c;
      const std::vector<double> wv(w.data(), w.data() + n);
      const auto limited = constraint::band_limit(wv, nc);
      for (int k = 0; k < n; ++k) CHECK(std::abs(limited[k] - wv[k]) < 1e-10);

      std::vector<double> raw(n);
      for (double& x : raw) x = std::uniform_real_distribution<double>(-10, 10)(rng);
      const auto target = constraint::band_limit(raw, nc);
      const RVec fitted = crab.initial({target, 0.5});
      const RVec back = crab.synthesis() * fitted;
      for (int k = 0; k < n; ++k) CHECK(std::abs(back[k] - target[k]) < 1e-10);
    }
  }

  TEST_CASE("constrained crab clamps and leaks outside its basis band") {
    const auto problem = test::x2_problem(3, 60, 30.0, 5, 10.0);
    const auto r = run_crab_like(problem, {test::flat_seed(60, 30.0)}, short_run(30));
    CHECK(r.method == "crab");
    const auto& v = r.pulses[0].values;
    CHECK(v.front() == 0.0);
    CHECK(v.back() == 0.0);
    for (double x : v) CHECK(std::abs(x) <= 10.0);
    CHECK(out_of_band(v, 5) > 1e-6);
  }

  TEST_CASE("cocoa at full band without constraints matches grape") {
    for (int n : {33, 32}) {
      const auto problem = test::x2_problem(2, n, 20.0, constraint::max_harmonics(n));
      const optimize::CocoaParametrization cocoa(problem, false, true);
      const GrapeParametrization grape(problem, false);
      std::mt19937_64 rng(23);
      const RVec omega = test::random_vector(rng, n, -20, 20);
      const auto a = optimize::evaluate(problem, cocoa, {omega}, RVec(), true);
      const auto b = optimize::evaluate(problem, grape, {omega}, RVec(), true);
      const double diff = (a.gradients[0] - b.gradients[0]).cwiseAbs().maxCoeff();
      INFO("N = " << n << " max gradient difference " << diff);
      if (n % 2 == 1) {
        CHECK(diff < 1e-10);
      } else {
        // Bin N/2 lies outside {0..Int((N-1)/2)} U {N-Int((N-1)/2)..N-1}.
        CHECK(diff > 1e-10);
      }
    }
  }
}
