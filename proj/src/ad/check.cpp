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

#include "qoc/ad/check.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "qoc/error.hpp"

namespace qoc::ad {

double evaluate(const TapeFunction& f, const RVec& x, RVec* grad) {
  Tape tape;
  const Var leaf = tape.leaf(Value(RMat(x)), grad != nullptr);
  const Var out = f(tape, leaf);
  const double value = out.value().item();
  if (grad) {
    const GradientMap g = backward(tape, out);
    *grad = g.at(leaf).real();
  }
  return value;
}

GradientCheck compare_gradient(const TapeFunction& f, const RVec& x, double h) {
  GradientCheck result;
  evaluate(f, x, &result.ad);
  result.fd.resize(x.size());
  RVec probe = x;
  for (Eigen::Index i = 0; i < x.size(); ++i) {
    probe[i] = x[i] + h;
    const double up = evaluate(f, probe);
    probe[i] = x[i] - h;
    const double down = evaluate(f, probe);
    probe[i] = x[i];
    if (!std::isfinite(up) || !std::isfinite(down)) {
      throw Error(Errc::NonFinite, "non-finite value at probe " + std::to_string(i));
    }
    result.fd[i] = (up - down) / (2.0 * h);
    const double err = std::abs(result.ad[i] - result.fd[i]) / std::max(std::abs(result.fd[i]), 1e-12);
    result.max_relative_error = std::max(result.max_relative_error, err);
  }
  return result;
}

double check_gradient(const TapeFunction& f, const RVec& x, double h) {
  return compare_gradient(f, x, h).max_relative_error;
}

}  // namespace qoc::ad
