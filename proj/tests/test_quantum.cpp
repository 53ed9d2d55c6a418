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

#include <algorithm>
#include <cmath>
#include <numbers>
#include <random>

#include "doctest.h"
#include "helpers.hpp"
#include "qoc/ad/check.hpp"
#include "qoc/error.hpp"
#include "qoc/quantum/evolve.hpp"
#include "qoc/quantum/fidelity.hpp"
#include "qoc/quantum/frame.hpp"
#include "qoc/quantum/model.hpp"
#include "qoc/quantum/problem.hpp"
#include "qoc/quantum/subspace.hpp"
#include "qoc/quantum/targets.hpp"
#include "qoc/units.hpp"

using namespace qoc;
using namespace qoc::quantum;
using test::max_abs;

namespace {

constexpr double kPi = std::numbers::pi;

DeviceModel reference_model1(int levels = 4) { return build_model1(5.270, 4.670, -220, -220, 25.4, levels); }

double hermiticity(const CMat& h) { return max_abs(CMat(h - h.adjoint())); }

CMat diag_phases(std::initializer_list<double> phases) {
  CMat d = CMat::Zero(static_cast<Eigen::Index>(phases.size()), static_cast<Eigen::Index>(phases.size()));
  Eigen::Index i = 0;
  for (double p : phases) d(i, i) = std::polar(1.0, p), ++i;
  return d;
}

ControlTask small_task(int slices, double t) {
  ControlTask task;
  task.target = kron(CMat(CMat::Identity(2, 2)), pauli_x());
  task.gate_time = t;
  task.slices = slices;
  task.harmonics = (slices - 1) / 2;
  task.window = constraint::AmplitudeWindowConfig::for_gate(-30, 30, t);
  return task;
}

}  // namespace

TEST_SUITE("quantum") {
  TEST_CASE("model 1 at four levels is a 16 dimensional Hermitian operator") {
    const DeviceModel m = reference_model1();
    CHECK(m.dimension() == 16);
    const CMat h = static_hamiltonian(m, false);
    CHECK(h.rows() == 16);
    CHECK(hermiticity(h) < 1e-12);
    CHECK(hermiticity(static_hamiltonian(m, true)) < 1e-12);
    CHECK(m.label_index(1, 0) == 4);
    CHECK(m.label_index(0, 1) == 1);
  }

  TEST_CASE("decoupled harmonic modes have ladder spectra") {
    const DeviceModel m = build_model1(5.0, 4.0, 0, 0, 0, 3);
    const CMat h = static_hamiltonian(m, false);
    const RVec d = h.diagonal().real();
    std::vector<double> eig(d.data(), d.data() + 9);
    std::vector<double> expected;
    for (int a = 0; a < 3; ++a)
      for (int b = 0; b < 3; ++b) expected.push_back((a * 5.0 + b * 4.0) * units::kGHz);
    std::sort(eig.begin(), eig.end());
    std::sort(expected.begin(), expected.end());
    for (int i = 0; i < 9; ++i) CHECK(eig[i] == doctest::Approx(expected[i]).epsilon(1e-14));
    CHECK(max_abs(CMat(h - CMat(h.diagonal().asDiagonal()))) == 0.0);
  }

  TEST_CASE("levels below two are rejected") {
    CHECK_THROWS_AS(build_model1(5, 4, -200, -200, 10, 1), Error);
    CHECK_THROWS_AS(build_model2(6.2, 6.8, 7.15, -350, -350, 250, 250, 3, 1), Error);
  }

  TEST_CASE("model 2 is Hermitian and conserves excitations without anharmonicity") {
    const DeviceModel m = build_model2(6.2, 6.8, 7.15, -350, -350, 250, 250, 3, 3);
    CHECK(m.dimension() == 27);
    CHECK(hermiticity(static_hamiltonian(m, false)) < 1e-12);
    const DeviceModel linear = build_model2(6.2, 6.8, 7.15, 0, 0, 250, 250, 3, 3);
    const CMat h = static_hamiltonian(linear, false);
    CMat total = CMat::Zero(27, 27);
    for (int j = 0; j < 3; ++j) total += number(linear, j);
    CHECK(max_abs(CMat(h * total - total * h)) < 1e-12);
  }

  TEST_CASE("model 2 without coupling is diagonal") {
    const DeviceModel m = build_model2(6.2, 6.8, 7.15, -350, -350, 0, 0, 3, 3);
    const CMat h = static_hamiltonian(m, false);
    CHECK(max_abs(CMat(h - CMat(h.diagonal().asDiagonal()))) == 0.0);
  }

  TEST_CASE("ladder operators") {
    const DeviceModel m = reference_model1(3);
    const CMat a = annihilation(m, 1);
    const CMat n = number(m, 1);
    CHECK(max_abs(CMat(a.adjoint() * a - n)) < 1e-15);
    const auto occ = occupations(m, 0);
    CHECK(occ[m.index({2, 1})] == 2);
  }

  TEST_CASE("dressed basis equals the bare basis without coupling") {
    const DeviceModel m = build_model1(5.270, 4.670, -220, -220, 0, 4);
    const Subspace sub = dressed_subspace(static_hamiltonian(m, true), computational_labels(m));
    const std::vector<int> labels = computational_labels(m);
    for (int c = 0; c < 4; ++c) {
      CMat e = CMat::Zero(16, 1);
      e(labels[c], 0) = 1.0;
      CHECK(max_abs(CMat(sub.basis.col(c) - e)) == 0.0);
    }
    CHECK(sub.zz() == doctest::Approx(0.0).scale(1.0));
  }

  TEST_CASE("model 1 dressed states stay close to their labels") {
    const DeviceModel m = reference_model1();
    const Subspace sub = dressed_subspace(static_hamiltonian(m, true), computational_labels(m));
    for (double o : sub.overlaps) CHECK(o > 0.9);
    CHECK(sub.overlaps[0] > 0.99);
    const CMat p = sub.projector();
    CHECK(max_abs(CMat(p * p - p)) < 1e-12);
    CHECK(p.trace().real() == doctest::Approx(4.0).epsilon(1e-12));
    CHECK(max_abs(CMat(sub.basis.adjoint() * sub.basis - CMat::Identity(4, 4))) < 1e-12);
    CHECK(sub.qubit_frequency(1) / units::kGHz == doctest::Approx(4.670).epsilon(1e-2));
    CHECK(sub.zz() < 0.0);
    CHECK(sub.mean_qubit_frequency(1) == doctest::Approx(sub.qubit_frequency(1) + sub.zz() / 2).epsilon(1e-14));
  }

  TEST_CASE("an unrecognizable dressed state is rejected") {
    const double s = 0.5;
    CMat u(4, 4);
    u << s, s, s, s, s, -s, s, -s, s, s, -s, -s, s, -s, -s, s;
    const CMat h = u * CMat(RVec::LinSpaced(4, 1, 4).cast<cplx>().asDiagonal()) * u.adjoint();
    try {
      dressed_subspace(h, {0, 1, 2, 3});
      FAIL("expected AmbiguousAssignment");
    } catch (const Error& e) {
      CHECK(e.code() == Errc::AmbiguousAssignment);
    }
  }

  TEST_CASE("a common resonant frame has no detunings or beats") {
    DeviceModel m = build_model1(5.0, 5.0, 0, 0, 0, 3);
    m.drives = {{0, 5.0 * units::kGHz}, {1, 5.0 * units::kGHz}};
    const FrameHamiltonian f = rotating_frame(m);
    CHECK(max_abs(f.static_part) < 1e-12);
    for (const OscillatingTerm& o : f.oscillating) CHECK(o.beat == 0.0);
  }

  TEST_CASE("two drives at different frequencies produce a beat") {
    DeviceModel m = reference_model1(3);
    m.drives = {{0, 5.27 * units::kGHz}, {1, 4.67 * units::kGHz}};
    const FrameHamiltonian f = rotating_frame(m);
    REQUIRE(!f.oscillating.empty());
    bool found = false;
    for (const OscillatingTerm& o : f.oscillating) found |= std::abs(std::abs(o.beat) - 0.6 * units::kGHz) < 1e-9;
    CHECK(found);
    for (double t : {0.0, 0.37, 12.5, 49.9}) CHECK(hermiticity(f.at(t, {0.01, -0.02})) < 1e-12);
  }

  TEST_CASE("a frame needs every drive frequency") {
    DeviceModel m = reference_model1(3);
    CHECK_THROWS_AS(rotating_frame(m), Error);
    m.drives = {{1, std::nullopt}};
    CHECK_THROWS_AS(rotating_frame(m), Error);
  }

  TEST_CASE("free evolution") {
    DeviceModel m = build_model1(5.0, 5.0, 0, 0, 0, 2);
    m.drives = {{0, 5.0 * units::kGHz}};
    const SliceGenerators gen = discretize(rotating_frame(m), 10, 20.0, units::kMHz);
    const pulse::PwcSequence zero{std::vector<double>(10, 0.0), 2.0};
    CHECK(max_abs(CMat(evolve(gen, {zero}) - CMat::Identity(4, 4))) < 1e-14);

    DeviceModel d = build_model1(5.0, 4.9, -200, -200, 0, 2);
    d.drives = {{0, 5.0 * units::kGHz}};
    const FrameHamiltonian f = rotating_frame(d);
    const CMat u = evolve(discretize(f, 10, 20.0, units::kMHz), {zero});
    const RVec diag = f.static_part.diagonal().real();
    for (int i = 0; i < 4; ++i) CHECK(std::abs(u(i, i) - std::polar(1.0, -diag[i] * 20.0)) < 1e-12);
  }

  TEST_CASE("a resonant pulse of area pi/2 is an X gate") {
    DeviceModel m;
    m.modes = {{"q", 2, 5.0 * units::kGHz, 0.0}};
    m.drives = {{0, 5.0 * units::kGHz}};
    const double t = 20.0;
    const SliceGenerators gen = discretize(rotating_frame(m), 16, t, units::kMHz);
    const double amp = kPi / 2 / (t * units::kMHz);
    const pulse::PwcSequence p{std::vector<double>(16, amp), t / 16};
    const CMat u = evolve(gen, {p});
    CHECK(fidelity_from_matrix(CMat(pauli_x().adjoint() * u)) == doctest::Approx(1.0).epsilon(1e-6));
  }

  TEST_CASE("evolution checks pulse shapes") {
    DeviceModel m = reference_model1(2);
    m.drives = {{1, 4.67 * units::kGHz}};
    const SliceGenerators gen = discretize(rotating_frame(m), 8, 10.0, units::kMHz);
    const pulse::PwcSequence bad{std::vector<double>(7, 0.0), 10.0 / 7};
    CHECK_THROWS_AS(evolve(gen, {bad}), Error);
    CHECK_THROWS_AS(evolve(gen, std::vector<pulse::PwcSequence>{}), Error);
  }

  TEST_CASE("substeps refine propagation without changing the controls") {
    DeviceModel m = reference_model1(3);
    const Subspace sub = dressed_subspace(static_hamiltonian(m, true), computational_labels(m));
    m.drives = {{0, sub.qubit_frequency(0)}, {1, sub.qubit_frequency(1)}};
    const FrameHamiltonian f = rotating_frame(m);
    const int n = 20;
    const double t = 10.0;
    std::vector<double> a(n), b(n);
    for (int k = 0; k < n; ++k) {
      a[k] = 8.0 * std::sin(0.3 * k);
      b[k] = 5.0 - 0.2 * k;
    }
    const SliceGenerators coarse = discretize(f, n, t, units::kMHz, 4);
    CHECK(coarse.blocks() == 80);
    CHECK(coarse.dt == doctest::Approx(0.5));
    std::vector<double> fa, fb;
    for (int k = 0; k < n; ++k) {
      for (int r = 0; r < 4; ++r) {
        fa.push_back(a[k]);
        fb.push_back(b[k]);
      }
    }
    const CMat u = evolve(coarse, {pulse::PwcSequence{a, 0.5}, pulse::PwcSequence{b, 0.5}});
    const CMat fine = evolve(discretize(f, 4 * n, t, units::kMHz), {pulse::PwcSequence{fa, 0.125}, pulse::PwcSequence{fb, 0.125}});
    CHECK(max_abs(CMat(u - fine)) < 1e-13);

    ad::Tape tape;
    const std::vector<ad::Var> leaves = {tape.leaf(ad::Value::vector(a)), tape.leaf(ad::Value::vector(b))};
    CHECK(max_abs(CMat(evolve(coarse, leaves).value().complex() - u)) < 1e-13);

    std::vector<CMat> partials;
    evolve(coarse, {pulse::PwcSequence{a, 0.5}, pulse::PwcSequence{b, 0.5}}, &partials);
    CHECK(partials.size() == static_cast<std::size_t>(n));
    CHECK(max_abs(CMat(partials.back() - u)) == 0.0);
    CHECK_THROWS_AS(discretize(f, n, t, units::kMHz, 0), Error);
  }

  TEST_CASE("slice averaged phase") {
    CHECK(std::abs(slice_average_phase(0.0, 3.0, 0.5) - cplx(1, 0)) < 1e-15);
    const cplx z = slice_average_phase(2.0, 0.0, kPi);
    CHECK(std::abs(z) < 1e-15);
    const cplx small = slice_average_phase(1e-9, 1.0, 0.1);
    CHECK(std::abs(small - std::polar(1.0, 1e-9 * 1.05)) < 1e-14);
  }

  TEST_CASE("rotating frame agrees with a finely sliced lab frame") {
    DeviceModel m = build_model1(5.270, 4.670, -220, -220, 0, 3);
    m.drives = {{1, 4.670 * units::kGHz}};
    const double t = 50.0;
    const int n = 148;
    std::vector<double> shape(n);
    for (int k = 0; k < n; ++k) shape[k] = 10.0 * std::sin(kPi * (k + 0.5) / n);
    const CMat u_rot = evolve(discretize(rotating_frame(m), n, t, units::kMHz), {pulse::PwcSequence{shape, t / n}});
    std::vector<double> fine;
    for (double v : shape)
      for (int r = 0; r < 256; ++r) fine.push_back(v);
    const CMat u_lab = evolve(discretize(lab_frame(m), n * 256, t, units::kMHz), {pulse::PwcSequence{fine, t / (n * 256)}});
    const ad::RMat pop_rot = u_rot.cwiseAbs2();
    const ad::RMat pop_lab = u_lab.cwiseAbs2();
    CHECK(test::max_abs(ad::RMat(pop_rot - pop_lab)) < 1e-3);
    CHECK(pop_rot(m.label_index(0, 1), m.label_index(0, 0)) > 0.1);
  }

  TEST_CASE("average gate fidelity reference cases") {
    CHECK(fidelity_from_matrix(pauli_x()) == doctest::Approx(1.0 / 3).epsilon(1e-15));
    CHECK(fidelity_from_matrix(CMat(CMat::Identity(4, 4))) == 1.0);

    const DeviceModel m = build_model1(5.270, 4.670, -220, -220, 0, 3);
    const Subspace sub = dressed_subspace(static_hamiltonian(m, true), computational_labels(m));
    CMat u = CMat::Identity(9, 9);
    const int i11 = m.label_index(1, 1);
    const int i22 = m.index({2, 2});
    u(i11, i11) = 0;
    u(i22, i22) = 0;
    u(i11, i22) = 1;
    u(i22, i11) = 1;
    CHECK(avg_gate_fidelity(u, CMat::Identity(4, 4), sub) == doctest::Approx(0.6).epsilon(1e-15));
    CHECK(infidelity(CMat(CMat::Identity(9, 9)), CMat::Identity(4, 4), sub) == 0.0);
  }

  TEST_CASE("fidelity lies in [0, 1] and infidelity is its complement") {
    std::mt19937_64 rng(9);
    const DeviceModel m = reference_model1(3);
    const Subspace sub = dressed_subspace(static_hamiltonian(m, true), computational_labels(m));
    for (int trial = 0; trial < 20; ++trial) {
      const CMat u = test::random_unitary(rng, 9);
      const CMat target = test::random_unitary(rng, 4);
      const double f = avg_gate_fidelity(u, target, sub);
      CHECK(f >= 0.0);
      CHECK(f <= 1.0);
      CHECK(infidelity(u, target, sub) == doctest::Approx(1.0 - f).epsilon(1e-15));
    }
  }

  TEST_CASE("tape fidelity matches the plain one") {
    std::mt19937_64 rng(10);
    const CMat m = test::random_complex(rng, 4, 4, 0.5);
    ad::Tape tape;
    const ad::Var v = tape.leaf(ad::Value(m));
    CHECK(fidelity_from_matrix(v).value().item() == doctest::Approx(fidelity_from_matrix(m)).epsilon(1e-15));
    CHECK(infidelity_from_matrix(v).value().item() == doctest::Approx(1 - fidelity_from_matrix(m)).epsilon(1e-14));
  }

  TEST_CASE("cnot family") {
    CHECK(max_abs(CMat(cnot_target(RVec(RVec::Zero(6))) - cnot())) == 0.0);
    CHECK(max_abs(CMat(rotation(0, kPi) - CMat(cplx(0, -1) * pauli_x()))) < 1e-15);

    std::mt19937_64 rng(12);
    const RVec theta = test::random_vector(rng, 6, -kPi, kPi);
    const CMat u = cnot_target(theta);
    CHECK(max_abs(CMat(u * u.adjoint() - CMat::Identity(4, 4))) < 1e-14);
    CHECK(fidelity_from_matrix(CMat(u.adjoint() * u)) == doctest::Approx(1.0).epsilon(1e-15));

    ad::Tape tape;
    const ad::Var t = tape.leaf(ad::Value(ad::RMat(theta)));
    CHECK(max_abs(CMat(cnot_target(t).value().complex() - u)) < 1e-14);
  }

  TEST_CASE("cnot with pure z rotations factors into phases around CNOT") {
    const double a = 0.7;
    const double b = -1.3;
    RVec theta = RVec::Zero(6);
    theta[2] = a;
    theta[5] = b;
    const CMat phases = kron(rotation(2, a), rotation(2, b));
    CHECK(max_abs(CMat(phases - CMat(phases.diagonal().asDiagonal()))) == 0.0);
    const CMat u = cnot_target(theta);
    CHECK(max_abs(CMat(u - cnot() * phases)) < 1e-15);
    const CMat left = cnot() * phases * cnot().adjoint();
    CHECK(max_abs(CMat(left - CMat(left.diagonal().asDiagonal()))) < 1e-15);
    CHECK(max_abs(CMat(u - left * cnot())) < 1e-15);
  }

  TEST_CASE("problem propagators are unitary and gradients match finite differences") {
    const int n = 32;
    DeviceModel m = reference_model1(2);
    const Subspace sub = dressed_subspace(static_hamiltonian(m, true), computational_labels(m));
    m.drives = {{1, sub.qubit_frequency(1)}};
    const Problem problem(m, small_task(n, 20.0));
    std::mt19937_64 rng(13);
    const ad::RVec omega = test::random_vector(rng, n, -10, 10);
    const pulse::PwcSequence p{std::vector<double>(omega.data(), omega.data() + n), 20.0 / n};
    const CMat u = problem.propagate({p});
    CHECK(max_abs(CMat(u * u.adjoint() - CMat::Identity(4, 4))) < 1e-10);

    const auto f = [&](ad::Tape&, ad::Var x) {
      const std::vector<ad::Var> pulses = {x};
      return problem.infidelity(pulses, std::nullopt);
    };
    ad::RVec grad;
    const double cost = ad::evaluate(f, omega, &grad);
    CHECK(cost == doctest::Approx(problem.infidelity({p})).epsilon(1e-13));
    CHECK(ad::check_gradient(f, omega, 1e-5) < 1e-5);
  }

  TEST_CASE("readout frames differ only by qubit phases") {
    DeviceModel m = reference_model1(3);
    const Subspace sub = dressed_subspace(static_hamiltonian(m, true), computational_labels(m));
    m.drives = {{1, sub.qubit_frequency(1)}};
    std::mt19937_64 rng(14);
    const int n = 30;
    const ad::RVec omega = test::random_vector(rng, n, -10, 10);
    const pulse::PwcSequence p{std::vector<double>(omega.data(), omega.data() + n), 1.0};
    for (ReadoutFrame r : {ReadoutFrame::MeanDressed, ReadoutFrame::Transition, ReadoutFrame::Dressed}) {
      ControlTask task = small_task(n, 30.0);
      task.readout = r;
      const Problem problem(m, task);
      const CMat g = problem.readout(problem.propagate({p}));
      ControlTask mean = task;
      mean.readout = ReadoutFrame::MeanDressed;
      const Problem reference_problem(m, mean);
      const CMat reference = reference_problem.readout(reference_problem.propagate({p}));
      CHECK(max_abs(CMat(g.cwiseAbs() - reference.cwiseAbs())) < 1e-12);
    }
  }

  TEST_CASE("population rows are probability distributions") {
    DeviceModel m = reference_model1(3);
    const Subspace sub = dressed_subspace(static_hamiltonian(m, true), computational_labels(m));
    m.drives = {{1, sub.qubit_frequency(1)}};
    const Problem problem(m, small_task(20, 20.0));
    const pulse::PwcSequence p{std::vector<double>(20, 6.0), 1.0};
    const ad::RMat pop = problem.populations({p});
    CHECK(pop.rows() == 21);
    CHECK(pop.cols() == 16);
    CHECK(pop(0, 0) == doctest::Approx(1.0));
    for (Eigen::Index k = 0; k < pop.rows(); ++k) {
      for (int i = 0; i < 4; ++i) CHECK(pop.row(k).segment(4 * i, 4).sum() <= 1.0 + 1e-12);
    }
  }

  TEST_CASE("control task validation") {
    ControlTask task = small_task(32, 20.0);
    CHECK_NOTHROW(task.validate());
    task.harmonics = 16;
    CHECK_THROWS_AS(task.validate(), Error);
    task = small_task(32, 20.0);
    task.slices = 1;
    CHECK_THROWS_AS(task.validate(), Error);
  }
}
