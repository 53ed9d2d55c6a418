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

#include "qoc/io/results.hpp"

#include <cmath>
#include <fstream>
#include <iomanip>
#include <sstream>

#include <unistd.h>

#include "qoc/constraint/spectral.hpp"
#include "qoc/error.hpp"
#include "qoc/io/config.hpp"

namespace qoc::io {

namespace {

std::ofstream open(const fs::path& file) {
  std::ofstream out(file);
  if (!out) throw Error(Errc::Io, "cannot write '" + file.string() + "'");
  out << std::setprecision(17);
  return out;
}

void write_json(const fs::path& file, const json& j) {
  std::ofstream out = open(file);
  out << j.dump(2) << '\n';
}

json one_pulse(const pulse::FourierPulse& p) {
  json a = json::array();
  json phi = json::array();
  for (const pulse::Harmonic& h : p.harmonics) {
    a.push_back(h.amplitude);
    phi.push_back(h.phase);
  }
  return {{"a0", p.a0}, {"A", a}, {"phi", phi}, {"f0", p.base_frequency()}, {"T", p.gate_time}};
}

pulse::FourierPulse parse_pulse(const json& j) {
  pulse::FourierPulse p;
  p.a0 = j.at("a0").get<double>();
  p.gate_time = j.at("T").get<double>();
  const auto& a = j.at("A");
  const auto& phi = j.at("phi");
  if (a.size() != phi.size()) throw Error(Errc::LengthMismatch, "pulse.json A and phi differ in length");
  for (std::size_t i = 0; i < a.size(); ++i) p.harmonics.push_back({a[i].get<double>(), phi[i].get<double>()});
  return p;
}

void write_spectrum(const fs::path& file, const pulse::PwcSequence& p) {
  const auto x = constraint::dft(p.values);
  std::ofstream out = open(file);
  out << "index,freq_ghz,magnitude,phase\n";
  for (std::size_t m = 0; m < x.size(); ++m) {
    out << m << ',' << constraint::bin_frequency(static_cast<int>(m), p.size(), p.gate_time()) << ','
        << std::abs(x[m]) << ',' << std::arg(x[m]) << '\n';
  }
}

const char* kStates[4] = {"00", "01", "10", "11"};

}  // namespace

void ensure_writable(const fs::path& target, bool force) {
  if (fs::exists(target) && !force) {
    throw Error(Errc::Io, "'" + target.string() + "' already exists (use --force to overwrite)");
  }
}

StagedDirectory::StagedDirectory(fs::path target, bool force) : target_(std::move(target)), force_(force) {
  ensure_writable(target_, force_);
  const fs::path parent = target_.has_parent_path() ? target_.parent_path() : fs::path(".");
  fs::create_directories(parent);
  staging_ = parent / ("." + target_.filename().string() + ".staging-" + std::to_string(::getpid()));
  fs::remove_all(staging_);
  fs::create_directory(staging_);
}

StagedDirectory::~StagedDirectory() {
  if (committed_) return;
  std::error_code ec;
  fs::remove_all(staging_, ec);
}

void StagedDirectory::commit() {
  ensure_writable(target_, force_);
  if (fs::exists(target_)) fs::remove_all(target_);
  fs::rename(staging_, target_);
  committed_ = true;
}

json pulse_json(const std::vector<pulse::FourierPulse>& reports) {
  if (reports.empty()) return json::object();
  json out = one_pulse(reports.front());
  if (reports.size() > 1) {
    json all = json::array();
    for (const pulse::FourierPulse& p : reports) all.push_back(one_pulse(p));
    out["drives"] = all;
  }
  return out;
}

std::vector<pulse::FourierPulse> read_pulse_json(const fs::path& file) {
  std::ifstream in(file);
  if (!in) throw Error(Errc::Io, "cannot read '" + file.string() + "'");
  json j = json::parse(in, nullptr, false);
  if (j.is_discarded() || !j.is_object()) throw Error(Errc::TypeMismatch, "'" + file.string() + "' is not a pulse file");
  std::vector<pulse::FourierPulse> out;
  try {
    if (j.contains("drives")) {
      for (const json& d : j["drives"]) out.push_back(parse_pulse(d));
    } else {
      out.push_back(parse_pulse(j));
    }
  } catch (const json::exception& e) {
    throw Error(Errc::TypeMismatch, "'" + file.string() + "': " + e.what());
  }
  return out;
}

json meta_json(const scenarios::ScenarioResult& r, double wall_seconds) {
  const optimize::OptimizationResult& o = r.result;
  json theta = json::array();
  for (Eigen::Index i = 0; i < o.theta.size(); ++i) theta.push_back(o.theta[i]);
  return {
      {"method", o.method},
      {"seed", r.scenario.seed},
      {"parameters", to_json(r.scenario)},
      {"stop_reason", optimize::stop_reason_name(o.reason)},
      {"converged", o.converged()},
      {"iterations", o.iterations},
      {"best_iteration", o.best_iteration},
      {"best_infidelity", o.best_infidelity},
      {"seed_infidelity", r.seed_infidelity},
      {"theta", theta},
      {"optimizer_seconds", o.seconds},
      {"wall_time_s", wall_seconds},
      {"checks",
       {{"max_amplitude", r.max_amplitude},
        {"within_bounds", r.within_bounds},
        {"max_endpoint", r.max_endpoint},
        {"out_of_band_ratio", r.spectral_leakage}}},
  };
}

void write_run_files(const fs::path& dir, const scenarios::ScenarioResult& r, double wall_seconds) {
  const optimize::OptimizationResult& o = r.result;
  write_json(dir / "pulse.json", pulse_json(o.reports));
  write_json(dir / "meta.json", meta_json(r, wall_seconds));

  {
    std::ofstream out = open(dir / "trace.csv");
    out << "iteration,infidelity,best_infidelity,gradient_norm\n";
    for (std::size_t i = 0; i < o.trace.size(); ++i) {
      out << i << ',' << o.trace[i] << ',' << o.best_trace[i] << ','
          << (i < o.gradient_norms.size() ? o.gradient_norms[i] : 0.0) << '\n';
    }
  }

  for (std::size_t d = 0; d < o.pulses.size(); ++d) {
    const std::string name = d == 0 ? "spectrum.csv" : "spectrum_" + std::to_string(d) + ".csv";
    write_spectrum(dir / name, o.pulses[d]);
  }

  {
    std::ofstream out = open(dir / "waveform.csv");
    out << "t_ns";
    for (std::size_t d = 0; d < o.pulses.size(); ++d) out << ",drive" << d << "_mhz";
    out << '\n';
    const int n = o.pulses.empty() ? 0 : o.pulses.front().size();
    for (int k = 0; k < n; ++k) {
      out << k * o.pulses.front().dt;
      for (const pulse::PwcSequence& p : o.pulses) out << ',' << p.values[static_cast<std::size_t>(k)];
      out << '\n';
    }
  }

  if (r.populations.size() > 0) {
    std::ofstream out = open(dir / "populations.csv");
    out << "t_ns";
    for (const char* i : kStates) {
      for (const char* f : kStates) out << ",p_" << i << "_to_" << f;
    }
    out << '\n';
    const double dt = o.pulses.empty() ? 0.0 : o.pulses.front().dt;
    for (Eigen::Index k = 0; k < r.populations.rows(); ++k) {
      out << static_cast<double>(k) * dt;
      for (Eigen::Index c = 0; c < r.populations.cols(); ++c) out << ',' << r.populations(k, c);
      out << '\n';
    }
  }
}

void write_summary(const fs::path& file, const std::vector<scenarios::SweepPoint>& points) {
  std::ofstream out = open(file);
  out << "value,best_infidelity,iterations,error\n";
  for (const scenarios::SweepPoint& p : points) {
    std::string err = p.error;
    for (char& c : err) {
      if (c == ',' || c == '\n' || c == '"') c = ' ';
    }
    out << p.value << ',';
    if (p.ok()) {
      out << p.result->result.best_infidelity << ',' << p.result->result.iterations;
    } else {
      out << ',';
    }
    out << ',' << err << '\n';
  }
}

std::string point_directory(scenarios::SweepAxis axis, double value) {
  std::ostringstream os;
  os << scenarios::axis_name(axis) << '_' << value;
  return os.str();
}

}  // namespace qoc::io
