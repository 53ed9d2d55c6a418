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

#include "qoc/io/config.hpp"

#include <fstream>
#include <set>
#include <sstream>

namespace qoc::io {

namespace {

using scenarios::Scenario;

std::string join(const std::string& prefix, const std::string& key) {
  return prefix.empty() ? key : prefix + "." + key;
}

// Type-checked field access that records problems instead of throwing.
class Reader {
 public:
  Reader(const json& obj, std::string prefix, std::vector<ConfigIssue>& issues)
      : obj_(obj), prefix_(std::move(prefix)), issues_(issues) {}

  void allow(std::initializer_list<const char*> keys) {
    const std::set<std::string> ok(keys.begin(), keys.end());
    for (const auto& [k, v] : obj_.items()) {
      if (!ok.count(k)) issues_.push_back({Errc::InvalidConfig, key(k), "unknown key '" + key(k) + "'"});
    }
  }

  bool has(const char* k) const { return obj_.contains(k); }
  std::string key(const std::string& k) const { return join(prefix_, k); }

  void mismatch(const char* k, const char* expected) {
    issues_.push_back({Errc::TypeMismatch, key(k), "key '" + key(k) + "' must be " + expected});
  }

  void number(const char* k, double& out) {
    if (!has(k)) return;
    if (!obj_[k].is_number()) return mismatch(k, "a number");
    out = obj_[k].get<double>();
  }

  void integer(const char* k, int& out) {
    if (!has(k)) return;
    if (!obj_[k].is_number_integer()) return mismatch(k, "an integer");
    out = obj_[k].get<int>();
  }

  void unsigned_integer(const char* k, std::uint64_t& out) {
    if (!has(k)) return;
    if (!obj_[k].is_number_unsigned()) return mismatch(k, "a non-negative integer");
    out = obj_[k].get<std::uint64_t>();
  }

  void boolean(const char* k, bool& out) {
    if (!has(k)) return;
    if (!obj_[k].is_boolean()) return mismatch(k, "a boolean");
    out = obj_[k].get<bool>();
  }

  void string(const char* k, std::string& out) {
    if (!has(k)) return;
    if (!obj_[k].is_string()) return mismatch(k, "a string");
    out = obj_[k].get<std::string>();
  }

  const json* object(const char* k) {
    if (!has(k)) return nullptr;
    if (!obj_[k].is_object()) {
      mismatch(k, "an object");
      return nullptr;
    }
    return &obj_[k];
  }

  void numbers(const char* k, std::vector<double>& out) {
    if (!has(k)) return;
    const json& v = obj_[k];
    if (!v.is_array()) return mismatch(k, "an array of numbers");
    std::vector<double> tmp;
    for (const json& e : v) {
      if (!e.is_number()) return mismatch(k, "an array of numbers");
      tmp.push_back(e.get<double>());
    }
    out = std::move(tmp);
  }

  void bounds(const char* k, double& lo, double& hi) {
    if (!has(k)) return;
    std::vector<double> v;
    numbers(k, v);
    if (!obj_[k].is_array()) return;
    if (v.size() != 2) return mismatch(k, "a [lower, upper] pair");
    lo = v[0];
    hi = v[1];
  }

  std::vector<ConfigIssue>& issues() { return issues_; }

 private:
  const json& obj_;
  std::string prefix_;
  std::vector<ConfigIssue>& issues_;
};

void read_optimizer_kind(Reader& r, const char* k, optimize::OptimizerKind& out) {
  std::string name;
  r.string(k, name);
  if (name.empty()) return;
  if (name == "adam") {
    out = optimize::OptimizerKind::Adam;
  } else if (name == "sgd") {
    out = optimize::OptimizerKind::Sgd;
  } else {
    r.issues().push_back({Errc::InvalidConfig, r.key(k), "key '" + r.key(k) + "' must be adam or sgd"});
  }
}

void read_method(Reader& r, const char* k, scenarios::Method& out) {
  std::string name;
  r.string(k, name);
  if (!r.has(k) || !name.size()) return;
  try {
    out = scenarios::parse_method(name);
  } catch (const Error&) {
    r.issues().push_back({Errc::UnknownMethod, r.key(k),
                          "key '" + r.key(k) + "': unknown method '" + name + "' (expected cocoa, grape or crab)"});
  }
}

void read_axis(Reader& r, const char* k, scenarios::SweepAxis& out) {
  std::string name;
  r.string(k, name);
  if (!r.has(k) || name.empty()) return;
  try {
    out = scenarios::parse_axis(name);
  } catch (const Error&) {
    r.issues().push_back({Errc::InvalidConfig, r.key(k), "key '" + r.key(k) + "': unknown axis '" + name + "'"});
  }
}

const char* readout_name(quantum::ReadoutFrame f) {
  switch (f) {
    case quantum::ReadoutFrame::MeanDressed: return "mean";
    case quantum::ReadoutFrame::Transition: return "transition";
    case quantum::ReadoutFrame::Dressed: return "dressed";
  }
  return "?";
}

std::string optimizer_kind_name(optimize::OptimizerKind k) { return std::string(optimize::optimizer_name(k)); }

}  // namespace

std::string ParseOutcome::summary() const {
  std::ostringstream os;
  for (std::size_t i = 0; i < issues.size(); ++i) {
    os << (i ? "; " : "") << errc_name(issues[i].code) << ": " << issues[i].message;
  }
  return os.str();
}

json to_json(const Scenario& s) {
  json model = {{"kind", s.model.kind == scenarios::ModelKind::Model1 ? "model1" : "model2"},
                {"w1_ghz", s.model.w1_ghz},
                {"w2_ghz", s.model.w2_ghz},
                {"alpha1_mhz", s.model.alpha1_mhz},
                {"alpha2_mhz", s.model.alpha2_mhz},
                {"g_mhz", s.model.g_mhz},
                {"levels", s.model.levels}};
  if (s.model.kind == scenarios::ModelKind::Model2) {
    model["wc_ghz"] = s.model.wc_ghz;
    model["cavity_levels"] = s.model.cavity_levels;
  }
  json drives = json::array();
  for (const scenarios::DriveSpec& d : s.drives) {
    json j = {{"qubit", d.qubit}};
    if (d.frequency_ghz) {
      j["frequency_ghz"] = *d.frequency_ghz;
    } else {
      j["resonance"] = d.resonance;
    }
    drives.push_back(j);
  }
  json out = {
      {"name", s.name},
      {"description", s.description},
      {"model", model},
      {"drives", drives},
      {"target", s.target},
      {"gate_time", s.gate_time},
      {"harmonics", s.harmonics},
      {"substeps", s.substeps},
      {"bounds", {s.lower, s.upper}},
      {"readout", readout_name(s.readout)},
      {"init",
       {{"kind", s.init.kind == scenarios::InitKind::Random ? "random" : "swipht"},
        {"spread_mhz", s.init.spread_mhz},
        {"swipht_a", s.init.swipht_a},
        {"warmup_iterations", s.init.warmup_iterations},
        {"warmup_learning_rate", s.init.warmup_learning_rate}}},
      {"optimizer",
       {{"kind", optimizer_kind_name(s.optimizer.kind)},
        {"learning_rate", s.optimizer.learning_rate},
        {"phase_kind", optimizer_kind_name(s.phase_optimizer.kind)},
        {"phase_learning_rate", s.phase_optimizer.learning_rate},
        {"max_iterations", s.stop.max_iterations},
        {"cost_tolerance", s.stop.cost_tolerance},
        {"gradient_tolerance", s.stop.gradient_tolerance}}},
      {"method", scenarios::method_name(s.method)},
      {"crab_randomize", s.crab_randomize},
      {"seed", s.seed},
  };
  if (s.slices_per_ns > 0) {
    out["slices_per_ns"] = s.slices_per_ns;
  } else {
    out["slices"] = s.slices;
  }
  if (s.axis != scenarios::SweepAxis::None) {
    out["sweep"] = {{"axis", scenarios::axis_name(s.axis)}, {"values", s.sweep_values}};
  }
  return out;
}

Scenario scenario_from_json(const json& obj, Scenario s, const std::string& prefix, std::vector<ConfigIssue>& issues) {
  Reader r(obj, prefix, issues);
  r.allow({"base", "name", "description", "model", "drives", "target", "gate_time", "slices", "slices_per_ns",
           "harmonics", "substeps", "bounds", "readout", "init", "optimizer", "method", "crab_randomize", "seed", "sweep"});
  r.string("name", s.name);
  r.string("description", s.description);
  if (const json* m = r.object("model")) {
    Reader mr(*m, r.key("model"), issues);
    mr.allow({"kind", "w1_ghz", "w2_ghz", "wc_ghz", "alpha1_mhz", "alpha2_mhz", "g_mhz", "levels", "cavity_levels"});
    std::string kind;
    mr.string("kind", kind);
    if (kind == "model1") {
      s.model.kind = scenarios::ModelKind::Model1;
    } else if (kind == "model2") {
      s.model.kind = scenarios::ModelKind::Model2;
    } else if (mr.has("kind") && (*m)["kind"].is_string()) {
      issues.push_back({Errc::InvalidConfig, mr.key("kind"), "key '" + mr.key("kind") + "' must be model1 or model2"});
    }
    mr.number("w1_ghz", s.model.w1_ghz);
    mr.number("w2_ghz", s.model.w2_ghz);
    mr.number("wc_ghz", s.model.wc_ghz);
    mr.number("alpha1_mhz", s.model.alpha1_mhz);
    mr.number("alpha2_mhz", s.model.alpha2_mhz);
    mr.number("g_mhz", s.model.g_mhz);
    mr.integer("levels", s.model.levels);
    mr.integer("cavity_levels", s.model.cavity_levels);
  }
  if (r.has("drives")) {
    const json& d = obj["drives"];
    if (!d.is_array()) {
      r.mismatch("drives", "an array of drive objects");
    } else {
      std::vector<scenarios::DriveSpec> drives;
      for (std::size_t i = 0; i < d.size(); ++i) {
        const std::string key = r.key("drives") + "[" + std::to_string(i) + "]";
        if (!d[i].is_object()) {
          issues.push_back({Errc::TypeMismatch, key, "key '" + key + "' must be an object"});
          continue;
        }
        Reader dr(d[i], key, issues);
        dr.allow({"qubit", "resonance", "frequency_ghz"});
        scenarios::DriveSpec spec;
        if (!dr.has("qubit")) issues.push_back({Errc::MissingField, dr.key("qubit"), "missing key '" + dr.key("qubit") + "'"});
        dr.integer("qubit", spec.qubit);
        dr.string("resonance", spec.resonance);
        if (dr.has("frequency_ghz")) {
          double f = 0.0;
          dr.number("frequency_ghz", f);
          spec.frequency_ghz = f;
        }
        drives.push_back(spec);
      }
      s.drives = std::move(drives);
    }
  }
  r.string("target", s.target);
  r.number("gate_time", s.gate_time);
  if (r.has("slices")) {
    r.integer("slices", s.slices);
    s.slices_per_ns = 0.0;
  }
  r.number("slices_per_ns", s.slices_per_ns);
  r.integer("harmonics", s.harmonics);
  r.integer("substeps", s.substeps);
  r.bounds("bounds", s.lower, s.upper);
  std::string readout;
  r.string("readout", readout);
  if (readout == "mean") {
    s.readout = quantum::ReadoutFrame::MeanDressed;
  } else if (readout == "transition") {
    s.readout = quantum::ReadoutFrame::Transition;
  } else if (readout == "dressed") {
    s.readout = quantum::ReadoutFrame::Dressed;
  } else if (!readout.empty()) {
    issues.push_back({Errc::InvalidConfig, r.key("readout"), "key '" + r.key("readout") + "' must be mean, transition or dressed"});
  }
  if (const json* i = r.object("init")) {
    Reader ir(*i, r.key("init"), issues);
    ir.allow({"kind", "spread_mhz", "swipht_a", "warmup_iterations", "warmup_learning_rate"});
    std::string kind;
    ir.string("kind", kind);
    if (kind == "random") {
      s.init.kind = scenarios::InitKind::Random;
    } else if (kind == "swipht") {
      s.init.kind = scenarios::InitKind::Swipht;
    } else if (!kind.empty()) {
      issues.push_back({Errc::InvalidConfig, ir.key("kind"), "key '" + ir.key("kind") + "' must be random or swipht"});
    }
    ir.number("spread_mhz", s.init.spread_mhz);
    ir.number("swipht_a", s.init.swipht_a);
    ir.integer("warmup_iterations", s.init.warmup_iterations);
    ir.number("warmup_learning_rate", s.init.warmup_learning_rate);
  }
  if (const json* o = r.object("optimizer")) {
    Reader orr(*o, r.key("optimizer"), issues);
    orr.allow({"kind", "learning_rate", "phase_kind", "phase_learning_rate", "max_iterations", "cost_tolerance",
               "gradient_tolerance"});
    read_optimizer_kind(orr, "kind", s.optimizer.kind);
    orr.number("learning_rate", s.optimizer.learning_rate);
    read_optimizer_kind(orr, "phase_kind", s.phase_optimizer.kind);
    orr.number("phase_learning_rate", s.phase_optimizer.learning_rate);
    orr.integer("max_iterations", s.stop.max_iterations);
    orr.number("cost_tolerance", s.stop.cost_tolerance);
    orr.number("gradient_tolerance", s.stop.gradient_tolerance);
  }
  read_method(r, "method", s.method);
  r.boolean("crab_randomize", s.crab_randomize);
  r.unsigned_integer("seed", s.seed);
  if (const json* w = r.object("sweep")) {
    Reader wr(*w, r.key("sweep"), issues);
    wr.allow({"axis", "values"});
    read_axis(wr, "axis", s.axis);
    wr.numbers("values", s.sweep_values);
  }
  return s;
}

ParseOutcome parse_config_json(const json& doc) {
  ParseOutcome out;
  auto& issues = out.issues;
  if (!doc.is_object()) {
    issues.push_back({Errc::TypeMismatch, "", "configuration must be a JSON object"});
    return out;
  }
  Reader r(doc, "", issues);
  r.allow({"scenario", "method", "name", "overrides", "sweep"});

  Scenario s;
  bool have_scenario = false;
  if (!r.has("scenario")) {
    issues.push_back({Errc::MissingField, "scenario", "missing key 'scenario'"});
  } else if (doc["scenario"].is_string()) {
    const std::string name = doc["scenario"].get<std::string>();
    try {
      s = scenarios::find_scenario(name);
      have_scenario = true;
    } catch (const Error&) {
      issues.push_back({Errc::UnknownScenario, "scenario", "key 'scenario': unknown scenario '" + name + "'"});
    }
  } else if (doc["scenario"].is_object()) {
    const json& obj = doc["scenario"];
    Scenario base;
    bool base_ok = true;
    if (obj.contains("base")) {
      if (!obj["base"].is_string()) {
        issues.push_back({Errc::TypeMismatch, "scenario.base", "key 'scenario.base' must be a string"});
        base_ok = false;
      } else {
        try {
          base = scenarios::find_scenario(obj["base"].get<std::string>());
        } catch (const Error&) {
          issues.push_back({Errc::UnknownScenario, "scenario.base",
                            "key 'scenario.base': unknown scenario '" + obj["base"].get<std::string>() + "'"});
          base_ok = false;
        }
      }
    } else if (!obj.contains("name")) {
      issues.push_back({Errc::MissingField, "scenario.name", "missing key 'scenario.name'"});
    }
    s = scenario_from_json(obj, base, "scenario", issues);
    have_scenario = base_ok;
  } else {
    r.mismatch("scenario", "a scenario name or an object");
  }

  read_method(r, "method", s.method);
  std::string name;
  r.string("name", name);

  if (const json* o = r.object("overrides")) {
    Reader orr(*o, "overrides", issues);
    orr.allow({"harmonics", "learning_rate", "max_iterations", "seed", "bounds", "gate_time", "slices",
               "crab_randomize"});
    orr.integer("harmonics", s.harmonics);
    orr.number("learning_rate", s.optimizer.learning_rate);
    orr.integer("max_iterations", s.stop.max_iterations);
    orr.unsigned_integer("seed", s.seed);
    orr.bounds("bounds", s.lower, s.upper);
    orr.number("gate_time", s.gate_time);
    if (orr.has("slices")) {
      orr.integer("slices", s.slices);
      s.slices_per_ns = 0.0;
    }
    orr.boolean("crab_randomize", s.crab_randomize);
  }
  if (const json* w = r.object("sweep")) {
    Reader wr(*w, "sweep", issues);
    wr.allow({"axis", "values"});
    read_axis(wr, "axis", s.axis);
    wr.numbers("values", s.sweep_values);
  }

  if (have_scenario) {
    const int n = s.slice_count();
    const int bound = std::max(0, (n - 1) / 2);
    if (n >= 2 && s.harmonics > bound) {
      issues.push_back({Errc::NcTooLarge, "harmonics",
                        "key 'harmonics': N_c = " + std::to_string(s.harmonics) + " exceeds the bound " +
                            std::to_string(bound) + " = (N-1)/2 for N = " + std::to_string(n)});
    }
    for (const std::string& msg : scenarios::check(s)) {
      if (msg.rfind("harmonics must be in", 0) == 0 && n >= 2 && s.harmonics > bound) continue;
      issues.push_back({Errc::InvalidConfig, "scenario", msg});
    }
  }
  if (issues.empty()) out.config = RunConfig{s, name.empty() ? s.name : name};
  return out;
}

ParseOutcome parse_config_text(std::string_view text) {
  json doc = json::parse(text.begin(), text.end(), nullptr, false);
  if (doc.is_discarded()) {
    ParseOutcome out;
    out.issues.push_back({Errc::TypeMismatch, "", "configuration is not valid JSON"});
    return out;
  }
  return parse_config_json(doc);
}

ParseOutcome parse_config(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) {
    ParseOutcome out;
    out.issues.push_back({Errc::Io, "", "cannot read '" + path.string() + "'"});
    return out;
  }
  std::stringstream buf;
  buf << in.rdbuf();
  return parse_config_text(buf.str());
}

RunConfig load_config(const std::filesystem::path& path) {
  ParseOutcome out = parse_config(path);
  if (out.ok()) return *out.config;
  std::string msg = out.issues.front().message;
  for (std::size_t i = 1; i < out.issues.size(); ++i) {
    msg += "; " + std::string(errc_name(out.issues[i].code)) + ": " + out.issues[i].message;
  }
  throw Error(out.issues.front().code, msg);
}

}  // namespace qoc::io
