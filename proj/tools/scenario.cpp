// Copyright 2026 The ccawalk Authors
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

#include "scenario.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <initializer_list>
#include <numbers>
#include <sstream>

#include "api.hpp"

namespace ccawalk::cli {

using nlohmann::json;

namespace {

constexpr const char *kConfigHeaderPrefix = "# config: ";

void reject_unknown_keys(const json &obj, const std::string &where,
                         std::initializer_list<const char *> allowed) {
  if (!obj.is_object()) {
    throw ConfigError("'" + where + "' must be an object");
  }
  for (const auto &[key, value] : obj.items()) {
    if (std::none_of(allowed.begin(), allowed.end(), [&](const char *a) { return key == a; })) {
      throw ConfigError("unknown key '" + where + "." + key + "'");
    }
  }
}

template <typename T>
void read(const json &obj, const char *key, const std::string &where, T &out) {
  if (!obj.contains(key)) {
    return;
  }
  try {
    out = obj.at(key).get<T>();
  } catch (const json::exception &) {
    throw ConfigError("'" + where + "." + key + "' has the wrong type");
  }
}

template <typename T>
std::optional<T> read_optional(const json &obj, const char *key, const std::string &where) {
  if (!obj.contains(key) || obj.at(key).is_null()) {
    return std::nullopt;
  }
  T value{};
  read(obj, key, where, value);
  return value;
}

ccw_branch parse_branch(const std::string &branch) {
  if (branch == "low") return CCW_BRANCH_LOW;
  if (branch == "high") return CCW_BRANCH_HIGH;
  throw ConfigError("branch must be \"low\" or \"high\", got \"" + branch + "\"");
}

bool is_finite(double v) { return std::isfinite(v); }

}  // namespace

const char *to_string(TimeScale scale) { return scale == TimeScale::Omega ? "omega" : "hopping"; }

void ScenarioConfig::validate() const {
  if (lattice.num_cavities < 2) throw ConfigError("lattice.num_cavities must be >= 2");
  if (!is_finite(lattice.omega) || lattice.omega <= 0) throw ConfigError("lattice.omega must be > 0");
  if (!is_finite(lattice.hopping) || lattice.hopping < 0) {
    throw ConfigError("lattice.hopping must be >= 0");
  }

  if (input.theta.has_value() == input.concurrence.has_value()) {
    throw ConfigError("input needs exactly one of 'theta' or 'concurrence'");
  }
  if (input.theta && !(*input.theta >= 0 && *input.theta <= std::numbers::pi / 2)) {
    throw ConfigError("input.theta must lie in [0, pi/2]");
  }
  if (input.concurrence && !(*input.concurrence >= 0 && *input.concurrence <= 1)) {
    throw ConfigError("input.concurrence must lie in [0, 1]");
  }
  parse_branch(input.branch);
  const int n = lattice.num_cavities;
  if (input.site_r < 1 || input.site_r > n || input.site_s < 1 || input.site_s > n) {
    throw ConfigError("input sites must lie in 1.." + std::to_string(n));
  }
  if (input.site_r == input.site_s) throw ConfigError("input.site_r and input.site_s must differ");

  if (!is_finite(time.t_max) || time.t_max < 0) throw ConfigError("time.t_max must be >= 0");
  if (time.steps < 1) throw ConfigError("time.steps must be >= 1");
  if (time.scale == TimeScale::Hopping && lattice.hopping == 0) {
    throw ConfigError("time.scale \"hopping\" needs lattice.hopping > 0");
  }

  if (!sweep.thetas.empty() && !sweep.concurrences.empty()) {
    throw ConfigError("sweep takes either 'thetas' or 'concurrences', not both");
  }
  parse_branch(sweep.branch);

  if (output.format != "csv" && output.format != "json") {
    throw ConfigError("output.format must be \"csv\" or \"json\"");
  }

  if (verify.max_sites < 2) throw ConfigError("verify.max_sites must be >= 2");
  if (verify.time_samples < 2) throw ConfigError("verify.time_samples must be >= 2");
  if (verify.random_cases < 0) throw ConfigError("verify.random_cases must be >= 0");
  if (verify.convention != "derived" && verify.convention != "as_printed") {
    throw ConfigError("verify.convention must be \"derived\" or \"as_printed\"");
  }
}

double ScenarioConfig::absolute_time(double scaled) const {
  return scaled / (time.scale == TimeScale::Omega ? lattice.omega : lattice.hopping);
}

std::vector<double> ScenarioConfig::time_grid() const {
  const double t_end = absolute_time(time.t_max);
  if (!(t_end > 0)) {
    throw ConfigError("time.t_max must be > 0 for a time series");
  }
  std::vector<double> grid(static_cast<std::size_t>(time.steps) + 1);
  for (int i = 0; i <= time.steps; ++i) {
    grid[static_cast<std::size_t>(i)] = t_end * static_cast<double>(i) / time.steps;
  }
  return grid;
}

double ScenarioConfig::input_theta() const {
  if (input.theta) {
    return *input.theta;
  }
  return api::theta_for_concurrence(input.concurrence.value_or(0.0), parse_branch(input.branch));
}

std::vector<double> ScenarioConfig::sweep_thetas() const {
  std::vector<double> thetas;
  if (!sweep.concurrences.empty()) {
    const ccw_branch b = parse_branch(sweep.branch);
    for (const double c : sweep.concurrences) {
      if (!(c >= 0 && c <= 1)) throw ConfigError("sweep concurrences must lie in [0, 1]");
      thetas.push_back(api::theta_for_concurrence(c, b));
    }
  } else {
    thetas = sweep.thetas;
    for (const double th : thetas) {
      if (!(th >= 0 && th <= std::numbers::pi / 2)) {
        throw ConfigError("sweep thetas must lie in [0, pi/2]");
      }
    }
  }
  if (thetas.empty()) {
    throw ConfigError("sweep needs a non-empty 'thetas' or 'concurrences' list");
  }
  for (std::size_t i = 0; i < thetas.size(); ++i) {
    for (std::size_t j = i + 1; j < thetas.size(); ++j) {
      if (thetas[i] == thetas[j]) throw ConfigError("sweep contains duplicate theta entries");
    }
  }
  return thetas;
}

ScenarioConfig parse_config(const json &doc) {
  ScenarioConfig cfg;
  reject_unknown_keys(doc, "config", {"lattice", "input", "time", "sweep", "output", "verify"});

  if (doc.contains("lattice")) {
    const json &l = doc.at("lattice");
    reject_unknown_keys(l, "lattice", {"num_cavities", "omega", "hopping"});
    read(l, "num_cavities", "lattice", cfg.lattice.num_cavities);
    read(l, "omega", "lattice", cfg.lattice.omega);
    read(l, "hopping", "lattice", cfg.lattice.hopping);
  }
  if (doc.contains("input")) {
    const json &in = doc.at("input");
    reject_unknown_keys(in, "input", {"site_r", "site_s", "theta", "concurrence", "branch"});
    read(in, "site_r", "input", cfg.input.site_r);
    read(in, "site_s", "input", cfg.input.site_s);
    auto theta = read_optional<double>(in, "theta", "input");
    auto conc = read_optional<double>(in, "concurrence", "input");
    if (theta || conc) {
      cfg.input.theta = theta;
      cfg.input.concurrence = conc;
    }
    read(in, "branch", "input", cfg.input.branch);
  }
  if (doc.contains("time")) {
    const json &t = doc.at("time");
    reject_unknown_keys(t, "time", {"t_max", "steps", "scale"});
    read(t, "t_max", "time", cfg.time.t_max);
    read(t, "steps", "time", cfg.time.steps);
    std::string scale = to_string(cfg.time.scale);
    read(t, "scale", "time", scale);
    if (scale == "omega") {
      cfg.time.scale = TimeScale::Omega;
    } else if (scale == "hopping") {
      cfg.time.scale = TimeScale::Hopping;
    } else {
      throw ConfigError("time.scale must be \"omega\" or \"hopping\"");
    }
  }
  if (doc.contains("sweep")) {
    const json &s = doc.at("sweep");
    reject_unknown_keys(s, "sweep", {"thetas", "concurrences", "branch"});
    read(s, "thetas", "sweep", cfg.sweep.thetas);
    read(s, "concurrences", "sweep", cfg.sweep.concurrences);
    read(s, "branch", "sweep", cfg.sweep.branch);
  }
  if (doc.contains("output")) {
    const json &o = doc.at("output");
    reject_unknown_keys(o, "output", {"format", "path"});
    read(o, "format", "output", cfg.output.format);
    read(o, "path", "output", cfg.output.path);
  }
  if (doc.contains("verify")) {
    const json &v = doc.at("verify");
    reject_unknown_keys(v, "verify",
                        {"max_sites", "time_samples", "random_cases", "seed", "convention"});
    read(v, "max_sites", "verify", cfg.verify.max_sites);
    read(v, "time_samples", "verify", cfg.verify.time_samples);
    read(v, "random_cases", "verify", cfg.verify.random_cases);
    read(v, "seed", "verify", cfg.verify.seed);
    read(v, "convention", "verify", cfg.verify.convention);
  }
  cfg.validate();
  return cfg;
}

json to_json(const ScenarioConfig &cfg) {
  json input = {{"site_r", cfg.input.site_r}, {"site_s", cfg.input.site_s}, {"branch", cfg.input.branch}};
  if (cfg.input.theta) input["theta"] = *cfg.input.theta;
  if (cfg.input.concurrence) input["concurrence"] = *cfg.input.concurrence;

  return json{
      {"lattice",
       {{"num_cavities", cfg.lattice.num_cavities},
        {"omega", cfg.lattice.omega},
        {"hopping", cfg.lattice.hopping}}},
      {"input", input},
      {"time", {{"t_max", cfg.time.t_max}, {"steps", cfg.time.steps}, {"scale", to_string(cfg.time.scale)}}},
      {"sweep",
       {{"thetas", cfg.sweep.thetas},
        {"concurrences", cfg.sweep.concurrences},
        {"branch", cfg.sweep.branch}}},
      {"output", {{"format", cfg.output.format}, {"path", cfg.output.path}}},
      {"verify",
       {{"max_sites", cfg.verify.max_sites},
        {"time_samples", cfg.verify.time_samples},
        {"random_cases", cfg.verify.random_cases},
        {"seed", cfg.verify.seed},
        {"convention", cfg.verify.convention}}},
  };
}

json load_config_document(const std::string &path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    throw IoError("cannot open config file '" + path + "'");
  }
  std::stringstream buffer;
  buffer << in.rdbuf();
  const std::string text = buffer.str();

  std::string payload = text;
  const auto first = text.find_first_not_of(" \t\r\n");
  if (first != std::string::npos && text[first] == '#') {
    // Re-run from the provenance header of a previous output file.
    std::istringstream lines(text);
    std::string line;
    payload.clear();
    while (std::getline(lines, line) && !line.empty() && line[0] == '#') {
      if (line.rfind(kConfigHeaderPrefix, 0) == 0) {
        payload = line.substr(std::char_traits<char>::length(kConfigHeaderPrefix));
        break;
      }
    }
    if (payload.empty()) {
      throw ConfigError("'" + path + "' has a comment header but no '# config:' line");
    }
  }

  try {
    return json::parse(payload);
  } catch (const json::parse_error &e) {
    throw ConfigError("'" + path + "' is not valid JSON: " + e.what());
  }
}

void apply_override(json &doc, const std::string &assignment) {
  const auto eq = assignment.find('=');
  if (eq == std::string::npos || eq == 0) {
    throw ConfigError("override '" + assignment + "' is not of the form key=value");
  }
  const std::string key = assignment.substr(0, eq);
  const std::string raw = assignment.substr(eq + 1);

  json value;
  try {
    value = json::parse(raw);
  } catch (const json::parse_error &) {
    value = raw;
  }

  json *node = &doc;
  std::string::size_type start = 0;
  while (true) {
    const auto dot = key.find('.', start);
    const std::string part = key.substr(start, dot == std::string::npos ? std::string::npos : dot - start);
    if (part.empty()) {
      throw ConfigError("override key '" + key + "' has an empty component");
    }
    if (!node->is_object()) {
      throw ConfigError("override key '" + key + "' descends into a non-object");
    }
    if (dot == std::string::npos) {
      if (value.is_null()) {
        node->erase(part);
      } else {
        (*node)[part] = value;
      }
      return;
    }
    node = &(*node)[part];
    if (node->is_null()) {
      *node = json::object();
    }
    start = dot + 1;
  }
}

}  // namespace ccawalk::cli
