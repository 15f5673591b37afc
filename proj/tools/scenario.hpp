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

#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "json.hpp"

namespace ccawalk::cli {

/// Malformed or invalid scenario configuration (exit code 1).
class ConfigError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Unreadable input or unwritable output (exit code 3).
class IoError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

enum class TimeScale { Omega, Hopping };

struct LatticeConfig {
  int num_cavities = 29;
  double omega = 1.0;
  double hopping = 1.0;
  bool operator==(const LatticeConfig &) const = default;
};

/// Exactly one of theta / concurrence is set; branch applies to concurrence.
struct InputConfig {
  int site_r = 15;
  int site_s = 16;
  std::optional<double> theta;
  std::optional<double> concurrence = 1.0;
  std::string branch = "low";
  bool operator==(const InputConfig &) const = default;
};

/// t_max is dimensionless: omega * t (scale "omega") or J * t ("hopping").
/// The grid is [0, t_max] with steps + 1 samples.
struct TimeConfig {
  double t_max = 83.57;
  int steps = 1000;
  TimeScale scale = TimeScale::Omega;
  bool operator==(const TimeConfig &) const = default;
};

/// At most one list is non-empty.
struct SweepConfig {
  std::vector<double> thetas;
  std::vector<double> concurrences;
  std::string branch = "low";
  bool operator==(const SweepConfig &) const = default;
};

struct OutputConfig {
  std::string format = "csv";
  /// Empty writes to stdout.
  std::string path;
  bool operator==(const OutputConfig &) const = default;
};

struct VerifyConfig {
  int max_sites = 8;
  int time_samples = 16;
  int random_cases = 200;
  std::uint64_t seed = 20140101;
  std::string convention = "derived";
  bool operator==(const VerifyConfig &) const = default;
};

struct ScenarioConfig {
  LatticeConfig lattice;
  InputConfig input;
  TimeConfig time;
  SweepConfig sweep;
  OutputConfig output;
  VerifyConfig verify;
  bool operator==(const ScenarioConfig &) const = default;

  /// Checks every field; throws ConfigError.
  void validate() const;

  /// Absolute time for a dimensionless value on the configured scale.
  double absolute_time(double scaled) const;
  /// steps + 1 absolute sample times covering [0, t_max].
  std::vector<double> time_grid() const;
  /// Theta of the input, resolving concurrence + branch.
  double input_theta() const;
  /// Thetas of the sweep, resolved and checked for duplicates.
  std::vector<double> sweep_thetas() const;
};

ScenarioConfig parse_config(const nlohmann::json &doc);
nlohmann::json to_json(const ScenarioConfig &config);

/// Reads a JSON config file, or the "# config:" header line of a previously
/// written CSV output.
nlohmann::json load_config_document(const std::string &path);

/// Applies "dotted.key=value" overrides. The value is parsed as JSON when
/// possible and as a bare string otherwise; null removes the key.
void apply_override(nlohmann::json &doc, const std::string &assignment);

const char *to_string(TimeScale scale);

}  // namespace ccawalk::cli
