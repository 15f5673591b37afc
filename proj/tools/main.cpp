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

#include <iostream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "api.hpp"
#include "commands.hpp"
#include "scenario.hpp"

namespace {

enum ExitCode : int { kOk = 0, kValidation = 1, kVerifyFailed = 2, kIo = 3 };

}  // namespace

int main(int argc, char **argv) {
  using namespace ccawalk::cli;

  CLI::App app{"Two-photon transport in a coupled-cavity array"};
  app.set_version_flag("--version", std::string("ccawalk ") + ccw_version());
  app.require_subcommand(1);
  app.fallthrough();

  std::string config_path;
  std::string out_path;
  std::string format;
  std::vector<std::string> overrides;
  app.add_option("--config", config_path, "Scenario JSON file (or a previous CSV output)");
  app.add_option("--out", out_path, "Output file (default: output.path, else stdout)");
  app.add_option("--format", format, "Output format")->check(CLI::IsMember({"csv", "json"}));
  app.add_option("--set", overrides, "Override a config field: dotted.key=value")
      ->take_all()
      ->allow_extra_args(false);

  auto *spectrum = app.add_subcommand("spectrum", "Normal-mode frequencies Omega_k");
  auto *correlation = app.add_subcommand("correlation", "Coincidence matrix P_mn at t = t_max");
  auto *tpd = app.add_subcommand("tpd", "Delocalization degree eta(t) over the time grid");
  auto *sweep = app.add_subcommand("sweep", "eta(t) for each theta/concurrence in sweep");
  auto *verify = app.add_subcommand("verify", "Check the closed form against the Fock-space oracle");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError &e) {
    const int code = app.exit(e);
    return code == 0 ? kOk : kValidation;
  }

  try {
    nlohmann::json doc = config_path.empty() ? nlohmann::json::object() : load_config_document(config_path);
    for (const auto &o : overrides) {
      apply_override(doc, o);
    }
    if (!out_path.empty()) {
      apply_override(doc, "output.path=" + nlohmann::json(out_path).dump());
    }
    if (!format.empty()) {
      apply_override(doc, "output.format=" + nlohmann::json(format).dump());
    }
    const ScenarioConfig cfg = parse_config(doc);

    if (*verify) {
      const VerifyOutcome outcome = run_verify(cfg);
      write_table(outcome.table, cfg.output.format, cfg.output.path);
      if (!outcome.passed) {
        std::cerr << "verify: FAIL\n";
        return kVerifyFailed;
      }
      return kOk;
    }

    Table table;
    if (*spectrum) {
      table = run_spectrum(cfg);
    } else if (*correlation) {
      table = run_correlation(cfg);
    } else if (*tpd) {
      table = run_tpd(cfg);
    } else if (*sweep) {
      table = run_sweep(cfg);
    }
    write_table(table, cfg.output.format, cfg.output.path);
    return kOk;
  } catch (const ConfigError &e) {
    std::cerr << "error: " << e.what() << '\n';
    return kValidation;
  } catch (const ccawalk::api::ApiError &e) {
    std::cerr << "error: " << e.what() << '\n';
    return kValidation;
  } catch (const IoError &e) {
    std::cerr << "error: " << e.what() << '\n';
    return kIo;
  }
}
