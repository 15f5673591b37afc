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

#include "commands.hpp"

#include "api.hpp"

namespace ccawalk::cli {

namespace {

api::Lattice make_lattice(const ScenarioConfig &cfg) {
  return api::Lattice(cfg.lattice.num_cavities, cfg.lattice.omega, cfg.lattice.hopping);
}

ccw_noon_input make_input(const ScenarioConfig &cfg, double theta) {
  return {theta, cfg.input.site_r, cfg.input.site_s};
}

// Comment header with full provenance; the "config:" line alone is enough to
// re-run the scenario (`--config <this file>`).
Table make_table(const std::string &command, const ScenarioConfig &cfg) {
  Table t;
  const auto &l = cfg.lattice;
  t.comments.push_back(std::string("ccawalk ") + ccw_version());
  t.comments.push_back("command: " + command);
  t.comments.push_back("lattice: num_cavities=" + std::to_string(l.num_cavities) +
                       " omega=" + format_double(l.omega) + " hopping=" + format_double(l.hopping));
  t.comments.push_back("input: site_r=" + std::to_string(cfg.input.site_r) +
                       " site_s=" + std::to_string(cfg.input.site_s) +
                       " theta=" + format_double(cfg.input_theta()));
  t.comments.push_back("time: t_max=" + format_double(cfg.time.t_max) +
                       " steps=" + std::to_string(cfg.time.steps) + " scale=" + to_string(cfg.time.scale) +
                       " absolute_t_max=" + format_double(cfg.absolute_time(cfg.time.t_max)));
  // The destination path is not part of the scenario; leaving it out keeps
  // reruns that write elsewhere byte-identical.
  nlohmann::json config_json = to_json(cfg);
  config_json["output"].erase("path");
  t.comments.push_back("config: " + config_json.dump());
  t.metadata = {{"tool", "ccawalk"}, {"version", ccw_version()}, {"command", command},
                {"config", config_json}};
  return t;
}

}  // namespace

Table run_spectrum(const ScenarioConfig &cfg) {
  Table t = make_table("spectrum", cfg);
  t.columns = {"k", "Omega_k"};
  const auto freq = make_lattice(cfg).frequencies();
  for (std::size_t k = 0; k < freq.size(); ++k) {
    t.rows.push_back({static_cast<std::int64_t>(k + 1), freq[k]});
  }
  return t;
}

Table run_correlation(const ScenarioConfig &cfg) {
  Table t = make_table("correlation", cfg);
  const double time = cfg.absolute_time(cfg.time.t_max);
  t.comments.insert(t.comments.end() - 1,
                    "evaluated at t=" + format_double(time) + " omega_t=" +
                        format_double(cfg.lattice.omega * time) +
                        " J_t=" + format_double(cfg.lattice.hopping * time));
  t.columns = {"m", "n", "P_mn"};
  const auto lattice = make_lattice(cfg);
  const auto p = lattice.correlation(make_input(cfg, cfg.input_theta()), time);
  const auto n = static_cast<std::size_t>(lattice.size());
  for (std::size_t m = 0; m < n; ++m) {
    for (std::size_t k = 0; k < n; ++k) {
      t.rows.push_back({static_cast<std::int64_t>(m + 1), static_cast<std::int64_t>(k + 1), p[m * n + k]});
    }
  }
  return t;
}

Table run_tpd(const ScenarioConfig &cfg) {
  Table t = make_table("tpd", cfg);
  t.columns = {"t", "omega_t", "J_t", "eta"};
  const auto grid = cfg.time_grid();
  const auto eta = make_lattice(cfg).tpd_series(make_input(cfg, cfg.input_theta()), grid);
  for (std::size_t i = 0; i < grid.size(); ++i) {
    t.rows.push_back({grid[i], cfg.lattice.omega * grid[i], cfg.lattice.hopping * grid[i], eta[i]});
  }
  return t;
}

Table run_sweep(const ScenarioConfig &cfg) {
  Table t = make_table("sweep", cfg);
  t.columns = {"theta", "concurrence", "t", "eta"};
  const auto thetas = cfg.sweep_thetas();
  const auto grid = cfg.time_grid();
  const auto lattice = make_lattice(cfg);
  for (const double theta : thetas) {
    const double c = api::concurrence(theta);
    const auto eta = lattice.tpd_series(make_input(cfg, theta), grid);
    for (std::size_t i = 0; i < grid.size(); ++i) {
      t.rows.push_back({theta, c, grid[i], eta[i]});
    }
  }
  return t;
}

VerifyOutcome run_verify(const ScenarioConfig &cfg) {
  ccw_verify_options opts;
  ccw_verify_options_init(&opts);
  opts.num_cavities = cfg.lattice.num_cavities;
  opts.omega = cfg.lattice.omega;
  opts.hopping = cfg.lattice.hopping;
  opts.input = make_input(cfg, cfg.input_theta());
  opts.t_end = cfg.absolute_time(cfg.time.t_max);
  opts.time_samples = cfg.verify.time_samples;
  opts.max_sites = cfg.verify.max_sites;
  opts.random_cases = cfg.verify.random_cases;
  opts.seed = cfg.verify.seed;
  opts.convention =
      cfg.verify.convention == "as_printed" ? CCW_CONVENTION_AS_PRINTED : CCW_CONVENTION_DERIVED;

  const api::VerifyReport report(opts);
  VerifyOutcome out{make_table("verify", cfg), report.passed()};
  const auto [n, in] = report.scenario();
  out.table.comments.insert(out.table.comments.end() - 1,
                            "oracle chain: num_cavities=" + std::to_string(n) + " site_r=" +
                                std::to_string(in.site_r) + " site_s=" + std::to_string(in.site_s) +
                                " convention=" + cfg.verify.convention);
  out.table.comments.insert(out.table.comments.end() - 1,
                            std::string("result: ") + (out.passed ? "PASS" : "FAIL"));
  out.table.metadata["passed"] = out.passed;
  out.table.columns = {"check", "max_deviation", "tolerance", "status"};
  for (const auto &c : report.checks()) {
    out.table.rows.push_back({c.name, c.deviation, c.tolerance, std::string(c.passed ? "pass" : "FAIL")});
  }
  return out;
}

}  // namespace ccawalk::cli
