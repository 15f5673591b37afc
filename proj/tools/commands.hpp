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

#include "scenario.hpp"
#include "table.hpp"

namespace ccawalk::cli {

/// k, Omega_k.
Table run_spectrum(const ScenarioConfig &config);
/// (m, n, P_mn) triples, row-major, at time t_max on the configured scale.
Table run_correlation(const ScenarioConfig &config);
/// t, omega_t, J_t, eta over the configured grid.
Table run_tpd(const ScenarioConfig &config);
/// Long format (theta, concurrence, t, eta); theta-major, then time.
Table run_sweep(const ScenarioConfig &config);

struct VerifyOutcome {
  Table table;
  bool passed = false;
};

/// Oracle-equivalence and invariant checks on the scenario shrunk to at most
/// verify.max_sites cavities.
VerifyOutcome run_verify(const ScenarioConfig &config);

}  // namespace ccawalk::cli
