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
#include <string>
#include <vector>

#include "ccawalk/lattice.hpp"
#include "ccawalk/observables.hpp"

namespace ccawalk {

/// Fixed tolerances of the closed-form vs oracle checks.
namespace tolerance {
inline constexpr double kOracleEquivalence = 1e-8;
inline constexpr double kUnitarity = 1e-10;
inline constexpr double kPairNormalization = 1e-9;
inline constexpr double kEtaRange = 1e-9;
inline constexpr double kEtaInitial = 1e-12;
inline constexpr double kSpectrumAdditivity = 1e-10;
inline constexpr double kNormConservation = 1e-10;
inline constexpr double kSinglePhotonPropagator = 1e-9;
}  // namespace tolerance

struct VerifyOptions {
  LatticeSpec lattice;
  NoonInput input;
  /// Absolute time span [0, t_end] sampled for the scenario checks.
  double t_end = 0.0;
  int time_samples = 16;
  /// The scenario is shrunk to at most this many cavities for the oracle.
  int max_sites = 8;
  int random_cases = 200;
  std::uint64_t seed = 20140101;
  CoefficientConvention convention = CoefficientConvention::Derived;
};

struct VerifyCheck {
  std::string name;
  double deviation = 0.0;
  double tolerance = 0.0;
  bool passed = false;
};

struct VerifyReport {
  LatticeSpec oracle_lattice;
  NoonInput oracle_input;
  std::vector<VerifyCheck> checks;

  bool passed() const;
};

/// Fits the input sites into a chain of at most max_sites cavities. Sites
/// that already fit are kept; otherwise the pair is re-centred with its
/// separation preserved (or clipped to the chain ends when it cannot be).
void shrink_scenario(LatticeSpec &lattice, NoonInput &input, int max_sites);

/// Runs the oracle-equivalence and invariant checks. Throws ValidationError
/// for invalid options and SizeGuardError when the shrunk chain is too large
/// for the dense oracle.
VerifyReport run_verification(const VerifyOptions &options);

}  // namespace ccawalk
