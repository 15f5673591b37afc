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

#include "ccawalk/verify.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <random>

#include "ccawalk/error.hpp"
#include "ccawalk/oracle.hpp"

namespace ccawalk {

namespace {

struct Running {
  double worst = 0.0;
  void add(double v) { worst = std::max(worst, v); }
};

double unitarity_deviation(const Eigen::MatrixXcd &g) {
  const Eigen::Index n = g.rows();
  return (g * g.adjoint() - Eigen::MatrixXcd::Identity(n, n)).cwiseAbs().maxCoeff();
}

double eta_range_violation(double eta) {
  return std::max({0.0, -eta, eta - 1.0});
}

void add_check(VerifyReport &report, std::string name, double deviation, double tol) {
  report.checks.push_back({std::move(name), deviation, tol, deviation < tol});
}

// Accumulates every closed-form / oracle comparison for one (lattice, input, t).
struct CaseStats {
  Running equivalence, unitarity, normalization, eta_range;
};

void compare_case(const SpectralDecomposition &decomp, const oracle::NoonOracle &reference,
                  const NoonInput &input, double t, CoefficientConvention convention,
                  CaseStats &stats) {
  const CorrelationMatrix closed = correlation_matrix(decomp, input, t, convention);
  const CorrelationMatrix exact = reference.correlation(input, t);
  stats.equivalence.add((closed.entries - exact.entries).cwiseAbs().maxCoeff());
  stats.unitarity.add(unitarity_deviation(propagator_matrix(decomp, t).entries));
  stats.normalization.add(std::abs(closed.total() - 2.0));
  stats.eta_range.add(eta_range_violation(tpd_degree(decomp, input, t)));
}

}  // namespace

bool VerifyReport::passed() const {
  return std::all_of(checks.begin(), checks.end(), [](const VerifyCheck &c) { return c.passed; });
}

void shrink_scenario(LatticeSpec &lattice, NoonInput &input, int max_sites) {
  if (max_sites < 2) {
    throw ValidationError("verify max_sites must be >= 2");
  }
  const int n = std::min(lattice.num_cavities, max_sites);
  lattice.num_cavities = n;
  if (input.site_r <= n && input.site_s <= n) {
    return;
  }
  const int gap = std::abs(input.site_s - input.site_r);
  const bool r_first = input.site_r < input.site_s;
  int lo = 1;
  int hi = n;
  if (gap < n) {
    lo = (n - gap) / 2 + 1;
    hi = lo + gap;
  }
  input.site_r = r_first ? lo : hi;
  input.site_s = r_first ? hi : lo;
}

VerifyReport run_verification(const VerifyOptions &options) {
  options.lattice.validate();
  options.input.validate(options.lattice.num_cavities);
  if (!std::isfinite(options.t_end)) {
    throw ValidationError("verify time span must be finite");
  }
  if (options.time_samples < 2) {
    throw ValidationError("verify needs at least 2 time samples");
  }
  if (options.random_cases < 0) {
    throw ValidationError("random_cases must be >= 0");
  }

  VerifyReport report;
  report.oracle_lattice = options.lattice;
  report.oracle_input = options.input;
  shrink_scenario(report.oracle_lattice, report.oracle_input, options.max_sites);
  oracle::check_size_guard(report.oracle_lattice.num_cavities);

  const SpectralDecomposition decomp(report.oracle_lattice);
  const oracle::NoonOracle reference(report.oracle_lattice);

  // Scenario: the configured parameters, sampled uniformly over [0, t_end].
  CaseStats scenario;
  Running eta_initial, norm_conservation, single_photon;
  const oracle::TwoPhotonStateVector psi0 = oracle::noon_state(reference.basis(), report.oracle_input);
  for (int i = 0; i < options.time_samples; ++i) {
    const double t = options.t_end * static_cast<double>(i) / (options.time_samples - 1);
    compare_case(decomp, reference, report.oracle_input, t, options.convention, scenario);
    norm_conservation.add(std::abs(reference.evolver().evolve(psi0, t).norm() - 1.0));
    const Eigen::MatrixXcd g_exact = oracle::single_photon_propagator(report.oracle_lattice, t);
    single_photon.add((propagator_matrix(decomp, t).entries - g_exact).cwiseAbs().maxCoeff());
  }
  eta_initial.add(std::abs(tpd_degree(decomp, report.oracle_input, 0.0)));

  // Spectrum of the two-photon sector against pairwise mode sums.
  std::vector<double> sums;
  const Eigen::VectorXd &freq = decomp.frequencies();
  for (Eigen::Index k = 0; k < freq.size(); ++k) {
    for (Eigen::Index q = k; q < freq.size(); ++q) {
      sums.push_back(freq(k) + freq(q));
    }
  }
  std::sort(sums.begin(), sums.end());
  const Eigen::VectorXd &eig = reference.evolver().eigenvalues();  // ascending
  Running additivity;
  for (std::size_t i = 0; i < sums.size(); ++i) {
    additivity.add(std::abs(eig(static_cast<Eigen::Index>(i)) - sums[i]));
  }

  // Randomized cases over small chains.
  CaseStats randomized;
  std::mt19937_64 rng(options.seed);
  const int max_n = std::min(report.oracle_lattice.num_cavities, 8);
  std::uniform_int_distribution<int> pick_n(2, max_n);
  std::uniform_real_distribution<double> pick_theta(0.0, std::numbers::pi / 2);
  std::uniform_real_distribution<double> pick_ratio(0.0, 2.0);
  std::uniform_real_distribution<double> pick_t(0.0, 50.0);
  for (int c = 0; c < options.random_cases; ++c) {
    const int n = pick_n(rng);
    std::uniform_int_distribution<int> pick_site(1, n);
    NoonInput input{pick_theta(rng), pick_site(rng), 1};
    do {
      input.site_s = pick_site(rng);
    } while (input.site_s == input.site_r);
    const LatticeSpec lattice{n, options.lattice.omega, pick_ratio(rng) * options.lattice.omega};
    const double t = pick_t(rng);
    compare_case(SpectralDecomposition(lattice), oracle::NoonOracle(lattice), input, t,
                 options.convention, randomized);
    eta_initial.add(std::abs(tpd_degree(SpectralDecomposition(lattice), input, 0.0)));
  }

  add_check(report, "oracle_equivalence_scenario", scenario.equivalence.worst,
            tolerance::kOracleEquivalence);
  add_check(report, "oracle_equivalence_random", randomized.equivalence.worst,
            tolerance::kOracleEquivalence);
  add_check(report, "propagator_vs_single_photon_oracle", single_photon.worst,
            tolerance::kSinglePhotonPropagator);
  add_check(report, "propagator_unitarity",
            std::max(scenario.unitarity.worst, randomized.unitarity.worst), tolerance::kUnitarity);
  add_check(report, "pair_normalization",
            std::max(scenario.normalization.worst, randomized.normalization.worst),
            tolerance::kPairNormalization);
  add_check(report, "eta_range", std::max(scenario.eta_range.worst, randomized.eta_range.worst),
            tolerance::kEtaRange);
  add_check(report, "eta_initial_zero", eta_initial.worst, tolerance::kEtaInitial);
  add_check(report, "spectrum_additivity", additivity.worst, tolerance::kSpectrumAdditivity);
  add_check(report, "oracle_norm_conservation", norm_conservation.worst,
            tolerance::kNormConservation);
  return report;
}

}  // namespace ccawalk
