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

#include <Eigen/Dense>
#include <span>
#include <vector>

#include "ccawalk/lattice.hpp"

namespace ccawalk {

/// Two-photon NOON-type input
///   |psi> = sin(theta) |2>_r |0>_s + cos(theta) |0>_r |2>_s,
/// all other cavities empty.
struct NoonInput {
  double theta = 0.0;
  CavityIndex site_r = 1;
  CavityIndex site_s = 2;

  /// theta in [0, pi/2]; r != s; both in 1..num_cavities.
  void validate(int num_cavities) const;

  friend bool operator==(const NoonInput &, const NoonInput &) = default;
};

/// Entanglement of the input, |sin 2 theta|.
double concurrence(const NoonInput &input);

/// concurrence() is two-to-one on [0, pi/2]; the branch picks theta <= pi/4
/// (Low) or theta >= pi/4 (High).
enum class ConcurrenceBranch { Low, High };

double theta_for_concurrence(double c, ConcurrenceBranch branch);

/// Which coefficient multiplies the site-r amplitude product in the closed
/// form. Derived pairs sin(theta) with r, as the input state does. AsPrinted
/// pairs cos(theta) with r; it only exists so verification can show that the
/// mismatch is detectable against the oracle.
enum class CoefficientConvention { Derived, AsPrinted };

/// Two-photon coincidence matrix P_mn(t) = <a_n^+ a_m^+ a_m a_n>.
/// Symmetric, non-negative, sum over all (m, n) equals 2. The probability of
/// finding both photons in cavity n is P_nn / 2.
struct CorrelationMatrix {
  double time = 0.0;
  /// entries(m - 1, n - 1) = P_mn.
  Eigen::MatrixXd entries;

  /// sum_n P_nn / 2: probability that both photons share a cavity.
  double diagonal_mass() const { return 0.5 * entries.diagonal().sum(); }
  double total() const { return entries.sum(); }
};

/// Rounding can leave probabilities a hair below zero; values in
/// (-1e-12, 0) become 0, anything more negative throws ValidationError.
double clamp_probability(double value);

inline constexpr double kClampTolerance = 1e-12;

/// Closed form
///   P_mn = 2 |sin(theta) G_mr G_nr + cos(theta) G_ms G_ns|^2
/// built from propagator columns r and s only.
CorrelationMatrix correlation_matrix(const SpectralDecomposition &decomp, const NoonInput &input,
                                     double t,
                                     CoefficientConvention convention = CoefficientConvention::Derived);

/// Delocalization degree eta(t) = 1 - (1/2) sum_n P_nn(t): probability that
/// the photons occupy different cavities. Uses the diagonal only.
double tpd_degree(const SpectralDecomposition &decomp, const NoonInput &input, double t);

struct TpdSeries {
  std::vector<double> times;
  std::vector<double> eta;
};

/// eta over a strictly increasing, non-negative time grid. Large grids are
/// split across threads; results land at their grid index, so the output does
/// not depend on scheduling.
TpdSeries tpd_series(const SpectralDecomposition &decomp, const NoonInput &input,
                     std::span<const double> t_grid);

}  // namespace ccawalk
