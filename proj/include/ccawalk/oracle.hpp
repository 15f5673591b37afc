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

// Brute-force reference for the closed-form pipeline. Nothing here uses the
// sine transform or the mode frequencies: the two-photon Hamiltonian is built
// from bosonic ladder operators acting on occupation vectors, diagonalised
// densely, and correlations are taken as expectation values.

#pragma once

#include <Eigen/Dense>
#include <utility>
#include <vector>

#include "ccawalk/lattice.hpp"
#include "ccawalk/observables.hpp"

namespace ccawalk::oracle {

/// Dense storage guard on the two-photon sector dimension.
inline constexpr Eigen::Index kMaxDimension = 5000;

/// Label (m, n), m <= n: one photon in m and one in n, or two in m when m == n.
using PairLabel = std::pair<CavityIndex, CavityIndex>;

/// Lexicographically ordered two-photon basis, D = N (N + 1) / 2. Every label
/// denotes a normalized Fock state.
class TwoPhotonBasis {
 public:
  explicit TwoPhotonBasis(int num_cavities);

  int num_cavities() const { return num_cavities_; }
  Eigen::Index dimension() const { return static_cast<Eigen::Index>(labels_.size()); }
  const std::vector<PairLabel> &labels() const { return labels_; }
  const PairLabel &label(Eigen::Index i) const { return labels_.at(static_cast<std::size_t>(i)); }

  /// Index of the state with occupations given by the two (unordered) sites.
  Eigen::Index index_of(CavityIndex a, CavityIndex b) const;

  /// Occupation numbers n_1..n_N (zero-based vector) of basis state i.
  std::vector<int> occupations(Eigen::Index i) const;
  /// Inverse of occupations(); the vector must hold exactly two photons.
  Eigen::Index index_of_occupations(const std::vector<int> &occ) const;

 private:
  int num_cavities_;
  std::vector<PairLabel> labels_;
};

/// Unit-norm amplitude vector over a TwoPhotonBasis.
struct TwoPhotonStateVector {
  Eigen::VectorXcd amplitudes;

  double norm() const { return amplitudes.norm(); }
};

/// Throws SizeGuardError when D would exceed kMaxDimension.
void check_size_guard(int num_cavities);

/// H = omega sum_j n_j + J sum_j (a_j^+ a_{j+1} + h.c.) restricted to the
/// two-photon sector, D x D real symmetric.
Eigen::MatrixXd build_two_photon_hamiltonian(const LatticeSpec &lattice);

/// exp(-i H t) applied through a cached dense eigendecomposition of H.
class Evolver {
 public:
  explicit Evolver(const Eigen::MatrixXd &hamiltonian);

  const Eigen::VectorXd &eigenvalues() const { return eigenvalues_; }
  Eigen::Index dimension() const { return eigenvalues_.size(); }

  TwoPhotonStateVector evolve(const TwoPhotonStateVector &state, double t) const;

 private:
  Eigen::VectorXd eigenvalues_;
  Eigen::MatrixXd eigenvectors_;
};

TwoPhotonStateVector evolve(const TwoPhotonStateVector &state, const Eigen::MatrixXd &hamiltonian,
                            double t);

/// sin(theta) on label (r, r), cos(theta) on label (s, s).
TwoPhotonStateVector noon_state(const TwoPhotonBasis &basis, const NoonInput &input);

/// P_mn = || a_m a_n |psi> ||^2 evaluated by applying the annihilators to
/// every basis state. Throws ValidationError when |psi| deviates from 1 by
/// more than 1e-10.
CorrelationMatrix oracle_correlation(const TwoPhotonBasis &basis, const TwoPhotonStateVector &state);

/// One-photon propagator exp(-i h t) for the N x N hopping matrix h,
/// computed by dense eigendecomposition.
Eigen::MatrixXcd single_photon_propagator(const LatticeSpec &lattice, double t);

/// Convenience: the full oracle pipeline for a NOON input at time t.
class NoonOracle {
 public:
  explicit NoonOracle(const LatticeSpec &lattice);

  const TwoPhotonBasis &basis() const { return basis_; }
  const Evolver &evolver() const { return evolver_; }

  CorrelationMatrix correlation(const NoonInput &input, double t) const;

 private:
  TwoPhotonBasis basis_;
  Evolver evolver_;
};

}  // namespace ccawalk::oracle
