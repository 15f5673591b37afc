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

namespace ccawalk {

/// 1-based cavity index, j = 1..N.
using CavityIndex = int;

/// Uniform open chain of N identical single-mode cavities with
/// nearest-neighbour hopping. Units have hbar = 1; omega and hopping share an
/// arbitrary energy unit and times are in its inverse.
struct LatticeSpec {
  int num_cavities = 2;
  double omega = 1.0;
  double hopping = 0.0;

  /// Throws ValidationError unless N >= 2, omega > 0 (finite), hopping >= 0.
  void validate() const;

  friend bool operator==(const LatticeSpec &, const LatticeSpec &) = default;
};

/// Exact normal modes of the open chain.
///
/// The transform is the orthonormal sine transform
///   S(j, k) = sqrt(2 / (N + 1)) * sin(j k pi / (N + 1)),
/// which is symmetric and its own inverse. Mode k has frequency
///   Omega_k = omega + 2 J cos(k pi / (N + 1)).
/// Immutable after construction.
class SpectralDecomposition {
 public:
  explicit SpectralDecomposition(const LatticeSpec &lattice);

  const LatticeSpec &lattice() const { return lattice_; }
  int size() const { return lattice_.num_cavities; }

  /// N x N, zero-based storage: transform()(j - 1, k - 1) = S(j, k).
  const Eigen::MatrixXd &transform() const { return transform_; }
  /// Zero-based storage: frequencies()(k - 1) = Omega_k.
  const Eigen::VectorXd &frequencies() const { return frequencies_; }

  /// Phase factors exp(-i Omega_k t) for k = 1..N.
  Eigen::VectorXcd phases(double t) const;

 private:
  LatticeSpec lattice_;
  Eigen::MatrixXd transform_;
  Eigen::VectorXd frequencies_;
};

SpectralDecomposition decompose(const LatticeSpec &lattice);

/// Single-photon Green's function G_{jl}(t): a_j(t) = sum_l G_{jl}(t) a_l(0).
struct PropagatorMatrix {
  double time = 0.0;
  /// entries(j - 1, l - 1) = G_{jl}(time).
  Eigen::MatrixXcd entries;
};

/// Full G(t) = S diag(exp(-i Omega t)) S, O(N^3). Negative times are
/// evaluated by the same formula (backward evolution).
PropagatorMatrix propagator_matrix(const SpectralDecomposition &decomp, double t);

struct PropagatorColumn {
  CavityIndex site = 1;
  /// values(j - 1) = G_{j,site}(t).
  Eigen::VectorXcd values;
};

/// Only the requested columns of G(t), O(N^2) each. Entries are bit-identical
/// to the corresponding entries of propagator_matrix().
std::vector<PropagatorColumn> propagator_columns(const SpectralDecomposition &decomp,
                                                 double t,
                                                 std::span<const CavityIndex> sites);

}  // namespace ccawalk
