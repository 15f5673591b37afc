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

#include "ccawalk/oracle.hpp"

#include <Eigen/Eigenvalues>
#include <algorithm>
#include <cmath>
#include <complex>
#include <string>

#include "ccawalk/error.hpp"

namespace ccawalk::oracle {

namespace {

using Complex = std::complex<double>;

Eigen::Index sector_dimension(int num_cavities) {
  const auto n = static_cast<Eigen::Index>(num_cavities);
  return n * (n + 1) / 2;
}

// Applies a_site to an occupation vector in place; returns the sqrt(n) factor
// (zero when the site is empty, in which case occ is left unchanged).
double annihilate(std::vector<int> &occ, int site) {
  const int n = occ[static_cast<std::size_t>(site)];
  if (n == 0) {
    return 0.0;
  }
  occ[static_cast<std::size_t>(site)] = n - 1;
  return std::sqrt(static_cast<double>(n));
}

double create(std::vector<int> &occ, int site) {
  const int n = ++occ[static_cast<std::size_t>(site)];
  return std::sqrt(static_cast<double>(n));
}

}  // namespace

TwoPhotonBasis::TwoPhotonBasis(int num_cavities) : num_cavities_(num_cavities) {
  if (num_cavities < 1) {
    throw ValidationError("two-photon basis needs at least one cavity");
  }
  labels_.reserve(static_cast<std::size_t>(sector_dimension(num_cavities)));
  for (CavityIndex m = 1; m <= num_cavities; ++m) {
    for (CavityIndex n = m; n <= num_cavities; ++n) {
      labels_.emplace_back(m, n);
    }
  }
}

Eigen::Index TwoPhotonBasis::index_of(CavityIndex a, CavityIndex b) const {
  const CavityIndex m = std::min(a, b);
  const CavityIndex n = std::max(a, b);
  if (m < 1 || n > num_cavities_) {
    throw ValidationError("basis label outside 1.." + std::to_string(num_cavities_));
  }
  // Labels with first entry < m number sum_{i<m} (N - i + 1).
  const Eigen::Index big_n = num_cavities_;
  const Eigen::Index before = (m - 1) * big_n - (m - 1) * (m - 2) / 2;
  return before + (n - m);
}

std::vector<int> TwoPhotonBasis::occupations(Eigen::Index i) const {
  const auto &[m, n] = label(i);
  std::vector<int> occ(static_cast<std::size_t>(num_cavities_), 0);
  ++occ[static_cast<std::size_t>(m - 1)];
  ++occ[static_cast<std::size_t>(n - 1)];
  return occ;
}

Eigen::Index TwoPhotonBasis::index_of_occupations(const std::vector<int> &occ) const {
  std::vector<CavityIndex> sites;
  for (std::size_t j = 0; j < occ.size(); ++j) {
    for (int c = 0; c < occ[j]; ++c) {
      sites.push_back(static_cast<CavityIndex>(j + 1));
    }
  }
  if (occ.size() != static_cast<std::size_t>(num_cavities_) || sites.size() != 2) {
    throw ValidationError("occupation vector is not in the two-photon sector");
  }
  return index_of(sites[0], sites[1]);
}

void check_size_guard(int num_cavities) {
  const Eigen::Index dim = sector_dimension(num_cavities);
  if (dim > kMaxDimension) {
    throw SizeGuardError("two-photon sector dimension " + std::to_string(dim) +
                         " exceeds the dense oracle limit of " + std::to_string(kMaxDimension) +
                         " (N = " + std::to_string(num_cavities) + ")");
  }
}

Eigen::MatrixXd build_two_photon_hamiltonian(const LatticeSpec &lattice) {
  lattice.validate();
  check_size_guard(lattice.num_cavities);
  const TwoPhotonBasis basis(lattice.num_cavities);
  const Eigen::Index dim = basis.dimension();
  const int n_sites = lattice.num_cavities;

  Eigen::MatrixXd h = Eigen::MatrixXd::Zero(dim, dim);
  for (Eigen::Index col = 0; col < dim; ++col) {
    const std::vector<int> occ = basis.occupations(col);

    double photons = 0.0;
    for (const int n : occ) {
      photons += n;
    }
    h(col, col) += lattice.omega * photons;

    if (lattice.hopping == 0.0) {
      continue;
    }
    for (int j = 0; j + 1 < n_sites; ++j) {
      // a_j^+ a_{j+1} and its conjugate a_{j+1}^+ a_j.
      for (const auto &[to, from] : {std::pair{j, j + 1}, std::pair{j + 1, j}}) {
        std::vector<int> moved = occ;
        const double a = annihilate(moved, from);
        if (a == 0.0) {
          continue;
        }
        const double c = create(moved, to);
        h(basis.index_of_occupations(moved), col) += lattice.hopping * a * c;
      }
    }
  }
  return h;
}

Evolver::Evolver(const Eigen::MatrixXd &hamiltonian) {
  if (hamiltonian.rows() != hamiltonian.cols()) {
    throw ValidationError("Hamiltonian must be square");
  }
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(hamiltonian);
  if (solver.info() != Eigen::Success) {
    throw std::runtime_error("two-photon eigendecomposition failed");
  }
  eigenvalues_ = solver.eigenvalues();
  eigenvectors_ = solver.eigenvectors();
}

TwoPhotonStateVector Evolver::evolve(const TwoPhotonStateVector &state, double t) const {
  if (state.amplitudes.size() != dimension()) {
    throw ValidationError("state dimension " + std::to_string(state.amplitudes.size()) +
                          " does not match Hamiltonian dimension " + std::to_string(dimension()));
  }
  Eigen::VectorXcd mode = eigenvectors_.transpose().cast<Complex>() * state.amplitudes;
  for (Eigen::Index i = 0; i < mode.size(); ++i) {
    mode(i) *= std::polar(1.0, -eigenvalues_(i) * t);
  }
  return {eigenvectors_.cast<Complex>() * mode};
}

TwoPhotonStateVector evolve(const TwoPhotonStateVector &state, const Eigen::MatrixXd &hamiltonian,
                            double t) {
  return Evolver(hamiltonian).evolve(state, t);
}

TwoPhotonStateVector noon_state(const TwoPhotonBasis &basis, const NoonInput &input) {
  input.validate(basis.num_cavities());
  TwoPhotonStateVector psi{Eigen::VectorXcd::Zero(basis.dimension())};
  psi.amplitudes(basis.index_of(input.site_r, input.site_r)) = std::sin(input.theta);
  psi.amplitudes(basis.index_of(input.site_s, input.site_s)) = std::cos(input.theta);
  return psi;
}

CorrelationMatrix oracle_correlation(const TwoPhotonBasis &basis, const TwoPhotonStateVector &state) {
  if (state.amplitudes.size() != basis.dimension()) {
    throw ValidationError("state dimension does not match basis");
  }
  if (std::abs(state.norm() - 1.0) > 1e-10) {
    throw ValidationError("state is not normalized");
  }
  const int n_sites = basis.num_cavities();
  CorrelationMatrix out{0.0, Eigen::MatrixXd::Zero(n_sites, n_sites)};

  // a_m a_n maps the two-photon sector onto the vacuum, so a_m a_n |psi> is a
  // single complex amplitude and <psi| a_n^+ a_m^+ a_m a_n |psi> is its modulus
  // squared.
  for (int m = 0; m < n_sites; ++m) {
    for (int n = 0; n < n_sites; ++n) {
      Complex vacuum{0.0, 0.0};
      for (Eigen::Index b = 0; b < basis.dimension(); ++b) {
        std::vector<int> occ = basis.occupations(b);
        double amp = annihilate(occ, n);
        if (amp == 0.0) {
          continue;
        }
        amp *= annihilate(occ, m);
        if (amp == 0.0) {
          continue;
        }
        vacuum += amp * state.amplitudes(b);
      }
      out.entries(m, n) = std::norm(vacuum);
    }
  }
  return out;
}

Eigen::MatrixXcd single_photon_propagator(const LatticeSpec &lattice, double t) {
  lattice.validate();
  const int n = lattice.num_cavities;
  Eigen::MatrixXd h = Eigen::MatrixXd::Zero(n, n);
  for (int j = 0; j < n; ++j) {
    h(j, j) = lattice.omega;
    if (j + 1 < n) {
      h(j, j + 1) = lattice.hopping;
      h(j + 1, j) = lattice.hopping;
    }
  }
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(h);
  const Eigen::MatrixXcd v = solver.eigenvectors().cast<Complex>();
  Eigen::VectorXcd phase(n);
  for (int k = 0; k < n; ++k) {
    phase(k) = std::polar(1.0, -solver.eigenvalues()(k) * t);
  }
  return v * phase.asDiagonal() * v.adjoint();
}

NoonOracle::NoonOracle(const LatticeSpec &lattice)
    : basis_((lattice.validate(), check_size_guard(lattice.num_cavities), lattice.num_cavities)),
      evolver_(build_two_photon_hamiltonian(lattice)) {}

CorrelationMatrix NoonOracle::correlation(const NoonInput &input, double t) const {
  const TwoPhotonStateVector psi0 = noon_state(basis_, input);
  CorrelationMatrix out = oracle_correlation(basis_, evolver_.evolve(psi0, t));
  out.time = t;
  return out;
}

}  // namespace ccawalk::oracle
