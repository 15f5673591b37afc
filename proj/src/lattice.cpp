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

#include "ccawalk/lattice.hpp"

#include <cmath>
#include <complex>
#include <numbers>
#include <string>

#include "ccawalk/error.hpp"

namespace ccawalk {

namespace {

// sin(m pi / (N + 1)) with m reduced modulo 2(N + 1) so the argument stays
// in [0, 2 pi) regardless of how large j * k gets.
double sine_of_multiple(long long m, int n) {
  const long long period = 2LL * (n + 1);
  m %= period;
  return std::sin(std::numbers::pi * static_cast<double>(m) / static_cast<double>(n + 1));
}

// G_{jl} = sum_k (S(j,k) S(l,k)) exp(-i Omega_k t). The product S(j,k) S(l,k)
// commutes exactly in floating point and k is summed in a fixed order, so
// the result is bit-symmetric in (j, l) and identical between the matrix and
// column paths.
std::complex<double> green_entry(const Eigen::MatrixXd &s, const Eigen::VectorXcd &phase,
                                 Eigen::Index j, Eigen::Index l) {
  std::complex<double> acc{0.0, 0.0};
  for (Eigen::Index k = 0; k < phase.size(); ++k) {
    acc += (s(j, k) * s(l, k)) * phase(k);
  }
  return acc;
}

}  // namespace

void LatticeSpec::validate() const {
  if (num_cavities < 2) {
    throw ValidationError("num_cavities must be >= 2, got " + std::to_string(num_cavities));
  }
  if (!std::isfinite(omega) || omega <= 0.0) {
    throw ValidationError("omega must be finite and > 0");
  }
  if (!std::isfinite(hopping) || hopping < 0.0) {
    throw ValidationError("hopping must be finite and >= 0");
  }
}

SpectralDecomposition::SpectralDecomposition(const LatticeSpec &lattice) : lattice_(lattice) {
  lattice_.validate();
  const int n = lattice_.num_cavities;
  const double norm = std::sqrt(2.0 / static_cast<double>(n + 1));

  transform_.resize(n, n);
  for (int j = 1; j <= n; ++j) {
    for (int k = j; k <= n; ++k) {
      const double v = norm * sine_of_multiple(static_cast<long long>(j) * k, n);
      transform_(j - 1, k - 1) = v;
      transform_(k - 1, j - 1) = v;
    }
  }

  frequencies_.resize(n);
  for (int k = 1; k <= n; ++k) {
    const double c = std::cos(std::numbers::pi * static_cast<double>(k) / static_cast<double>(n + 1));
    frequencies_(k - 1) = lattice_.omega + 2.0 * lattice_.hopping * c;
  }
}

Eigen::VectorXcd SpectralDecomposition::phases(double t) const {
  Eigen::VectorXcd out(frequencies_.size());
  for (Eigen::Index k = 0; k < frequencies_.size(); ++k) {
    out(k) = std::polar(1.0, -frequencies_(k) * t);
  }
  return out;
}

SpectralDecomposition decompose(const LatticeSpec &lattice) { return SpectralDecomposition(lattice); }

PropagatorMatrix propagator_matrix(const SpectralDecomposition &decomp, double t) {
  const Eigen::Index n = decomp.size();
  const Eigen::MatrixXd &s = decomp.transform();
  const Eigen::VectorXcd phase = decomp.phases(t);

  PropagatorMatrix out{t, Eigen::MatrixXcd(n, n)};
  for (Eigen::Index j = 0; j < n; ++j) {
    for (Eigen::Index l = j; l < n; ++l) {
      const auto g = green_entry(s, phase, j, l);
      out.entries(j, l) = g;
      out.entries(l, j) = g;
    }
  }
  return out;
}

std::vector<PropagatorColumn> propagator_columns(const SpectralDecomposition &decomp, double t,
                                                 std::span<const CavityIndex> sites) {
  const int n = decomp.size();
  for (const CavityIndex site : sites) {
    if (site < 1 || site > n) {
      throw ValidationError("cavity index " + std::to_string(site) + " outside 1.." +
                            std::to_string(n));
    }
  }

  const Eigen::MatrixXd &s = decomp.transform();
  const Eigen::VectorXcd phase = decomp.phases(t);

  std::vector<PropagatorColumn> out;
  out.reserve(sites.size());
  for (const CavityIndex site : sites) {
    PropagatorColumn col{site, Eigen::VectorXcd(n)};
    const Eigen::Index l = site - 1;
    for (Eigen::Index j = 0; j < n; ++j) {
      col.values(j) = j <= l ? green_entry(s, phase, j, l) : green_entry(s, phase, l, j);
    }
    out.push_back(std::move(col));
  }
  return out;
}

}  // namespace ccawalk
