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

#include "ccawalk/observables.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <complex>
#include <numbers>
#include <string>
#include <thread>

#include "ccawalk/error.hpp"

namespace ccawalk {

namespace {

constexpr std::size_t kMinSamplesPerThread = 512;

struct Amplitudes {
  double weight_r;
  double weight_s;
};

Amplitudes coefficients(const NoonInput &input, CoefficientConvention convention) {
  const double sin_t = std::sin(input.theta);
  const double cos_t = std::cos(input.theta);
  if (convention == CoefficientConvention::AsPrinted) {
    return {cos_t, sin_t};
  }
  return {sin_t, cos_t};
}

double eta_at(const SpectralDecomposition &decomp, const NoonInput &input, double t) {
  const std::array<CavityIndex, 2> sites{input.site_r, input.site_s};
  const auto cols = propagator_columns(decomp, t, sites);
  const auto [wr, ws] = coefficients(input, CoefficientConvention::Derived);
  const Eigen::VectorXcd &gr = cols[0].values;
  const Eigen::VectorXcd &gs = cols[1].values;

  double both_in_same = 0.0;
  for (Eigen::Index n = 0; n < gr.size(); ++n) {
    both_in_same += std::norm(wr * gr(n) * gr(n) + ws * gs(n) * gs(n));
  }
  // (1/2) sum_n P_nn with P_nn = 2 |...|^2.
  return 1.0 - both_in_same;
}

}  // namespace

void NoonInput::validate(int num_cavities) const {
  if (!(theta >= 0.0 && theta <= std::numbers::pi / 2)) {
    throw ValidationError("theta must lie in [0, pi/2]");
  }
  if (site_r < 1 || site_r > num_cavities || site_s < 1 || site_s > num_cavities) {
    throw ValidationError("input sites must lie in 1.." + std::to_string(num_cavities));
  }
  if (site_r == site_s) {
    throw ValidationError("input sites r and s must differ");
  }
}

double concurrence(const NoonInput &input) { return std::abs(std::sin(2.0 * input.theta)); }

double theta_for_concurrence(double c, ConcurrenceBranch branch) {
  if (!(c >= 0.0 && c <= 1.0)) {
    throw ValidationError("concurrence must lie in [0, 1]");
  }
  const double low = 0.5 * std::asin(c);
  return branch == ConcurrenceBranch::Low ? low : std::numbers::pi / 2 - low;
}

double clamp_probability(double value) {
  if (value >= 0.0) {
    return value;
  }
  if (value > -kClampTolerance) {
    return 0.0;
  }
  throw ValidationError("probability " + std::to_string(value) + " is negative beyond tolerance");
}

CorrelationMatrix correlation_matrix(const SpectralDecomposition &decomp, const NoonInput &input,
                                     double t, CoefficientConvention convention) {
  input.validate(decomp.size());
  const std::array<CavityIndex, 2> sites{input.site_r, input.site_s};
  const auto cols = propagator_columns(decomp, t, sites);
  const auto [wr, ws] = coefficients(input, convention);
  const Eigen::VectorXcd &gr = cols[0].values;
  const Eigen::VectorXcd &gs = cols[1].values;

  const Eigen::Index n = decomp.size();
  CorrelationMatrix out{t, Eigen::MatrixXd(n, n)};
  for (Eigen::Index m = 0; m < n; ++m) {
    for (Eigen::Index k = m; k < n; ++k) {
      const double p = clamp_probability(2.0 * std::norm(wr * gr(m) * gr(k) + ws * gs(m) * gs(k)));
      out.entries(m, k) = p;
      out.entries(k, m) = p;
    }
  }
  return out;
}

double tpd_degree(const SpectralDecomposition &decomp, const NoonInput &input, double t) {
  input.validate(decomp.size());
  return eta_at(decomp, input, t);
}

TpdSeries tpd_series(const SpectralDecomposition &decomp, const NoonInput &input,
                     std::span<const double> t_grid) {
  input.validate(decomp.size());
  if (t_grid.empty()) {
    throw ValidationError("time grid is empty");
  }
  if (!(t_grid.front() >= 0.0)) {
    throw ValidationError("time grid must be non-negative");
  }
  for (std::size_t i = 1; i < t_grid.size(); ++i) {
    if (!(t_grid[i] > t_grid[i - 1])) {
      throw ValidationError("time grid must be strictly increasing");
    }
  }

  TpdSeries out;
  out.times.assign(t_grid.begin(), t_grid.end());
  out.eta.resize(t_grid.size());

  const auto fill = [&](std::size_t begin, std::size_t end) {
    for (std::size_t i = begin; i < end; ++i) {
      out.eta[i] = eta_at(decomp, input, t_grid[i]);
    }
  };

  const std::size_t hw = std::max(1u, std::thread::hardware_concurrency());
  const std::size_t workers = std::min(hw, t_grid.size() / kMinSamplesPerThread);
  if (workers <= 1) {
    fill(0, t_grid.size());
    return out;
  }

  const std::size_t chunk = (t_grid.size() + workers - 1) / workers;
  std::vector<std::jthread> pool;
  pool.reserve(workers);
  for (std::size_t w = 0; w < workers; ++w) {
    const std::size_t begin = w * chunk;
    const std::size_t end = std::min(t_grid.size(), begin + chunk);
    if (begin < end) {
      pool.emplace_back(fill, begin, end);
    }
  }
  pool.clear();
  return out;
}

}  // namespace ccawalk
