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

#include <chrono>
#include <cmath>
#include <numbers>
#include <vector>

#include "ccawalk/error.hpp"
#include "ccawalk/oracle.hpp"
#include "gtest/gtest.h"
#include "test_util.hpp"

using namespace ccawalk;
using ccawalk::testing::Gen;
using ccawalk::testing::max_abs_diff;

namespace {

constexpr double kPi = std::numbers::pi;

// Sum of P_nn / 2 for N = 29, omega = J = 1, r = 15, s = 16, theta = pi/4 at
// t = 83.57, computed once with an independent numpy evaluation and confirmed
// below against the Fock-space oracle.
constexpr double kN29SnapshotDiagonalMass = 0.058556110674490;

}  // namespace

TEST(noon_input, validation) {
  EXPECT_NO_THROW((NoonInput{0.0, 1, 2}.validate(2)));
  EXPECT_NO_THROW((NoonInput{kPi / 2, 2, 1}.validate(2)));
  EXPECT_THROW((NoonInput{-1e-3, 1, 2}.validate(3)), ValidationError);
  EXPECT_THROW((NoonInput{kPi / 2 + 1e-9, 1, 2}.validate(3)), ValidationError);
  EXPECT_THROW((NoonInput{0.3, 2, 2}.validate(3)), ValidationError);
  EXPECT_THROW((NoonInput{0.3, 0, 2}.validate(3)), ValidationError);
  EXPECT_THROW((NoonInput{0.3, 1, 4}.validate(3)), ValidationError);
}

TEST(concurrence, reference_values) {
  EXPECT_EQ(concurrence({0.0, 1, 2}), 0.0);
  EXPECT_NEAR(concurrence({kPi / 2, 1, 2}), 0.0, 1e-15);
  EXPECT_NEAR(concurrence({kPi / 4, 1, 2}), 1.0, 1e-15);
  EXPECT_NEAR(concurrence({kPi / 12, 1, 2}), 0.5, 1e-15);
}

TEST(concurrence, inverse_branches) {
  EXPECT_NEAR(theta_for_concurrence(1.0, ConcurrenceBranch::Low), kPi / 4, 1e-15);
  EXPECT_NEAR(theta_for_concurrence(1.0, ConcurrenceBranch::High), kPi / 4, 1e-15);
  EXPECT_EQ(theta_for_concurrence(0.0, ConcurrenceBranch::Low), 0.0);
  EXPECT_NEAR(theta_for_concurrence(0.0, ConcurrenceBranch::High), kPi / 2, 1e-15);
  EXPECT_NEAR(theta_for_concurrence(0.5, ConcurrenceBranch::Low), kPi / 12, 1e-15);
  EXPECT_THROW(theta_for_concurrence(-0.01, ConcurrenceBranch::Low), ValidationError);
  EXPECT_THROW(theta_for_concurrence(1.01, ConcurrenceBranch::High), ValidationError);

  Gen gen(3);
  for (int i = 0; i < 500; ++i) {
    const double c = gen.uniform(0.0, 1.0);
    for (const auto b : {ConcurrenceBranch::Low, ConcurrenceBranch::High}) {
      const double theta = theta_for_concurrence(c, b);
      EXPECT_NEAR(concurrence({theta, 1, 2}), c, 1e-14);
      EXPECT_TRUE(b == ConcurrenceBranch::Low ? theta <= kPi / 4 : theta >= kPi / 4 - 1e-15);
    }
  }
}

TEST(clamp_probability, small_negatives_only) {
  EXPECT_EQ(clamp_probability(0.25), 0.25);
  EXPECT_EQ(clamp_probability(-5e-13), 0.0);
  EXPECT_EQ(clamp_probability(-0.0), 0.0);
  EXPECT_THROW(clamp_probability(-2e-12), ValidationError);
}

TEST(correlation, initial_state) {
  const auto d = decompose({29, 1.0, 1.0});
  for (const double theta : {0.0, kPi / 12, kPi / 4, 1.2, kPi / 2}) {
    const auto p = correlation_matrix(d, {theta, 15, 16}, 0.0).entries;
    Eigen::MatrixXd expected = Eigen::MatrixXd::Zero(29, 29);
    expected(14, 14) = 2 * std::sin(theta) * std::sin(theta);
    expected(15, 15) = 2 * std::cos(theta) * std::cos(theta);
    EXPECT_LT(max_abs_diff(p, expected), 1e-12) << theta;
  }
}

TEST(correlation, two_site_closed_form) {
  // G_11 = e^{-it} cos t, G_12 = -i e^{-it} sin t gives
  // P_11 = 2 (sin th cos^2 t - cos th sin^2 t)^2,
  // P_22 = 2 (cos th cos^2 t - sin th sin^2 t)^2, P_12 = 1 - (P_11 + P_22) / 2.
  const auto d = decompose({2, 1.0, 1.0});
  Gen gen(5);
  for (int i = 0; i < 50; ++i) {
    const double theta = gen.uniform(0.0, kPi / 2);
    const double t = gen.uniform(0.0, 20.0);
    const double c2 = std::cos(t) * std::cos(t);
    const double s2 = std::sin(t) * std::sin(t);
    const double p11 = 2 * std::pow(std::sin(theta) * c2 - std::cos(theta) * s2, 2);
    const double p22 = 2 * std::pow(std::cos(theta) * c2 - std::sin(theta) * s2, 2);
    const auto p = correlation_matrix(d, {theta, 1, 2}, t).entries;
    EXPECT_NEAR(p(0, 0), p11, 1e-13);
    EXPECT_NEAR(p(1, 1), p22, 1e-13);
    EXPECT_NEAR(p(0, 1), 1.0 - 0.5 * (p11 + p22), 1e-13);
  }
}

TEST(correlation, n29_snapshot_diagonal_mass) {
  const LatticeSpec l{29, 1.0, 1.0};
  const NoonInput in{kPi / 4, 15, 16};
  const auto closed = correlation_matrix(decompose(l), in, 83.57);
  const auto exact = oracle::NoonOracle(l).correlation(in, 83.57);
  EXPECT_LT(max_abs_diff(closed.entries, exact.entries), 1e-8);
  EXPECT_NEAR(closed.diagonal_mass(), kN29SnapshotDiagonalMass, 1e-9);
  EXPECT_NEAR(exact.diagonal_mass(), kN29SnapshotDiagonalMass, 1e-9);
}

TEST(correlation, matches_oracle_property) {
  Gen gen(17);
  for (int trial = 0; trial < 120; ++trial) {
    const LatticeSpec l = gen.lattice(2, 8);
    const NoonInput in = gen.noon(l.num_cavities);
    const double t = gen.uniform(0.0, 50.0);
    const auto closed = correlation_matrix(decompose(l), in, t).entries;
    const auto exact = oracle::NoonOracle(l).correlation(in, t).entries;
    EXPECT_LT(max_abs_diff(closed, exact), 1e-8)
        << "N=" << l.num_cavities << " theta=" << in.theta << " r=" << in.site_r << " s=" << in.site_s;
  }
}

TEST(correlation, as_printed_convention_disagrees_with_oracle) {
  const LatticeSpec l{6, 1.0, 0.7};
  const NoonInput in{kPi / 8, 2, 5};
  const oracle::NoonOracle exact(l);
  const auto d = decompose(l);
  for (const double t : {0.0, 1.5, 9.0}) {
    const auto printed = correlation_matrix(d, in, t, CoefficientConvention::AsPrinted).entries;
    EXPECT_GT(max_abs_diff(printed, exact.correlation(in, t).entries), 1e-3);
  }
  // Both conventions coincide at theta = pi/4.
  const NoonInput balanced{kPi / 4, 2, 5};
  EXPECT_LT(max_abs_diff(correlation_matrix(d, balanced, 4.0, CoefficientConvention::AsPrinted).entries,
                         correlation_matrix(d, balanced, 4.0).entries),
            1e-15);
}

TEST(correlation, invariants_property) {
  Gen gen(23);
  for (int trial = 0; trial < 200; ++trial) {
    const LatticeSpec l = gen.lattice(2, 40);
    const int n = l.num_cavities;
    const auto d = decompose(l);
    const NoonInput in = gen.noon(n);
    const double t = gen.uniform(0.0, 200.0);
    const auto p = correlation_matrix(d, in, t);

    EXPECT_EQ(p.entries, p.entries.transpose());
    EXPECT_GE(p.entries.minCoeff(), 0.0);
    EXPECT_NEAR(p.total(), 2.0, 1e-9);

    // Relabelling the input: (theta, r, s) and (pi/2 - theta, s, r) are the
    // same state.
    const NoonInput swapped{kPi / 2 - in.theta, in.site_s, in.site_r};
    EXPECT_LT(max_abs_diff(p.entries, correlation_matrix(d, swapped, t).entries), 1e-12);

    // Reflection of the chain.
    const NoonInput mirrored{in.theta, n + 1 - in.site_r, n + 1 - in.site_s};
    const Eigen::MatrixXd pm = correlation_matrix(d, mirrored, t).entries;
    EXPECT_LT(max_abs_diff(p.entries, Eigen::MatrixXd(pm.reverse())), 1e-12);

    const double eta = tpd_degree(d, in, t);
    EXPECT_NEAR(eta, 1.0 - p.diagonal_mass(), 1e-10);
    EXPECT_GE(eta, -1e-9);
    EXPECT_LE(eta, 1.0 + 1e-9);
  }
}

TEST(correlation, zero_hopping_freezes_dynamics) {
  const auto d = decompose({10, 1.0, 0.0});
  const NoonInput in{0.4, 3, 7};
  const auto p0 = correlation_matrix(d, in, 0.0).entries;
  for (const double t : {0.5, 17.0, 1234.5}) {
    EXPECT_LT(max_abs_diff(correlation_matrix(d, in, t).entries, p0), 1e-12);
    EXPECT_NEAR(tpd_degree(d, in, t), 0.0, 1e-12);
  }
}

TEST(correlation, rejects_invalid_input) {
  const auto d = decompose({5, 1.0, 1.0});
  EXPECT_THROW(correlation_matrix(d, {0.3, 1, 6}, 1.0), ValidationError);
  EXPECT_THROW(correlation_matrix(d, {0.3, 2, 2}, 1.0), ValidationError);
  EXPECT_THROW(tpd_degree(d, {2.0, 1, 2}, 1.0), ValidationError);
}

TEST(tpd, zero_at_initial_time) {
  Gen gen(29);
  for (int trial = 0; trial < 100; ++trial) {
    const LatticeSpec l = gen.lattice(2, 40);
    EXPECT_NEAR(tpd_degree(decompose(l), gen.noon(l.num_cavities), 0.0), 0.0, 1e-12);
  }
}

TEST(tpd, two_site_balanced_input) {
  // With theta = pi/4, eta(t) = sin^2(2 J t) on the two-site chain.
  const LatticeSpec l{2, 1.0, 1.0};
  const auto d = decompose(l);
  const NoonInput in{kPi / 4, 1, 2};
  EXPECT_NEAR(tpd_degree(d, in, kPi / 4), 1.0, 1e-14);
  EXPECT_NEAR(tpd_degree(d, in, kPi / 8), 0.5, 1e-14);
  const oracle::NoonOracle exact(l);
  EXPECT_NEAR(1.0 - exact.correlation(in, kPi / 4).diagonal_mass(), 1.0, 1e-12);
  EXPECT_NEAR(1.0 - exact.correlation(in, kPi / 8).diagonal_mass(), 0.5, 1e-12);
}

TEST(tpd, strong_hopping_plateau_median) {
  const auto d = decompose({29, 1.0, 0.1});
  std::vector<double> grid;
  for (int i = 0; i <= 2000; ++i) grid.push_back(1000.0 * i / 2000);
  const auto series = tpd_series(d, {kPi / 4, 15, 16}, grid);
  std::vector<double> plateau;
  for (std::size_t i = 0; i < grid.size(); ++i) {
    if (grid[i] >= 200.0) plateau.push_back(series.eta[i]);
  }
  std::nth_element(plateau.begin(), plateau.begin() + plateau.size() / 2, plateau.end());
  EXPECT_GT(plateau[plateau.size() / 2], 0.9);
}

TEST(tpd_series, single_point) {
  const auto d = decompose({29, 1.0, 1.0});
  const std::vector<double> grid{0.0};
  const auto s = tpd_series(d, {kPi / 4, 15, 16}, grid);
  ASSERT_EQ(s.eta.size(), 1u);
  EXPECT_NEAR(s.eta[0], 0.0, 1e-12);
  EXPECT_EQ(s.times, grid);
}

TEST(tpd_series, rejects_bad_grids) {
  const auto d = decompose({5, 1.0, 1.0});
  const NoonInput in{0.5, 1, 2};
  EXPECT_THROW(tpd_series(d, in, std::vector<double>{}), ValidationError);
  EXPECT_THROW(tpd_series(d, in, std::vector<double>{0.0, 2.0, 1.0}), ValidationError);
  EXPECT_THROW(tpd_series(d, in, std::vector<double>{0.0, 1.0, 1.0}), ValidationError);
  EXPECT_THROW(tpd_series(d, in, std::vector<double>{-1.0, 1.0}), ValidationError);
}

TEST(tpd_series, matches_pointwise_and_is_deterministic) {
  const auto d = decompose({29, 1.0, 0.1});
  const NoonInput in{kPi / 12, 15, 16};
  std::vector<double> grid;
  for (int i = 0; i <= 10000; ++i) grid.push_back(0.1 * i);
  const auto a = tpd_series(d, in, grid);
  const auto b = tpd_series(d, in, grid);
  EXPECT_EQ(a.eta, b.eta);
  for (std::size_t i = 0; i < grid.size(); i += 997) {
    EXPECT_EQ(a.eta[i], tpd_degree(d, in, grid[i]));
  }
}

TEST(tpd_series, mirror_symmetric_sites_swap) {
  const auto d = decompose({29, 1.0, 1.0});
  std::vector<double> grid;
  for (int i = 0; i <= 300; ++i) grid.push_back(0.2 * i);
  const auto a = tpd_series(d, {kPi / 4, 14, 16}, grid);
  const auto b = tpd_series(d, {kPi / 4, 16, 14}, grid);
  for (std::size_t i = 0; i < grid.size(); ++i) EXPECT_NEAR(a.eta[i], b.eta[i], 1e-12);
}

TEST(tpd_series, ten_thousand_steps_under_a_second) {
  const auto d = decompose({29, 1.0, 0.01});
  std::vector<double> grid;
  for (int i = 0; i <= 10000; ++i) grid.push_back(1.0 * i);
  const auto start = std::chrono::steady_clock::now();
  const auto s = tpd_series(d, {kPi / 4, 15, 16}, grid);
  const std::chrono::duration<double> elapsed = std::chrono::steady_clock::now() - start;
  EXPECT_EQ(s.eta.size(), grid.size());
  EXPECT_LT(elapsed.count(), 1.0);
}
