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

// Acceptance suite. Prints one PASS/FAIL line per criterion and exits
// non-zero if any criterion fails.

#include <sys/wait.h>
#include <unistd.h>

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <numbers>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "ccawalk/lattice.hpp"
#include "ccawalk/observables.hpp"
#include "ccawalk/oracle.hpp"

using namespace ccawalk;
namespace fs = std::filesystem;

namespace {

constexpr double kPi = std::numbers::pi;

// Frozen diagonal-mass bound for the N=29, omega t = 83.57 snapshot: 1.5x the
// value 0.058556110674490 computed by both the closed form and the oracle.
constexpr double kFig1DiagonalBound = 0.0878;

int failures = 0;

void report(bool ok, int id, const std::string &what, const std::string &detail) {
  std::printf("%s  [%d] %s: %s\n", ok ? "PASS" : "FAIL", id, what.c_str(), detail.c_str());
  std::fflush(stdout);
  if (!ok) ++failures;
}

std::string fmt(const char *f, double a) {
  char buf[128];
  std::snprintf(buf, sizeof buf, f, a);
  return buf;
}

struct RandomCase {
  LatticeSpec lattice;
  NoonInput input;
  double t;
};

std::vector<RandomCase> random_cases(int count, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  auto uniform = [&](double lo, double hi) { return std::uniform_real_distribution<double>(lo, hi)(rng); };
  auto integer = [&](int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng); };
  std::vector<RandomCase> out;
  for (int i = 0; i < count; ++i) {
    RandomCase c;
    c.lattice.num_cavities = integer(2, 8);
    c.lattice.omega = 1.0;
    c.lattice.hopping = uniform(0.0, 2.0);
    c.input.theta = uniform(0.0, kPi / 2);
    c.input.site_r = integer(1, c.lattice.num_cavities);
    do {
      c.input.site_s = integer(1, c.lattice.num_cavities);
    } while (c.input.site_s == c.input.site_r);
    c.t = uniform(0.0, 50.0);
    out.push_back(c);
  }
  return out;
}

std::vector<double> grid(double t_end, int steps) {
  std::vector<double> t(static_cast<std::size_t>(steps) + 1);
  for (int i = 0; i <= steps; ++i) t[static_cast<std::size_t>(i)] = t_end * i / steps;
  return t;
}

// Eta over t in [0, 100/J] with 2000 steps for the 29-cavity chain.
TpdSeries plateau_run(double hopping, double concurrence) {
  const auto d = decompose({29, 1.0, hopping});
  const NoonInput in{theta_for_concurrence(concurrence, ConcurrenceBranch::Low), 15, 16};
  return tpd_series(d, in, grid(100.0 / hopping, 2000));
}

void criterion_oracle(const std::vector<RandomCase> &cases) {
  double worst = 0.0;
  for (const auto &c : cases) {
    const auto closed = correlation_matrix(decompose(c.lattice), c.input, c.t);
    const auto exact = oracle::NoonOracle(c.lattice).correlation(c.input, c.t);
    worst = std::max(worst, (closed.entries - exact.entries).cwiseAbs().maxCoeff());
  }
  report(worst < 1e-8, 1, "oracle equivalence over " + std::to_string(cases.size()) + " random cases",
         fmt("max |dP| = %.3e (tol 1e-8)", worst));
}

void criterion_invariants(const std::vector<RandomCase> &cases) {
  double unitarity = 0.0;
  double pair_sum = 0.0;
  double eta_lo = 0.0;
  double eta_hi = 0.0;
  double eta0 = 0.0;
  for (const auto &c : cases) {
    const auto d = decompose(c.lattice);
    const int n = c.lattice.num_cavities;
    const auto g = propagator_matrix(d, c.t).entries;
    unitarity = std::max(unitarity, (g * g.adjoint() - Eigen::MatrixXcd::Identity(n, n)).cwiseAbs().maxCoeff());
    pair_sum = std::max(pair_sum, std::abs(correlation_matrix(d, c.input, c.t).total() - 2.0));
    const double eta = tpd_degree(d, c.input, c.t);
    eta_lo = std::min(eta_lo, eta);
    eta_hi = std::max(eta_hi, eta);
    eta0 = std::max(eta0, std::abs(tpd_degree(d, c.input, 0.0)));
  }
  const bool ok = unitarity < 1e-10 && pair_sum < 1e-9 && eta_lo >= -1e-9 && eta_hi <= 1 + 1e-9 && eta0 < 1e-12;
  std::ostringstream s;
  s << "unitarity " << fmt("%.3e", unitarity) << " (tol 1e-10), |sum P - 2| " << fmt("%.3e", pair_sum)
    << " (tol 1e-9), eta in [" << fmt("%.6f", eta_lo) << ", " << fmt("%.6f", eta_hi) << "], |eta(0)| "
    << fmt("%.3e", eta0) << " (tol 1e-12)";
  report(ok, 2, "unitarity and normalization", s.str());
}

void criterion_snapshot() {
  const LatticeSpec l{29, 1.0, 1.0};
  const NoonInput in{kPi / 4, 15, 16};
  const double mass = correlation_matrix(decompose(l), in, 83.57).diagonal_mass();
  report(mass < kFig1DiagonalBound, 3, "N=29 snapshot at omega t = 83.57",
         fmt("diagonal mass = %.15f", mass) + fmt(" (bound %.4f)", kFig1DiagonalBound));
}

void criterion_median() {
  const TpdSeries s = plateau_run(0.1, 1.0);
  std::vector<double> tail;
  for (std::size_t i = 0; i < s.times.size(); ++i) {
    if (s.times[i] >= 20.0 / 0.1) tail.push_back(s.eta[i]);
  }
  std::sort(tail.begin(), tail.end());
  const std::size_t m = tail.size();
  const double median = m % 2 ? tail[m / 2] : 0.5 * (tail[m / 2 - 1] + tail[m / 2]);
  report(median > 0.9, 4, "J=0.1 plateau median eta",
         fmt("median = %.6f", median) + " over " + std::to_string(m) + " samples (need > 0.9)");
}

void criterion_ordering() {
  bool ok = true;
  std::ostringstream detail;
  std::ostringstream means;
  for (const double j : {0.01, 0.1}) {
    const TpdSeries c1 = plateau_run(j, 1.0);
    const TpdSeries c05 = plateau_run(j, 0.5);
    const TpdSeries c0 = plateau_run(j, 0.0);
    std::size_t total = 0;
    std::size_t ordered = 0;
    double m1 = 0.0, m05 = 0.0, m0 = 0.0;
    for (std::size_t i = 0; i < c1.times.size(); ++i) {
      if (c1.times[i] < 20.0 / j) continue;
      ++total;
      if (c1.eta[i] >= c05.eta[i] && c05.eta[i] >= c0.eta[i]) ++ordered;
      m1 += c1.eta[i];
      m05 += c05.eta[i];
      m0 += c0.eta[i];
    }
    const double frac = static_cast<double>(ordered) / static_cast<double>(total);
    ok = ok && frac >= 0.95;
    detail << "J=" << j << ": " << ordered << "/" << total << fmt(" = %.4f", frac) << "; ";
    means << "J=" << j << ": " << fmt("%.4f", m0 / total) << " < " << fmt("%.4f", m05 / total) << " < "
          << fmt("%.4f", m1 / total) << "; ";
  }
  report(ok, 5, "pointwise entanglement ordering on plateau", detail.str() + "need >= 0.95");
  std::printf("      plateau means eta(C=0) < eta(C=0.5) < eta(C=1): %s\n", means.str().c_str());
}

double first_crossing(double hopping) {
  const TpdSeries s = plateau_run(hopping, 1.0);
  for (std::size_t i = 0; i < s.times.size(); ++i) {
    if (s.eta[i] >= 0.5) return s.times[i];
  }
  return INFINITY;
}

void criterion_crossing() {
  const double strong = first_crossing(0.1);
  const double weak = first_crossing(0.01);
  report(strong < weak, 6, "first eta >= 0.5 crossing",
         fmt("t(J=0.1) = %.4g", strong) + fmt(", t(J=0.01) = %.4g", weak));
}

void criterion_spectrum() {
  std::mt19937_64 rng(7);
  double worst = 0.0;
  int checked = 0;
  for (int n = 2; n <= 8; ++n) {
    for (const double j : {0.0, 0.01, 0.1, 1.0, 2.0, std::uniform_real_distribution<double>(0, 2)(rng)}) {
      const LatticeSpec l{n, 1.0, j};
      const auto d = decompose(l);
      std::vector<double> sums;
      for (int k = 0; k < n; ++k) {
        for (int q = k; q < n; ++q) sums.push_back(d.frequencies()(k) + d.frequencies()(q));
      }
      std::sort(sums.begin(), sums.end());
      const Eigen::VectorXd ev = oracle::Evolver(oracle::build_two_photon_hamiltonian(l)).eigenvalues();
      for (std::size_t i = 0; i < sums.size(); ++i) {
        worst = std::max(worst, std::abs(ev(static_cast<Eigen::Index>(i)) - sums[i]));
      }
      ++checked;
    }
  }
  report(worst < 1e-10, 7, "two-photon spectrum equals pairwise mode sums",
         std::to_string(checked) + " chains, " + fmt("max deviation %.3e (tol 1e-10)", worst));
}

std::string slurp(const fs::path &p) {
  std::ifstream in(p, std::ios::binary);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

int run(const std::string &args) {
  const std::string cmd = std::string("\"") + CCAWALK_CLI_PATH + "\" " + args + " >/dev/null 2>&1";
  const int status = std::system(cmd.c_str());
  return WIFEXITED(status) ? WEXITSTATUS(status) : -1;
}

void criterion_determinism() {
  const fs::path dir = fs::temp_directory_path() / ("ccawalk_acceptance_" + std::to_string(::getpid()));
  fs::create_directories(dir);
  int compared = 0;
  std::string mismatch;
  for (const char *scenario : {"fig1", "fig2", "fig3"}) {
    const std::string config = std::string(CCAWALK_SCENARIO_DIR) + "/" + scenario + ".json";
    for (const char *command : {"spectrum", "correlation", "tpd", "sweep", "verify"}) {
      for (const char *format : {"csv", "json"}) {
        const std::string stem = std::string(scenario) + "_" + command + "_" + format;
        const fs::path a = dir / (stem + ".a");
        const fs::path b = dir / (stem + ".b");
        const std::string base = std::string(command) + " --config " + config + " --format " + format;
        const int ra = run(base + " --out " + a.string());
        const int rb = run(base + " --out " + b.string());
        if (ra != 0 || rb != 0 || slurp(a).empty() || slurp(a) != slurp(b)) {
          mismatch += " " + stem;
        }
        ++compared;
      }
    }
  }
  fs::remove_all(dir);
  report(mismatch.empty(), 8, "byte-identical reruns of shipped scenarios",
         std::to_string(compared) + " output pairs compared" + (mismatch.empty() ? "" : "; differing:" + mismatch));
}

}  // namespace

int main() {
  const auto cases = random_cases(200, 20140101);
  criterion_oracle(cases);
  criterion_invariants(cases);
  criterion_snapshot();
  criterion_median();
  criterion_ordering();
  criterion_crossing();
  criterion_spectrum();
  criterion_determinism();
  std::printf("%s: %d criterion(s) failed\n", failures == 0 ? "ALL PASS" : "FAILURES", failures);
  return failures == 0 ? 0 : 1;
}
