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

#include "ccawalk/ccawalk.h"

#include <exception>
#include <new>
#include <numbers>
#include <span>
#include <string>
#include <vector>

#include "ccawalk/error.hpp"
#include "ccawalk/lattice.hpp"
#include "ccawalk/observables.hpp"
#include "ccawalk/oracle.hpp"
#include "ccawalk/verify.hpp"

#ifndef CCAWALK_VERSION
#define CCAWALK_VERSION "unknown"
#endif

struct ccw_lattice {
  ccawalk::SpectralDecomposition decomp;
};

struct ccw_oracle {
  ccawalk::oracle::NoonOracle oracle;
};

struct ccw_verify_report {
  ccawalk::VerifyReport report;
};

namespace {

thread_local std::string g_last_error;

ccw_status fail(ccw_status status, std::string message) {
  g_last_error = std::move(message);
  return status;
}

// Runs body() and maps the library's exception types onto status codes.
template <typename Body>
ccw_status guarded(Body &&body) {
  try {
    body();
    return CCW_OK;
  } catch (const ccawalk::ValidationError &e) {
    return fail(CCW_ERR_VALIDATION, e.what());
  } catch (const ccawalk::SizeGuardError &e) {
    return fail(CCW_ERR_SIZE_GUARD, e.what());
  } catch (const std::bad_alloc &) {
    return fail(CCW_ERR_INTERNAL, "out of memory");
  } catch (const std::exception &e) {
    return fail(CCW_ERR_INTERNAL, e.what());
  } catch (...) {
    return fail(CCW_ERR_INTERNAL, "unknown error");
  }
}

ccawalk::NoonInput to_cpp(const ccw_noon_input &in) { return {in.theta, in.site_r, in.site_s}; }

ccawalk::CoefficientConvention to_cpp(ccw_convention c) {
  switch (c) {
    case CCW_CONVENTION_DERIVED: return ccawalk::CoefficientConvention::Derived;
    case CCW_CONVENTION_AS_PRINTED: return ccawalk::CoefficientConvention::AsPrinted;
  }
  throw ccawalk::ValidationError("unknown coefficient convention " + std::to_string(static_cast<int>(c)));
}

ccawalk::ConcurrenceBranch to_cpp(ccw_branch b) {
  switch (b) {
    case CCW_BRANCH_LOW: return ccawalk::ConcurrenceBranch::Low;
    case CCW_BRANCH_HIGH: return ccawalk::ConcurrenceBranch::High;
  }
  throw ccawalk::ValidationError("unknown concurrence branch " + std::to_string(static_cast<int>(b)));
}

ccw_status need_capacity(size_t len, size_t required) {
  if (len < required) {
    return fail(CCW_ERR_BUFFER_SIZE, "output buffer holds " + std::to_string(len) + " values, " +
                                         std::to_string(required) + " required");
  }
  return CCW_OK;
}

void write_real_row_major(const Eigen::MatrixXd &m, double *out) {
  for (Eigen::Index i = 0; i < m.rows(); ++i) {
    for (Eigen::Index j = 0; j < m.cols(); ++j) {
      *out++ = m(i, j);
    }
  }
}

void write_complex(const std::complex<double> &z, double *&out) {
  *out++ = z.real();
  *out++ = z.imag();
}

}  // namespace

#define CCW_REQUIRE(ptr)                                                  \
  do {                                                                    \
    if ((ptr) == nullptr) return fail(CCW_ERR_NULL_ARGUMENT, #ptr " is null"); \
  } while (0)

extern "C" {

const char *ccw_version(void) { return CCAWALK_VERSION; }

const char *ccw_last_error(void) { return g_last_error.c_str(); }

const char *ccw_status_string(ccw_status status) {
  switch (status) {
    case CCW_OK: return "ok";
    case CCW_ERR_VALIDATION: return "validation error";
    case CCW_ERR_SIZE_GUARD: return "size guard exceeded";
    case CCW_ERR_NULL_ARGUMENT: return "null argument";
    case CCW_ERR_BUFFER_SIZE: return "buffer too small";
    case CCW_ERR_INTERNAL: return "internal error";
  }
  return "unknown status";
}

ccw_status ccw_lattice_create(int32_t num_cavities, double omega, double hopping,
                              ccw_lattice **out) {
  CCW_REQUIRE(out);
  *out = nullptr;
  return guarded([&] {
    *out = new ccw_lattice{ccawalk::SpectralDecomposition({num_cavities, omega, hopping})};
  });
}

void ccw_lattice_destroy(ccw_lattice *lattice) { delete lattice; }

int32_t ccw_lattice_size(const ccw_lattice *lattice) {
  return lattice == nullptr ? 0 : lattice->decomp.size();
}

ccw_status ccw_lattice_frequencies(const ccw_lattice *lattice, double *out, size_t len) {
  CCW_REQUIRE(lattice);
  CCW_REQUIRE(out);
  const auto &f = lattice->decomp.frequencies();
  if (auto s = need_capacity(len, static_cast<size_t>(f.size())); s != CCW_OK) return s;
  for (Eigen::Index k = 0; k < f.size(); ++k) out[k] = f(k);
  return CCW_OK;
}

ccw_status ccw_lattice_transform(const ccw_lattice *lattice, double *out, size_t len) {
  CCW_REQUIRE(lattice);
  CCW_REQUIRE(out);
  const auto n = static_cast<size_t>(lattice->decomp.size());
  if (auto s = need_capacity(len, n * n); s != CCW_OK) return s;
  write_real_row_major(lattice->decomp.transform(), out);
  return CCW_OK;
}

ccw_status ccw_propagator_matrix(const ccw_lattice *lattice, double t, double *out, size_t len) {
  CCW_REQUIRE(lattice);
  CCW_REQUIRE(out);
  const auto n = static_cast<size_t>(lattice->decomp.size());
  if (auto s = need_capacity(len, 2 * n * n); s != CCW_OK) return s;
  return guarded([&] {
    const auto g = ccawalk::propagator_matrix(lattice->decomp, t);
    double *p = out;
    for (Eigen::Index j = 0; j < g.entries.rows(); ++j) {
      for (Eigen::Index l = 0; l < g.entries.cols(); ++l) write_complex(g.entries(j, l), p);
    }
  });
}

ccw_status ccw_propagator_columns(const ccw_lattice *lattice, double t, const int32_t *sites,
                                  size_t num_sites, double *out, size_t len) {
  CCW_REQUIRE(lattice);
  if (num_sites > 0) {
    CCW_REQUIRE(sites);
    CCW_REQUIRE(out);
  }
  const auto n = static_cast<size_t>(lattice->decomp.size());
  if (auto s = need_capacity(len, 2 * n * num_sites); s != CCW_OK) return s;
  return guarded([&] {
    const std::vector<ccawalk::CavityIndex> idx(sites, sites + num_sites);
    const auto cols = ccawalk::propagator_columns(lattice->decomp, t, idx);
    double *p = out;
    for (const auto &c : cols) {
      for (Eigen::Index j = 0; j < c.values.size(); ++j) write_complex(c.values(j), p);
    }
  });
}

ccw_status ccw_concurrence(const ccw_noon_input *input, double *out) {
  CCW_REQUIRE(input);
  CCW_REQUIRE(out);
  return guarded([&] {
    if (!(input->theta >= 0.0 && input->theta <= std::numbers::pi / 2)) {
      throw ccawalk::ValidationError("theta must lie in [0, pi/2]");
    }
    *out = ccawalk::concurrence(to_cpp(*input));
  });
}

ccw_status ccw_theta_for_concurrence(double concurrence, ccw_branch branch, double *theta_out) {
  CCW_REQUIRE(theta_out);
  return guarded([&] {
    *theta_out = ccawalk::theta_for_concurrence(concurrence, to_cpp(branch));
  });
}

ccw_status ccw_correlation_matrix(const ccw_lattice *lattice, const ccw_noon_input *input,
                                  double t, ccw_convention convention, double *out, size_t len) {
  CCW_REQUIRE(lattice);
  CCW_REQUIRE(input);
  CCW_REQUIRE(out);
  const auto n = static_cast<size_t>(lattice->decomp.size());
  if (auto s = need_capacity(len, n * n); s != CCW_OK) return s;
  return guarded([&] {
    write_real_row_major(
        ccawalk::correlation_matrix(lattice->decomp, to_cpp(*input), t, to_cpp(convention)).entries,
        out);
  });
}

ccw_status ccw_tpd_degree(const ccw_lattice *lattice, const ccw_noon_input *input, double t,
                          double *eta_out) {
  CCW_REQUIRE(lattice);
  CCW_REQUIRE(input);
  CCW_REQUIRE(eta_out);
  return guarded([&] { *eta_out = ccawalk::tpd_degree(lattice->decomp, to_cpp(*input), t); });
}

ccw_status ccw_tpd_series(const ccw_lattice *lattice, const ccw_noon_input *input,
                          const double *times, size_t num_times, double *eta_out) {
  CCW_REQUIRE(lattice);
  CCW_REQUIRE(input);
  if (num_times > 0) {
    CCW_REQUIRE(times);
    CCW_REQUIRE(eta_out);
  }
  return guarded([&] {
    const auto series = ccawalk::tpd_series(lattice->decomp, to_cpp(*input),
                                            std::span<const double>(times, num_times));
    std::copy(series.eta.begin(), series.eta.end(), eta_out);
  });
}

ccw_status ccw_oracle_create(int32_t num_cavities, double omega, double hopping, ccw_oracle **out) {
  CCW_REQUIRE(out);
  *out = nullptr;
  return guarded([&] {
    *out = new ccw_oracle{ccawalk::oracle::NoonOracle({num_cavities, omega, hopping})};
  });
}

void ccw_oracle_destroy(ccw_oracle *oracle) { delete oracle; }

int64_t ccw_oracle_dimension(const ccw_oracle *oracle) {
  return oracle == nullptr ? 0 : static_cast<int64_t>(oracle->oracle.basis().dimension());
}

ccw_status ccw_oracle_eigenvalues(const ccw_oracle *oracle, double *out, size_t len) {
  CCW_REQUIRE(oracle);
  CCW_REQUIRE(out);
  const auto &ev = oracle->oracle.evolver().eigenvalues();
  if (auto s = need_capacity(len, static_cast<size_t>(ev.size())); s != CCW_OK) return s;
  for (Eigen::Index i = 0; i < ev.size(); ++i) out[i] = ev(i);
  return CCW_OK;
}

ccw_status ccw_oracle_correlation(const ccw_oracle *oracle, const ccw_noon_input *input, double t,
                                  double *out, size_t len) {
  CCW_REQUIRE(oracle);
  CCW_REQUIRE(input);
  CCW_REQUIRE(out);
  const auto n = static_cast<size_t>(oracle->oracle.basis().num_cavities());
  if (auto s = need_capacity(len, n * n); s != CCW_OK) return s;
  return guarded(
      [&] { write_real_row_major(oracle->oracle.correlation(to_cpp(*input), t).entries, out); });
}

void ccw_verify_options_init(ccw_verify_options *options) {
  if (options == nullptr) return;
  const ccawalk::VerifyOptions d;
  *options = ccw_verify_options{};
  options->num_cavities = d.lattice.num_cavities;
  options->omega = d.lattice.omega;
  options->hopping = d.lattice.hopping;
  options->input = {d.input.theta, d.input.site_r, d.input.site_s};
  options->t_end = d.t_end;
  options->time_samples = d.time_samples;
  options->max_sites = d.max_sites;
  options->random_cases = d.random_cases;
  options->seed = d.seed;
  options->convention = CCW_CONVENTION_DERIVED;
}

ccw_status ccw_verify_run(const ccw_verify_options *options, ccw_verify_report **out) {
  CCW_REQUIRE(options);
  CCW_REQUIRE(out);
  *out = nullptr;
  return guarded([&] {
    ccawalk::VerifyOptions opts;
    opts.lattice = {options->num_cavities, options->omega, options->hopping};
    opts.input = to_cpp(options->input);
    opts.t_end = options->t_end;
    opts.time_samples = options->time_samples;
    opts.max_sites = options->max_sites;
    opts.random_cases = options->random_cases;
    opts.seed = options->seed;
    opts.convention = to_cpp(options->convention);
    *out = new ccw_verify_report{ccawalk::run_verification(opts)};
  });
}

void ccw_verify_report_destroy(ccw_verify_report *report) { delete report; }

int ccw_verify_report_passed(const ccw_verify_report *report) {
  return report != nullptr && report->report.passed() ? 1 : 0;
}

size_t ccw_verify_report_count(const ccw_verify_report *report) {
  return report == nullptr ? 0 : report->report.checks.size();
}

ccw_status ccw_verify_report_check(const ccw_verify_report *report, size_t index,
                                   const char **name, double *deviation, double *tolerance,
                                   int *passed) {
  CCW_REQUIRE(report);
  if (index >= report->report.checks.size()) {
    return fail(CCW_ERR_VALIDATION, "check index out of range");
  }
  const auto &c = report->report.checks[index];
  if (name) *name = c.name.c_str();
  if (deviation) *deviation = c.deviation;
  if (tolerance) *tolerance = c.tolerance;
  if (passed) *passed = c.passed ? 1 : 0;
  return CCW_OK;
}

ccw_status ccw_verify_report_scenario(const ccw_verify_report *report, int32_t *num_cavities,
                                      ccw_noon_input *input) {
  CCW_REQUIRE(report);
  if (num_cavities) *num_cavities = report->report.oracle_lattice.num_cavities;
  if (input) {
    const auto &in = report->report.oracle_input;
    *input = {in.theta, in.site_r, in.site_s};
  }
  return CCW_OK;
}

}  // extern "C"
