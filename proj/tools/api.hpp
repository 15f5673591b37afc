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

// RAII handles over the C interface. The CLI talks to the library only
// through these.

#pragma once

#include <cstddef>
#include <memory>
#include <stdexcept>
#include <string>
#include <vector>

#include "ccawalk/ccawalk.h"

namespace ccawalk::api {

class ApiError : public std::runtime_error {
 public:
  ApiError(ccw_status status, const std::string &message)
      : std::runtime_error(message), status_(status) {}
  ccw_status status() const { return status_; }

 private:
  ccw_status status_;
};

inline void check(ccw_status status) {
  if (status != CCW_OK) {
    throw ApiError(status, std::string(ccw_status_string(status)) + ": " + ccw_last_error());
  }
}

class Lattice {
 public:
  Lattice(int num_cavities, double omega, double hopping) {
    ccw_lattice *raw = nullptr;
    check(ccw_lattice_create(num_cavities, omega, hopping, &raw));
    handle_.reset(raw);
  }

  int size() const { return ccw_lattice_size(handle_.get()); }

  std::vector<double> frequencies() const {
    std::vector<double> out(static_cast<std::size_t>(size()));
    check(ccw_lattice_frequencies(handle_.get(), out.data(), out.size()));
    return out;
  }

  /// Row-major N x N.
  std::vector<double> correlation(const ccw_noon_input &input, double t,
                                  ccw_convention convention = CCW_CONVENTION_DERIVED) const {
    const auto n = static_cast<std::size_t>(size());
    std::vector<double> out(n * n);
    check(ccw_correlation_matrix(handle_.get(), &input, t, convention, out.data(), out.size()));
    return out;
  }

  std::vector<double> tpd_series(const ccw_noon_input &input, const std::vector<double> &times) const {
    std::vector<double> eta(times.size());
    check(ccw_tpd_series(handle_.get(), &input, times.data(), times.size(), eta.data()));
    return eta;
  }

 private:
  struct Deleter {
    void operator()(ccw_lattice *p) const { ccw_lattice_destroy(p); }
  };
  std::unique_ptr<ccw_lattice, Deleter> handle_;
};

struct CheckResult {
  std::string name;
  double deviation;
  double tolerance;
  bool passed;
};

class VerifyReport {
 public:
  explicit VerifyReport(const ccw_verify_options &options) {
    ccw_verify_report *raw = nullptr;
    check(ccw_verify_run(&options, &raw));
    handle_.reset(raw);
  }

  bool passed() const { return ccw_verify_report_passed(handle_.get()) != 0; }

  std::vector<CheckResult> checks() const {
    std::vector<CheckResult> out;
    const std::size_t count = ccw_verify_report_count(handle_.get());
    for (std::size_t i = 0; i < count; ++i) {
      const char *name = nullptr;
      CheckResult r{};
      int ok = 0;
      check(ccw_verify_report_check(handle_.get(), i, &name, &r.deviation, &r.tolerance, &ok));
      r.name = name;
      r.passed = ok != 0;
      out.push_back(std::move(r));
    }
    return out;
  }

  std::pair<int, ccw_noon_input> scenario() const {
    int32_t n = 0;
    ccw_noon_input in{};
    check(ccw_verify_report_scenario(handle_.get(), &n, &in));
    return {n, in};
  }

 private:
  struct Deleter {
    void operator()(ccw_verify_report *p) const { ccw_verify_report_destroy(p); }
  };
  std::unique_ptr<ccw_verify_report, Deleter> handle_;
};

inline double theta_for_concurrence(double c, ccw_branch branch) {
  double theta = 0.0;
  check(ccw_theta_for_concurrence(c, branch, &theta));
  return theta;
}

inline double concurrence(double theta) {
  const ccw_noon_input in{theta, 1, 2};
  double c = 0.0;
  check(ccw_concurrence(&in, &c));
  return c;
}

}  // namespace ccawalk::api
