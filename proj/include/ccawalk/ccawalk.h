/*
 * Copyright 2026 The ccawalk Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *      http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

/*
 * C interface to libccawalk: two-photon transport in a uniform open chain of
 * coupled cavities.
 *
 * Conventions
 *   - Cavity indices are 1-based (1..N) everywhere.
 *   - Matrices are written row-major into caller-provided buffers. Complex
 *     values are interleaved (re, im) pairs, so an N x N complex matrix needs
 *     2*N*N doubles.
 *   - Every fallible call returns a ccw_status. On failure a human-readable
 *     message is available from ccw_last_error() on the same thread until the
 *     next failing call.
 *   - Handles are immutable after creation and may be shared across threads.
 */

#ifndef CCAWALK_H_
#define CCAWALK_H_

#include <stddef.h>
#include <stdint.h>

#if defined(_WIN32)
#  if defined(CCAWALK_BUILDING)
#    define CCW_API __declspec(dllexport)
#  else
#    define CCW_API __declspec(dllimport)
#  endif
#else
#  define CCW_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum ccw_status {
  CCW_OK = 0,
  CCW_ERR_VALIDATION = 1, /* input violates a documented invariant */
  CCW_ERR_SIZE_GUARD = 2, /* dense oracle would exceed its dimension limit */
  CCW_ERR_NULL_ARGUMENT = 3,
  CCW_ERR_BUFFER_SIZE = 4, /* output buffer too small */
  CCW_ERR_INTERNAL = 5
} ccw_status;

typedef enum ccw_branch { CCW_BRANCH_LOW = 0, CCW_BRANCH_HIGH = 1 } ccw_branch;

typedef enum ccw_convention {
  CCW_CONVENTION_DERIVED = 0,
  CCW_CONVENTION_AS_PRINTED = 1
} ccw_convention;

typedef struct ccw_noon_input {
  double theta;  /* [0, pi/2] */
  int32_t site_r;
  int32_t site_s;
} ccw_noon_input;

/* Opaque handles. */
typedef struct ccw_lattice ccw_lattice;
typedef struct ccw_oracle ccw_oracle;
typedef struct ccw_verify_report ccw_verify_report;

CCW_API const char *ccw_version(void);
CCW_API const char *ccw_last_error(void);
CCW_API const char *ccw_status_string(ccw_status status);

/* ---- lattice and spectral decomposition ---- */

CCW_API ccw_status ccw_lattice_create(int32_t num_cavities, double omega, double hopping,
                                      ccw_lattice **out);
CCW_API void ccw_lattice_destroy(ccw_lattice *lattice);
CCW_API int32_t ccw_lattice_size(const ccw_lattice *lattice);

/* N values: Omega_1..Omega_N. */
CCW_API ccw_status ccw_lattice_frequencies(const ccw_lattice *lattice, double *out, size_t len);
/* N*N values: S(j,k) at out[(j-1)*N + (k-1)]. */
CCW_API ccw_status ccw_lattice_transform(const ccw_lattice *lattice, double *out, size_t len);

/* 2*N*N doubles: G_{jl}(t), row-major, interleaved complex. */
CCW_API ccw_status ccw_propagator_matrix(const ccw_lattice *lattice, double t, double *out,
                                         size_t len);
/* 2*N*num_sites doubles: column c holds G_{j,sites[c]}(t) for j = 1..N,
 * stored contiguously (column-major across the requested sites). */
CCW_API ccw_status ccw_propagator_columns(const ccw_lattice *lattice, double t,
                                          const int32_t *sites, size_t num_sites, double *out,
                                          size_t len);

/* ---- states and observables ---- */

CCW_API ccw_status ccw_concurrence(const ccw_noon_input *input, double *out);
CCW_API ccw_status ccw_theta_for_concurrence(double concurrence, ccw_branch branch,
                                             double *theta_out);

/* N*N values: P_mn(t) row-major. */
CCW_API ccw_status ccw_correlation_matrix(const ccw_lattice *lattice, const ccw_noon_input *input,
                                          double t, ccw_convention convention, double *out,
                                          size_t len);
CCW_API ccw_status ccw_tpd_degree(const ccw_lattice *lattice, const ccw_noon_input *input,
                                  double t, double *eta_out);
/* times must be strictly increasing and non-negative; eta_out has num_times
 * slots. */
CCW_API ccw_status ccw_tpd_series(const ccw_lattice *lattice, const ccw_noon_input *input,
                                  const double *times, size_t num_times, double *eta_out);

/* ---- Fock-space oracle ---- */

CCW_API ccw_status ccw_oracle_create(int32_t num_cavities, double omega, double hopping,
                                     ccw_oracle **out);
CCW_API void ccw_oracle_destroy(ccw_oracle *oracle);
CCW_API int64_t ccw_oracle_dimension(const ccw_oracle *oracle);
/* D values, ascending. */
CCW_API ccw_status ccw_oracle_eigenvalues(const ccw_oracle *oracle, double *out, size_t len);
/* N*N values: P_mn(t) from exact evolution of the NOON input. */
CCW_API ccw_status ccw_oracle_correlation(const ccw_oracle *oracle, const ccw_noon_input *input,
                                          double t, double *out, size_t len);

/* ---- verification suite ---- */

typedef struct ccw_verify_options {
  int32_t num_cavities;
  double omega;
  double hopping;
  ccw_noon_input input;
  double t_end;          /* absolute time */
  int32_t time_samples;  /* >= 2 */
  int32_t max_sites;     /* oracle chain length cap, >= 2 */
  int32_t random_cases;
  uint64_t seed;
  ccw_convention convention;
} ccw_verify_options;

/* Fills defaults: 8 sites, 16 samples, 200 random cases, derived convention. */
CCW_API void ccw_verify_options_init(ccw_verify_options *options);
CCW_API ccw_status ccw_verify_run(const ccw_verify_options *options, ccw_verify_report **out);
CCW_API void ccw_verify_report_destroy(ccw_verify_report *report);
CCW_API int ccw_verify_report_passed(const ccw_verify_report *report);
CCW_API size_t ccw_verify_report_count(const ccw_verify_report *report);
/* name stays valid for the lifetime of the report. */
CCW_API ccw_status ccw_verify_report_check(const ccw_verify_report *report, size_t index,
                                           const char **name, double *deviation,
                                           double *tolerance, int *passed);
/* Chain actually handed to the oracle after shrinking. */
CCW_API ccw_status ccw_verify_report_scenario(const ccw_verify_report *report,
                                              int32_t *num_cavities, ccw_noon_input *input);

#ifdef __cplusplus
}
#endif

#endif /* CCAWALK_H_ */
