// Copyright 2026 The GID Authors
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
//
#ifndef GID_GID_H_
#define GID_GID_H_

/* C interface to the earnings-indicator engine. All functions return a
 * gid_status; on failure gid_last_error() describes the cause (thread-local,
 * valid until the next call on the same thread). */

#include <stddef.h>
#include <stdint.h>

#if defined(GID_BUILDING_LIBRARY)
#define GID_EXPORT __attribute__((visibility("default")))
#else
#define GID_EXPORT
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum gid_status {
  GID_OK = 0,
  GID_INVALID_ARGUMENT = 1,
  GID_IO = 2,
  GID_SCHEMA = 3,
  GID_ORPHAN_JOB = 4,
  GID_DUPLICATE_KEY = 5,
  GID_MISSING_YEAR = 6,
  GID_INVALID_CONFIG = 7,
  GID_NOT_CONVERGED = 8,
  GID_DEGENERATE = 9,
  GID_INTERNAL = 10
} gid_status;

typedef struct gid_session gid_session;

GID_EXPORT const char* gid_status_name(gid_status status);
GID_EXPORT const char* gid_last_error(void);

/* Sessions hold a parsed run configuration. */
GID_EXPORT gid_status gid_session_open(const char* config_path, gid_session** out);
GID_EXPORT gid_status gid_session_open_json(const char* json, const char* base_dir, gid_session** out);
GID_EXPORT void gid_session_close(gid_session* session);
GID_EXPORT const char* gid_session_output_dir(const gid_session* session);
GID_EXPORT const char* gid_session_config_hash(const gid_session* session);

/* Stage names: gen impute samples measures akm indicators mobility decompose
 * microagg report. */
GID_EXPORT gid_status gid_run_stage(gid_session* session, const char* stage);
GID_EXPORT gid_status gid_run_pipeline(gid_session* session);

/* Copies the report text into buf (NUL-terminated, truncated to cap) and
 * stores the full length in *needed when non-null. */
GID_EXPORT gid_status gid_write_report(gid_session* session, char* buf, size_t cap, size_t* needed);

typedef struct gid_summary {
  size_t n;
  double mean;
  double sd;
  double p10;
  double p50;
  double p90;
  double p90_p10;
  double sd_2_56;
  double kelley;
  double cs_kurtosis;
  double gini; /* NaN when any value is negative */
} gid_summary;

GID_EXPORT gid_status gid_summarize(const double* values, size_t n, gid_summary* out);
GID_EXPORT gid_status gid_quantiles(const double* values, size_t n, const double* ps, size_t k, double* out);
GID_EXPORT gid_status gid_rank_percentiles(const double* values, size_t n, double* ranks);
GID_EXPORT gid_status gid_rank_slope(const double* rank_t, const double* rank_tz, size_t n, double* slope);

/* x is row-major n x p. */
GID_EXPORT gid_status gid_quantile_fit(const double* x, const double* y, size_t n, size_t p, double tau,
                                       double* beta, double* objective);

GID_EXPORT gid_status gid_microaggregate(const double* values, const int* year, const int* sex,
                                         const int* birth_year, size_t n, size_t min_bin_size, double* out);

/* Two-way fixed effects on rows (person[i], firm[i], y[i]). */
GID_EXPORT gid_status gid_two_way_fe(size_t n_persons, size_t n_firms, const uint32_t* person, const uint32_t* firm,
                                     const double* y, size_t rows, double tolerance, double* theta, double* psi,
                                     int* iterations);

#ifdef __cplusplus
}
#endif

#endif /* GID_GID_H_ */
