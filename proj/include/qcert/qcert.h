/*
 * Copyright 2026 The qcert Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

/*
 * C interface to libqcert.
 *
 * Objects are opaque handles created by qcert_*_create / qcert_*_from_* and
 * released with the matching *_free. Every fallible call returns a
 * qcert_status; on failure qcert_last_error() describes the problem for the
 * calling thread until its next failing call.
 *
 * Complex data crosses the boundary as interleaved doubles (re, im, re, im,
 * ...). Matrices are row-major. Party subsets are 64-bit masks, bit i for
 * party i (0-based); party 0 is the most significant tensor factor.
 */

#ifndef QCERT_QCERT_H
#define QCERT_QCERT_H

#include <stddef.h>
#include <stdint.h>

#if defined(_WIN32)
#define QCERT_API __declspec(dllexport)
#else
#define QCERT_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum qcert_status {
  QCERT_OK = 0,
  QCERT_ERR_INVALID_ARGUMENT = 1,
  QCERT_ERR_DOMAIN = 2,
  QCERT_ERR_CAP_EXCEEDED = 3,
  QCERT_ERR_VALIDATION = 4,
  QCERT_ERR_BUFFER_TOO_SMALL = 5,
  QCERT_ERR_INTERNAL = 6
} qcert_status;

typedef enum qcert_verdict {
  QCERT_VERDICT_CONSISTENT = 0,
  QCERT_VERDICT_INCOMPATIBLE = 1,
  QCERT_VERDICT_INCONCLUSIVE = 2
} qcert_verdict;

typedef enum qcert_route {
  QCERT_ROUTE_PARTITIONS = 1,
  QCERT_ROUTE_PROJECTOR = 2,
  QCERT_ROUTE_SUBSET_SUM = 4,
  QCERT_ROUTE_ORACLE = 8
} qcert_route;

typedef struct qcert_state qcert_state;         /* pure vector or density matrix */
typedef struct qcert_marginals qcert_marginals; /* claimed reduced states */

typedef struct qcert_tolerances {
  double input;
  double numeric;
  double route;
  double verdict;
} qcert_tolerances;

typedef struct qcert_measure_result {
  int has_partitions;
  double partitions;
  int has_projector;
  double projector;
  int has_subset_sum;
  double subset_sum;
  int has_oracle;
  double oracle;
} qcert_measure_result;

typedef struct qcert_compat_result {
  double sum_odd_proper;
  double sum_even_proper;
  double lhs_proper;
  double global_purity;
  int best_case_global;
  double lhs;
  double bound;
  double slack;
  qcert_verdict verdict;
  size_t n_missing;
} qcert_compat_result;

typedef struct qcert_violation {
  uint64_t subset;
  uint64_t superset;
  double max_deviation;
} qcert_violation;

typedef struct qcert_monogamy_result {
  uint64_t index_set;
  double lhs;
  double rhs;
  int holds;
} qcert_monogamy_result;

typedef struct qcert_disorder_result {
  double lhs;
  double rhs;
  int holds;
} qcert_disorder_result;

QCERT_API const char* qcert_version(void);
QCERT_API const char* qcert_last_error(void);
QCERT_API qcert_tolerances qcert_default_tolerances(void);

QCERT_API size_t qcert_get_operator_cap(void);
QCERT_API qcert_status qcert_set_operator_cap(size_t cap);

/* ---- states ---------------------------------------------------------- */

/* `amplitudes` holds 2 * prod(dims) doubles. */
QCERT_API qcert_status qcert_state_create_pure(const int* dims, size_t n_parties, const double* amplitudes,
                                               size_t n_doubles, qcert_state** out);
/* `matrix` holds 2 * prod(dims)^2 doubles; validated as a density matrix. */
QCERT_API qcert_status qcert_state_create_mixed(const int* dims, size_t n_parties, const double* matrix,
                                                size_t n_doubles, qcert_state** out);
QCERT_API qcert_status qcert_state_w(int n_parties, qcert_state** out);
QCERT_API qcert_status qcert_state_ghz(int n_parties, qcert_state** out);
QCERT_API qcert_status qcert_state_random_pure(const int* dims, size_t n_parties, uint64_t seed,
                                               qcert_state** out);
QCERT_API qcert_status qcert_state_random_mixed(const int* dims, size_t n_parties, int rank, uint64_t seed,
                                                qcert_state** out);
QCERT_API void qcert_state_free(qcert_state* state);

QCERT_API int qcert_state_is_pure(const qcert_state* state);
QCERT_API size_t qcert_state_n_parties(const qcert_state* state);
QCERT_API size_t qcert_state_total_dim(const qcert_state* state);
QCERT_API qcert_status qcert_state_dims(const qcert_state* state, int* out, size_t capacity);
/* Interleaved amplitudes (pure) or row-major matrix entries (mixed). */
QCERT_API size_t qcert_state_data_len(const qcert_state* state);
QCERT_API qcert_status qcert_state_data(const qcert_state* state, double* out, size_t capacity);
/* Tr rho^2 of the state's density matrix. */
QCERT_API qcert_status qcert_state_purity(const qcert_state* state, double* out);

/* ---- measures -------------------------------------------------------- */

/* `routes` is a bitwise OR of qcert_route. Requires a pure state. Routes that
 * are undefined for the state (odd N) fail with QCERT_ERR_DOMAIN when
 * requested alone and are left unset when combined with others. */
QCERT_API qcert_status qcert_measure(const qcert_state* state, unsigned routes, qcert_measure_result* out);
/* Writes 2^N purities indexed by mask (entry 0 is 1). */
QCERT_API qcert_status qcert_subset_purities(const qcert_state* state, double* out, size_t capacity);

/* ---- marginal sets --------------------------------------------------- */

QCERT_API qcert_status qcert_marginals_create(const int* dims, size_t n_parties, qcert_marginals** out);
/* Every nonempty proper marginal of `state`. */
QCERT_API qcert_status qcert_marginals_from_state(const qcert_state* state, qcert_marginals** out);
/* Four-qubit family with W-state triples and mutually consistent lower marginals. */
QCERT_API qcert_status qcert_marginals_w_triplet(qcert_marginals** out);
QCERT_API void qcert_marginals_free(qcert_marginals* marginals);

/* `parties` is strictly increasing; `matrix` as in qcert_state_create_mixed. */
QCERT_API qcert_status qcert_marginals_add(qcert_marginals* marginals, const int* parties, size_t n_parties,
                                           const double* matrix, size_t n_doubles);
QCERT_API size_t qcert_marginals_n_parties(const qcert_marginals* marginals);
QCERT_API qcert_status qcert_marginals_dims(const qcert_marginals* marginals, int* out, size_t capacity);
QCERT_API size_t qcert_marginals_count(const qcert_marginals* marginals);
/* Entry `index` in increasing mask order. Pass out_matrix = NULL to query
 * the required length through out_len. */
QCERT_API qcert_status qcert_marginals_entry(const qcert_marginals* marginals, size_t index, uint64_t* out_mask,
                                             double* out_matrix, size_t capacity, size_t* out_len);
QCERT_API qcert_status qcert_marginals_missing(const qcert_marginals* marginals, uint64_t* out, size_t capacity,
                                               size_t* out_count);

/* ---- certificates ---------------------------------------------------- */

/* Pure global state assumed (full-set purity 1), any N. */
QCERT_API qcert_status qcert_check_pure(const qcert_marginals* marginals, qcert_compat_result* out);
/* Mixed global state, even N. has_global_purity = 0 uses the permissive 1. */
QCERT_API qcert_status qcert_check_mixed(const qcert_marginals* marginals, int has_global_purity,
                                         double global_purity, qcert_compat_result* out);
/* Tr rho_A^2 of every present entry, indexed by mask; absent masks get 0.
 * Needs capacity >= 2^N. */
QCERT_API qcert_status qcert_marginal_purities(const qcert_marginals* marginals, double* out, size_t capacity);
QCERT_API qcert_status qcert_consistency_precheck(const qcert_marginals* marginals, double tol,
                                                  qcert_violation* out, size_t capacity, size_t* out_count);
/* Mixed-state check on the marginals of a known even-N state. */
QCERT_API qcert_status qcert_self_check(const qcert_state* state, qcert_compat_result* out);

/* ---- monogamy and disorder ------------------------------------------- */

/* One result per even index set (size >= 2); count is 2^(N-1) - 1. */
QCERT_API qcert_status qcert_monogamy_scan(const qcert_state* state, qcert_monogamy_result* out,
                                           size_t capacity, size_t* out_count);
QCERT_API qcert_status qcert_disorder(const qcert_state* state, qcert_disorder_result* out);

#ifdef __cplusplus
}
#endif

#endif /* QCERT_QCERT_H */
