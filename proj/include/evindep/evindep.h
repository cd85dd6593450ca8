// Copyright 2026 The evindep Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     https://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

/*
 * evindep C API.
 *
 * Every object is an opaque handle owned by the caller and released with the
 * matching *_free function. Functions return an evd_status; on failure
 * evd_last_error() describes the problem for the calling thread until the
 * next failing call. Output handles are only written on success.
 *
 * Subsets are bitmasks over frame elements: bit i is element i. On a product
 * frame Ω×Θ, the pair (ω_i, θ_j) is element i * |Θ| + j.
 */
#ifndef EVINDEP_EVINDEP_H_
#define EVINDEP_EVINDEP_H_

#include <stddef.h>
#include <stdint.h>

#if defined(EVINDEP_BUILDING_LIBRARY)
#define EVD_API __attribute__((visibility("default")))
#else
#define EVD_API
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum evd_status {
  EVD_OK = 0,
  EVD_ERR_NON_UNIT_SUM = 1,
  EVD_ERR_NEGATIVE_MASS = 2,
  EVD_ERR_DUPLICATE_SUBSET = 3,
  EVD_ERR_SUBSET_OUT_OF_RANGE = 4,
  EVD_ERR_FRAME_MISMATCH = 5,
  EVD_ERR_EMPTY_LIST = 6,
  EVD_ERR_EMPTY_CONDITIONER = 7,
  EVD_ERR_FOCAL_OUTSIDE_CONDITIONER = 8,
  EVD_ERR_ALPHA_OUT_OF_RANGE = 9,
  EVD_ERR_TOTAL_CONFLICT = 10,
  EVD_ERR_EMPTY_CLUSTER = 11,
  EVD_ERR_TOO_FEW_OBJECTS = 12,
  EVD_ERR_PARTITION_MISMATCH = 13,
  EVD_ERR_LENGTH_MISMATCH = 14,
  EVD_ERR_NOT_A_DERANGEMENT = 15,
  EVD_ERR_INVALID_FRAME = 16,
  EVD_ERR_INVALID_ARGUMENT = 17,
  EVD_ERR_PARSE = 18,
  EVD_ERR_IO = 19,
  EVD_ERR_NULL_ARGUMENT = 100,
  EVD_ERR_BUFFER_TOO_SMALL = 101,
  EVD_ERR_INTERNAL = 102
} evd_status;

typedef struct evd_mass evd_mass;
typedef struct evd_dataset evd_dataset;
typedef struct evd_report evd_report;

EVD_API const char* evd_version(void);
EVD_API const char* evd_status_name(evd_status status);
EVD_API const char* evd_last_error(void);
/* Frees strings returned through char** outputs. */
EVD_API void evd_string_free(char* s);

/* ---- Mass functions --------------------------------------------------- */

/* Validated construction; zero masses are dropped. */
EVD_API evd_status evd_mass_create(const char* const* labels, size_t n_labels,
                                   const uint32_t* sets, const double* masses,
                                   size_t n_focals, evd_mass** out);
EVD_API evd_status evd_mass_vacuous(const char* const* labels, size_t n_labels,
                                    evd_mass** out);
EVD_API evd_status evd_mass_clone(const evd_mass* m, evd_mass** out);
EVD_API void evd_mass_free(evd_mass* m);

EVD_API size_t evd_mass_frame_size(const evd_mass* m);
/* NULL when out of range. Valid while m lives. */
EVD_API const char* evd_mass_label(const evd_mass* m, size_t index);
EVD_API size_t evd_mass_focal_count(const evd_mass* m);
/* Focals are ordered by increasing bitmask. */
EVD_API evd_status evd_mass_focal(const evd_mass* m, size_t index,
                                  uint32_t* set, double* mass);
/* 0 for non-focal sets. */
EVD_API double evd_mass_value(const evd_mass* m, uint32_t set);

EVD_API evd_status evd_mass_from_json(const char* text, evd_mass** out);
EVD_API evd_status evd_mass_to_json(const evd_mass* m, char** out);
EVD_API evd_status evd_mass_load(const char* path, evd_mass** out);
EVD_API evd_status evd_mass_save(const evd_mass* m, const char* path);

/* ---- Operators -------------------------------------------------------- */

typedef enum evd_rule {
  EVD_RULE_CONJUNCTIVE = 0,
  EVD_RULE_DISJUNCTIVE = 1,
  EVD_RULE_MEAN = 2
} evd_rule;

/* Left fold for the conjunctive and disjunctive rules, plain mean otherwise. */
EVD_API evd_status evd_combine(evd_rule rule, const evd_mass* const* masses,
                               size_t n, evd_mass** out);
EVD_API evd_status evd_condition(const evd_mass* m, uint32_t set, evd_mass** out);
EVD_API evd_status evd_decondition(const evd_mass* m, uint32_t set,
                                   evd_mass** out);
EVD_API evd_status evd_discount(const evd_mass* m, double alpha, evd_mass** out);
/* Same result as evd_discount, computed on the product frame Ω×{F,F̄}. */
EVD_API evd_status evd_reliability_discount(const evd_mass* m, double alpha,
                                            evd_mass** out);
/* probs must hold evd_mass_frame_size(m) values. */
EVD_API evd_status evd_pignistic(const evd_mass* m, double* probs,
                                 size_t capacity);
EVD_API evd_status evd_jousselme(const evd_mass* a, const evd_mass* b,
                                 double* out);
/* Index of the singleton with maximal pignistic probability. */
EVD_API evd_status evd_decision_class(const evd_mass* m, size_t* out);

/* ---- Dependence-aware adjustment -------------------------------------- */

/* Mass over {I, P, Pbar}; fields are the focal sets I, P, Pbar, I∪P, I∪Pbar
   and I∪P∪Pbar. */
typedef struct evd_dependence {
  double independent;
  double positive;
  double negative;
  double indep_or_pos;
  double indep_or_neg;
  double ignorance;
} evd_dependence;

/* I: a(1-b), P: ab(1-g), Pbar: abg, I∪P: (1-a)(1-g), I∪Pbar: (1-a)g. */
EVD_API evd_status evd_dependence_from_parameters(double alpha, double beta,
                                                  double gamma,
                                                  evd_dependence* out);
EVD_API evd_status evd_independence_adjust(const evd_mass* m,
                                           const evd_dependence* dependence,
                                           evd_mass** out);
EVD_API evd_status evd_closed_form_adjust(const evd_mass* m,
                                          const evd_dependence* dependence,
                                          evd_mass** out);

/* Product-frame intermediates on Ω×{I,P,Pbar}; element labels "<ω>|<θ>". */
typedef struct evd_adjust_trace {
  evd_mass* extended;
  evd_mass* deconditioned_indep;
  evd_mass* deconditioned_neg;
  evd_mass* combined;
  evd_mass* marginal;
} evd_adjust_trace;

EVD_API evd_status evd_independence_adjust_trace(
    const evd_mass* m, const evd_dependence* dependence, evd_adjust_trace* out);
EVD_API void evd_adjust_trace_free(evd_adjust_trace* trace);

/* Bitmask of left × right on a product frame with n_right right elements. */
EVD_API uint32_t evd_product_rectangle(size_t n_right, uint32_t left,
                                       uint32_t right);

/* ---- Datasets --------------------------------------------------------- */

EVD_API evd_status evd_dataset_create(const char* source,
                                      const evd_mass* const* masses, size_t n,
                                      evd_dataset** out);
EVD_API void evd_dataset_free(evd_dataset* d);
EVD_API size_t evd_dataset_size(const evd_dataset* d);
EVD_API const char* evd_dataset_source(const evd_dataset* d);
/* Copy of the mass for object index. */
EVD_API evd_status evd_dataset_mass(const evd_dataset* d, size_t index,
                                    evd_mass** out);
EVD_API evd_status evd_dataset_from_json(const char* text, evd_dataset** out);
EVD_API evd_status evd_dataset_to_json(const evd_dataset* d, char** out);
EVD_API evd_status evd_dataset_load(const char* path, evd_dataset** out);
EVD_API evd_status evd_dataset_save(const evd_dataset* d, const char* path);
/* 1 when the JSON text holds a dataset, 0 for a single mass function. */
EVD_API evd_status evd_is_dataset_json(const char* text, int* out);

typedef enum evd_scenario {
  EVD_SCENARIO_INDEPENDENT = 0,
  EVD_SCENARIO_POSITIVE = 1,
  EVD_SCENARIO_NEGATIVE = 2
} evd_scenario;

typedef struct evd_generate_config {
  size_t frame_size;
  size_t n;
  uint64_t seed;
  evd_scenario scenario;
  /* frame_size singleton indices forming a derangement; NULL for the cyclic
     shift k -> k+1. */
  const size_t* contradiction;
} evd_generate_config;

EVD_API evd_status evd_generate(const evd_generate_config* config,
                                evd_dataset** first, evd_dataset** second);

/* ---- Clustering and independence analysis ----------------------------- */

/* assignment must hold evd_dataset_size(d) entries. */
EVD_API evd_status evd_cluster(const evd_dataset* d, size_t n_clusters,
                               uint64_t seed, size_t* assignment,
                               size_t capacity);

typedef enum evd_alpha_policy {
  EVD_ALPHA_ONE = 0,
  EVD_ALPHA_CLUSTER_SIZE = 1
} evd_alpha_policy;

typedef struct evd_analysis_config {
  size_t clusters; /* 0: frame size */
  uint64_t seed;
  evd_alpha_policy alpha_policy;
} evd_analysis_config;

typedef enum evd_direction {
  EVD_FORWARD = 0,  /* S1 relative to S2 */
  EVD_BACKWARD = 1  /* S2 relative to S1 */
} evd_direction;

typedef struct evd_direction_summary {
  double m_independent; /* m(I) over {I, Ibar} */
  double m_dependent;   /* m(Ibar) */
  double m_ignorance;   /* m(I ∪ Ibar) */
  evd_dependence dependence;
  double independence_degree; /* I_d = BetP(I) */
  double dependence_degree;   /* 1 - I_d */
  double betp_independent;
  double betp_positive;
  double betp_negative;
  size_t n_pairs;
} evd_direction_summary;

typedef struct evd_pair_link {
  size_t row;
  size_t col;
  double beta;
  double alpha;
  double conf;
} evd_pair_link;

EVD_API evd_status evd_analyze(const evd_dataset* first,
                               const evd_dataset* second,
                               const evd_analysis_config* config,
                               evd_report** out);
EVD_API void evd_report_free(evd_report* r);
EVD_API size_t evd_report_clusters(const evd_report* r);
EVD_API evd_status evd_report_direction(const evd_report* r, evd_direction dir,
                                        evd_direction_summary* out);
/* Pairs in the order the greedy matching took them. */
EVD_API evd_status evd_report_pair(const evd_report* r, evd_direction dir,
                                   size_t index, evd_pair_link* out);
/* Correspondence matrix entry; rows index the referent source's clusters. */
EVD_API evd_status evd_report_beta(const evd_report* r, evd_direction dir,
                                   size_t row, size_t col, double* out);
/* source: 0 for S1, 1 for S2. */
EVD_API evd_status evd_report_assignment(const evd_report* r, int source,
                                         size_t* assignment, size_t capacity);
EVD_API evd_status evd_report_to_json(const evd_report* r, char** out);

#ifdef __cplusplus
}
#endif

#endif /* EVINDEP_EVINDEP_H_ */
